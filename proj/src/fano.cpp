#include "g2/fano.hpp"

#include <string>
#include <utility>

#include "g2/errors.hpp"

namespace g2 {

namespace {
std::string pair_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
}  // namespace

void check_pair_coverage(std::span<const std::array<int, 3>> lines) {
  int count[8][8] = {};
  for (const auto& line : lines) {
    for (int p : line)
      if (p < 1 || p > 7) throw FanoAxiomError("point " + std::to_string(p) + " outside 1..7", p, p);
    for (int u = 0; u < 3; ++u)
      for (int v = u + 1; v < 3; ++v) {
        int a = line[u];
        int b = line[v];
        if (a == b) throw FanoAxiomError("line repeats point " + std::to_string(a), a, b);
        if (a > b) std::swap(a, b);
        if (++count[a][b] == 2) throw FanoAxiomError("pair " + pair_name(a, b) + " covered twice", a, b);
      }
  }
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b)
      if (count[a][b] == 0) throw FanoAxiomError("pair " + pair_name(a, b) + " never covered", a, b);
}

}  // namespace g2
