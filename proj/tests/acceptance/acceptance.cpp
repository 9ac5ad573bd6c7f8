// Acceptance gate: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria (0 when all pass).

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "../oracles.hpp"
#include "g2/discrete.hpp"
#include "g2/exactla.hpp"
#include "g2/identities.hpp"
#include "g2/reconstruct.hpp"
#include "g2/stabilizers.hpp"

#ifndef G2FACES_PATH
#error "G2FACES_PATH must point at the g2faces binary"
#endif

using namespace g2;

namespace {

struct Gate {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

template <typename F>
double timed(F&& f) {
  const auto t = std::chrono::steady_clock::now();
  f();
  return seconds_since(t);
}

void criterion1(Gate& g) {
  StabilizerResult s;
  const double secs = timed([&] { s = form_stabilizer(standard_phi7()); });
  g.require(s.dimension() == 14, "dimension " + std::to_string(s.dimension()));
  g.require(s.system_rows == 35 && s.system_cols == 49, "system shape");
  g.require(oracle::rank(form_stabilizer_system(standard_phi7())) == 35, "oracle rank");
  g.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
}

void criterion2(Gate& g) {
  g.require(derivation_algebra(*algebras::octonions()).dimension() == 14, "O");
  g.require(derivation_algebra(*algebras::quaternions()).dimension() == 3, "H");
  g.require(derivation_algebra(*algebras::complex()).dimension() == 0, "C");
  g.require(derivation_algebra(*algebras::split_octonions()).dimension() == 14, "O'");
}

void criterion3(Gate& g) {
  const TwoFaces compact = two_faces_check(standard_phi7());
  const TwoFaces split = two_faces_check(form_from_algebra(*algebras::split_octonions()));
  g.require(compact.equal && compact.stabilizer.dimension() == 14, "compact subspaces");
  g.require(split.equal && split.stabilizer.dimension() == 14, "split subspaces");
  const Signature a = compact.reconstruction.signature, b = split.reconstruction.signature;
  g.require(a.positive == 7 && a.negative == 0 && a.zero == 0, "compact signature " + a.str());
  g.require(std::minmax(b.positive, b.negative) == std::minmax<std::size_t>(4, 3) && b.zero == 0,
            "split signature " + b.str());
}

void criterion4(Gate& g) {
  const Reconstruction r = reconstruct_octonions(standard_phi7());
  g.require(*r.algebra == *algebras::octonions(), "table differs from canonical octonions");
  const auto e = [&](int i) { return Element::basis(r.algebra, i); };
  g.require(e(1) * e(2) == e(4) && e(2) * e(3) == e(5), "e1e2 = e4, e2e3 = e5");
  g.require(r.orientation == 1, "orientation");
  g.require(form_from_algebra(*r.algebra) == standard_phi7(), "round trip");
  g.require(form_from_algebra(*r.algebra).str() == "(124) - (136) - (157) + (235) - (267) - (347) - (456)",
            "printed form");
}

void criterion5(Gate& g) {
  for (const auto& a : {algebras::complex(), algebras::split_complex(), algebras::quaternions(),
                        algebras::split_quaternions(), algebras::octonions(), algebras::split_octonions()}) {
    const auto c = is_composition(a);
    g.require(c.holds && c.defect.is_zero(), "composition " + a->label());
  }
  const auto sed = is_composition(algebras::sedenions());
  g.require(!sed.holds && sed.witness.has_value(), "sedenion witness");
  if (sed.witness) {
    const auto& [x, y] = *sed.witness;
    g.require(quadratic_form(x * y) != quadratic_form(x) * quadratic_form(y), "witness inequality");
  }
  g.require(!find_zero_divisor(algebras::octonions()).has_value(), "octonion zero divisor");
  for (const auto& a : {algebras::sedenions(), algebras::split_complex(), algebras::split_quaternions(),
                        algebras::split_octonions()}) {
    const auto z = find_zero_divisor(a);
    g.require(z.has_value() && (z->first * z->second).is_zero(), "zero divisor " + a->label());
  }
}

void criterion6(Gate& g) {
  g.require(format_identity(derive_identity(algebras::complex())) ==
                "(x0^2 + x1^2)*(y0^2 + y1^2) = (x0*y0 - x1*y1)^2 + (x0*y1 + x1*y0)^2",
            "two squares");
  g.require(format_identity(derive_identity(algebras::split_complex())) ==
                "(x0^2 - x1^2)*(y0^2 - y1^2) = (x0*y0 + x1*y1)^2 - (x0*y1 + x1*y0)^2",
            "split two squares");
  g.require(verify_identity(derive_identity(algebras::quaternions())).holds, "four squares");
  g.require(verify_identity(derive_identity(algebras::split_quaternions())).holds, "split four squares");
  bool eight = false;
  const double secs = timed([&] { eight = verify_identity(derive_identity(algebras::octonions())).holds; });
  g.require(eight, "eight squares");
  g.require(secs < 2.0, "eight-squares expansion " + std::to_string(secs) + " s");
}

void criterion7(Gate& g) {
  g.require(collineation_group_order(fano_lines(standard_phi7())) == 168, "collineations");
  const auto r = signed_automorphisms(*algebras::octonions(), true);
  g.require(r.order7 && r.order7->order() == 7, "order-7 element");
  g.require(r.order3 && r.order3->order() == 3, "order-3 element");
  g.require(r.subgroup_order == 21 && r.subgroup_non_abelian, "subgroup order 21, non-abelian");
  if (r.order7 && r.order3) {
    const auto group = generated_group({*r.order7, *r.order3});
    g.require(group.size() == 21, "independent closure");
    g.require(r.order7->compose(*r.order3) != r.order3->compose(*r.order7), "generators commute");
  }
}

void criterion8(Gate& g) {
  g.require(form_stabilizer(volume_form(7)).dimension() == 48, "vol7");
  g.require(form_stabilizer(symplectic_form(3)).dimension() == 21, "sympl6");
  g.require(metric_stabilizer(MatrixQ::Identity(7, 7)).dimension() == 21, "I7");
  g.require(form_stabilizer(threeform6()).dimension() == 16, "threeform6");
  g.require(form_stabilizer(cayley_form()).dimension() == 21, "cayley8");
  for (int i = 1; i <= 7; ++i)
    g.require(unit_stabilizer_dim(*algebras::octonions(), i) == 8, "unit stabilizer e" + std::to_string(i));
}

void criterion9(Gate& g) {
  std::mt19937 rng(9);
  constexpr int kCases = 200;
  const auto o = algebras::octonions(), s = algebras::split_octonions();

  for (const auto& a : {o, s})
    for (int t = 0; t < kCases; ++t) {
      const Element x = oracle::random_element(rng, a), y = oracle::random_element(rng, a);
      if (quadratic_form(x * y) != quadratic_form(x) * quadratic_form(y)) {
        g.require(false, "composition " + a->label());
        break;
      }
    }

  for (int t = 0; t < kCases; ++t) {
    const Element x = oracle::random_element(rng, s), y = oracle::random_element(rng, s),
                  z = oracle::random_element(rng, s);
    const Element A = associator(x, y, z);
    if (associator(y, x, z) != -A || associator(x, z, y) != -A || !associator(x, x, y).is_zero()) {
      g.require(false, "alternator antisymmetry");
      break;
    }
  }

  for (int t = 0; t < kCases; ++t) {
    const Element x = oracle::random_element(rng, o), y = oracle::random_element(rng, o);
    if (conjugate(x * y) != conjugate(y) * conjugate(x)) {
      g.require(false, "conjugation anti-automorphism");
      break;
    }
  }

  std::uniform_int_distribution<int> deg(1, 3);
  for (int t = 0; t < kCases; ++t) {
    const int p = deg(rng), q = deg(rng);
    const KForm a = oracle::random_form(rng, 7, p), b = oracle::random_form(rng, 7, q);
    const VectorQ x = oracle::random_vector(rng, 7);
    const KForm rhs = wedge(contract(x, a), b) + wedge(a, contract(x, b)) * Rational(p % 2 ? -1 : 1);
    if (contract(x, wedge(a, b)) != rhs) {
      g.require(false, "antiderivation");
      break;
    }
  }

  std::uniform_int_distribution<int> dim(3, 6);
  for (int t = 0; t < kCases; ++t) {
    const int n = dim(rng);
    std::uniform_int_distribution<int> k(1, n - 1);
    const KForm omega = oracle::random_form(rng, n, k(rng), 0.35);
    bool fine = true;
    for (const auto& X : form_stabilizer(omega).basis) fine = fine && oracle::annihilates(X, omega);
    if (!fine) {
      g.require(false, "stabilizer annihilation");
      break;
    }
  }

  const std::array<KForm, 3> objects = {standard_phi7(), threeform6(), symplectic_form(3)};
  std::array<StabilizerResult, 3> stabs;
  for (std::size_t i = 0; i < objects.size(); ++i) stabs[i] = form_stabilizer(objects[i]);
  for (int t = 0; t < kCases; ++t) {
    const std::size_t i = static_cast<std::size_t>(t) % objects.size();
    const int n = objects[i].n();
    MatrixQ X = MatrixQ::Zero(n, n), Y = X;
    for (const auto& B : stabs[i].basis) {
      X += B * oracle::small_rational(rng, 2, 1);
      Y += B * oracle::small_rational(rng, 2, 1);
    }
    const MatrixQ Z = bracket(X, Y);
    if (!oracle::annihilates(Z, objects[i]) || !in_span(stabs[i].flattened(), flatten(Z))) {
      g.require(false, "bracket closure");
      break;
    }
  }

  for (int t = 0; t < kCases; ++t) {
    const KForm phi = oracle::random_form(rng, 7, 3, 0.3);
    const Rational c = oracle::small_rational(rng);
    if (engel_metric(phi * c).gram != MatrixQ(engel_metric(phi).gram * (c * c * c))) {
      g.require(false, "engel homogeneity");
      break;
    }
  }
}

std::string run(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

nlohmann::json without_timing(nlohmann::json j) {
  for (auto& c : j.at("claims")) c.erase("millis");
  return j;
}

void criterion10(Gate& g) {
  const std::string cmd = std::string("\"") + G2FACES_PATH + "\" report-all --json -";
  int s1 = 0, s2 = 0;
  const std::string a = run(cmd, s1), b = run(cmd, s2);
  g.require(s1 == 0 && s2 == 0, "exit status " + std::to_string(s1) + "/" + std::to_string(s2));
  try {
    const auto ja = nlohmann::json::parse(a), jb = nlohmann::json::parse(b);
    g.require(without_timing(ja) == without_timing(jb), "claim payloads differ");
    bool all = !ja.at("claims").empty();
    for (const auto& c : ja.at("claims")) all = all && c.at("pass").get<bool>();
    g.require(all, "some claim failed");
  } catch (const std::exception& e) {
    g.require(false, std::string("bad json: ") + e.what());
  }
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<void(Gate&)>>, 10> criteria = {{
      {"stabilizer of the standard 3-form is 14-dim from a 35x49 system", criterion1},
      {"derivation algebra dimensions O=14, H=3, C=0, O'=14", criterion2},
      {"two faces coincide for compact and split forms with signatures {7,0}, {4,3}", criterion3},
      {"reconstruction reproduces the octonion table and round-trips the form", criterion4},
      {"composition through dim 8, sedenion witness, zero divisors", criterion5},
      {"two-, four- and eight-squares identities", criterion6},
      {"168 collineations, non-abelian subgroup of order 21", criterion7},
      {"stabilizer dimension ledger", criterion8},
      {"property suites, 200 cases each", criterion9},
      {"report-all is deterministic and passes", criterion10},
  }};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Gate gate;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(gate);
    } catch (const std::exception& e) {
      gate.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %zu: %s (%.2f s)%s\n", gate.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                seconds_since(start), gate.why.str().c_str());
    failed += gate.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failed;
}
