#include "g2/discrete.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "g2/errors.hpp"
#include "g2/fano.hpp"

namespace g2 {

SignedPerm SignedPerm::identity(int dim) {
  SignedPerm s{std::vector<int>(static_cast<std::size_t>(dim)), std::vector<int>(static_cast<std::size_t>(dim), 1)};
  std::iota(s.perm.begin(), s.perm.end(), 0);
  return s;
}

SignedPerm SignedPerm::compose(const SignedPerm& other) const {
  SignedPerm out = identity(dim());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto mid = static_cast<std::size_t>(other.perm[i]);
    out.perm[i] = perm[mid];
    out.signs[i] = other.signs[i] * signs[mid];
  }
  return out;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm out = identity(dim());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto j = static_cast<std::size_t>(perm[i]);
    out.perm[j] = static_cast<int>(i);
    out.signs[j] = signs[i];
  }
  return out;
}

std::size_t SignedPerm::order() const {
  const SignedPerm id = identity(dim());
  SignedPerm p = *this;
  std::size_t k = 1;
  while (p != id) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

MatrixQ SignedPerm::imaginary_matrix() const {
  const int m = dim() - 1;
  MatrixQ M = MatrixQ::Zero(m, m);
  for (int i = 1; i <= m; ++i) M(perm[static_cast<std::size_t>(i)] - 1, i - 1) = signs[static_cast<std::size_t>(i)];
  return M;
}

VectorQ SignedPerm::apply(const VectorQ& v) const {
  VectorQ out = VectorQ::Zero(v.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    out(perm[i]) += v(static_cast<Eigen::Index>(i)) * Rational(signs[i]);
  return out;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 1; i < perm.size(); ++i)
    os << (i > 1 ? " " : "") << i << "->" << (signs[i] < 0 ? "-" : "") << perm[i];
  os << "]";
  return os.str();
}

void check_projective_plane(const std::vector<Triple>& lines) {
  if (lines.size() != 7) throw FanoAxiomError("expected 7 lines, got " + std::to_string(lines.size()), 0, 0);
  check_pair_coverage(lines);
  for (std::size_t a = 0; a < lines.size(); ++a)
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      int common = 0;
      for (int p : lines[a])
        if (std::find(lines[b].begin(), lines[b].end(), p) != lines[b].end()) ++common;
      if (common != 1)
        throw FanoAxiomError("lines " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " meet in " +
                                 std::to_string(common) + " points",
                             static_cast<int>(a + 1), static_cast<int>(b + 1));
    }
  for (int p = 1; p <= 7; ++p) {
    const auto on = std::count_if(lines.begin(), lines.end(), [p](const Triple& t) {
      return std::find(t.begin(), t.end(), p) != t.end();
    });
    if (on != 3) throw FanoAxiomError("point " + std::to_string(p) + " lies on " + std::to_string(on) + " lines", p, p);
  }
}

std::vector<Triple> fano_lines(const KForm& phi) {
  if (phi.n() != 7 || phi.k() != 3) throw std::invalid_argument("Fano lines need a 3-form on Q^7");
  if (phi.size() != 7) throw std::invalid_argument("Fano lines need exactly 7 terms, got " + std::to_string(phi.size()));
  std::vector<Triple> lines;
  for (const auto& [I, c] : phi.terms()) lines.push_back({I[0], I[1], I[2]});
  check_projective_plane(lines);
  return lines;
}

namespace {

unsigned mask_of(const Triple& t) { return (1u << t[0]) | (1u << t[1]) | (1u << t[2]); }

}  // namespace

std::size_t collineation_group_order(const std::vector<Triple>& lines) {
  check_projective_plane(lines);
  std::set<unsigned> line_set;
  for (const auto& t : lines) line_set.insert(mask_of(t));
  std::array<int, 8> p{};
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const auto& t : lines)
      if (!line_set.contains(mask_of({p[static_cast<std::size_t>(t[0])], p[static_cast<std::size_t>(t[1])],
                                      p[static_cast<std::size_t>(t[2])]}))) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return count;
}

bool is_isomorphism(const SignedPerm& sigma, const AlgebraSpec& a, const AlgebraSpec& b) {
  const int d = a.dim();
  if (b.dim() != d || sigma.dim() != d) return false;
  if (a.is_signed_table() && b.is_signed_table()) {
    for (int i = 1; i < d; ++i)
      for (int j = 1; j < d; ++j) {
        const BasisProduct pa = a.signed_product(i, j);
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
        const BasisProduct pb = b.signed_product(sigma.perm[si], sigma.perm[sj]);
        const int lhs_sign = pa.sign * sigma.signs[static_cast<std::size_t>(pa.index)];
        const int lhs_index = sigma.perm[static_cast<std::size_t>(pa.index)];
        const int rhs_sign = pb.sign * sigma.signs[si] * sigma.signs[sj];
        if (lhs_sign != rhs_sign || (lhs_sign != 0 && lhs_index != pb.index)) return false;
      }
    return true;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      const VectorQ lhs = sigma.apply(a.product(i, j));
      const VectorQ rhs = b.product(sigma.perm[si], sigma.perm[sj]) * Rational(sigma.signs[si] * sigma.signs[sj]);
      if (lhs != rhs) return false;
    }
  return true;
}

namespace {

// Stops growing once more than `limit` elements have been found.
std::set<SignedPerm> closure(const std::vector<SignedPerm>& generators, std::size_t limit) {
  std::set<SignedPerm> seen{SignedPerm::identity(generators.front().dim())};
  std::vector<SignedPerm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SignedPerm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        SignedPerm y = g.compose(x);
        if (seen.insert(y).second) next.push_back(std::move(y));
        if (seen.size() > limit) return seen;
      }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

std::vector<SignedPerm> generated_group(const std::vector<SignedPerm>& generators) {
  if (generators.empty()) return {};
  const auto g = closure(generators, static_cast<std::size_t>(-1));
  return {g.begin(), g.end()};
}

namespace {

// Visits every signed permutation fixing e_0; stops when visit returns true.
template <typename Visit>
void for_each_signed_perm(int dim, Visit visit) {
  if (dim > 8) throw std::invalid_argument("signed permutation search limited to dim <= 8");
  SignedPerm s = SignedPerm::identity(dim);
  const unsigned patterns = 1u << (dim - 1);
  do {
    for (unsigned mask = 0; mask < patterns; ++mask) {
      for (int i = 1; i < dim; ++i) s.signs[static_cast<std::size_t>(i)] = (mask >> (i - 1)) & 1u ? -1 : 1;
      if (visit(s)) return;
    }
  } while (std::next_permutation(s.perm.begin() + 1, s.perm.end()));
}

}  // namespace

AutomorphismReport signed_automorphisms(const AlgebraSpec& algebra, bool generators_only) {
  AutomorphismReport r;
  std::vector<SignedPerm> all;
  for_each_signed_perm(algebra.dim(), [&](const SignedPerm& s) {
    if (is_automorphism(s, algebra)) all.push_back(s);
    return false;
  });
  r.group_order = all.size();
  std::set<std::vector<int>> shadow;
  for (const auto& s : all) shadow.insert(s.perm);
  r.unsigned_shadow = shadow.size();

  for (const auto& g : all) {
    if (g.order() != 7) continue;
    for (const auto& h : all) {
      if (h.order() != 3) continue;
      if (closure({g, h}, 21).size() == 21) {
        r.order7 = g;
        r.order3 = h;
        break;
      }
    }
    if (r.order7) break;
  }
  if (r.order7) {
    r.subgroup_order = generated_group({*r.order7, *r.order3}).size();
    r.subgroup_non_abelian = r.order7->compose(*r.order3) != r.order3->compose(*r.order7);
  }
  if (!generators_only) r.elements = std::move(all);
  return r;
}

std::optional<SignedPerm> signed_iso_search(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  std::optional<SignedPerm> found;
  for_each_signed_perm(a.dim(), [&](const SignedPerm& s) {
    if (!is_isomorphism(s, a, b)) return false;
    found = s;
    return true;
  });
  return found;
}

}  // namespace g2
