#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "g2/algebra.hpp"
#include "g2/exterior.hpp"

namespace g2 {

/// e_i ↦ signs[i] · e_{perm[i]} on a basis e_0..e_{n-1}; e_0 is always fixed.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPerm identity(int dim);
  int dim() const { return static_cast<int>(perm.size()); }

  /// (this ∘ other)(e_i) = this(other(e_i))
  SignedPerm compose(const SignedPerm& other) const;
  SignedPerm inverse() const;
  std::size_t order() const;
  /// Monomial matrix on the imaginary part, (dim-1)×(dim-1).
  MatrixQ imaginary_matrix() const;
  VectorQ apply(const VectorQ& v) const;
  std::string str() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;
};

/// Support triples of a 3-form with exactly seven terms, checked against the
/// projective-plane axioms. Throws FanoAxiomError naming the offending pair.
std::vector<Triple> fano_lines(const KForm& phi);
/// Same checks on an explicit line list.
void check_projective_plane(const std::vector<Triple>& lines);

/// Permutations of 1..7 mapping the line set to itself (all 5040 tried).
std::size_t collineation_group_order(const std::vector<Triple>& lines);

/// σ(e_i e_j) = σ(e_i) σ(e_j) in `b` for all basis pairs of `a`.
bool is_isomorphism(const SignedPerm& sigma, const AlgebraSpec& a, const AlgebraSpec& b);
inline bool is_automorphism(const SignedPerm& sigma, const AlgebraSpec& a) { return is_isomorphism(sigma, a, a); }

/// Closure of a generating set under composition.
std::vector<SignedPerm> generated_group(const std::vector<SignedPerm>& generators);

struct AutomorphismReport {
  std::size_t group_order = 0;        // all signed-permutation automorphisms
  std::size_t unsigned_shadow = 0;    // distinct underlying permutations
  std::vector<SignedPerm> elements;   // empty when generators_only
  std::optional<SignedPerm> order7;
  std::optional<SignedPerm> order3;
  std::size_t subgroup_order = 0;     // |<order7, order3>|
  bool subgroup_non_abelian = false;
};
/// Enumerates all signed permutations of the imaginary units (dim ≤ 8) that
/// are automorphisms, then picks the first order-7 element and the first
/// order-3 element generating a group of order 21 with it.
AutomorphismReport signed_automorphisms(const AlgebraSpec& algebra, bool generators_only = false);

/// First signed permutation carrying a's table to b's, in lexicographic
/// permutation order with sign patterns counted up from all-plus (so the
/// identity is tried first). Requires equal dimensions ≤ 8.
std::optional<SignedPerm> signed_iso_search(const AlgebraSpec& a, const AlgebraSpec& b);

}  // namespace g2
