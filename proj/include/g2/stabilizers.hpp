#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "g2/algebra.hpp"
#include "g2/exterior.hpp"
#include "g2/reconstruct.hpp"

namespace g2 {

/// Basis of a Lie subalgebra of gl(n), with the size of the linear system it
/// was solved from.
struct StabilizerResult {
  int ambient_dim = 0;
  std::size_t system_rows = 0;
  std::size_t system_cols = 0;
  std::vector<MatrixQ> basis;

  std::size_t dimension() const { return basis.size(); }
  /// Column-major flattenings, ready for subspace_equal.
  std::vector<VectorQ> flattened() const;
};

/// Infinitesimal action X·ω = Σ_m ω(…, X e_{i_m}, …), i.e.
/// Σ_{a,b} X(b,a) e^a ∧ (e_b ⌟ ω).
KForm lie_action(const MatrixQ& X, const KForm& omega);

/// The C(n,k) × n² system whose kernel is the stabilizer of ω (unknowns
/// flattened column-major).
MatrixQ form_stabilizer_system(const KForm& omega);
StabilizerResult form_stabilizer(const KForm& omega);

/// {X : Xᵀg + gX = 0}
StabilizerResult metric_stabilizer(const MatrixQ& g);

/// Derivations, posed on the imaginary part e_1..e_{dim-1} (the unit is
/// killed by every derivation): (dim-1)² unknowns, (dim-1)²·dim equations.
StabilizerResult derivation_algebra(const AlgebraSpec& algebra);
/// Same on all of gl(dim), without assuming D(e_0) = 0. Used as a cross-check.
StabilizerResult derivation_algebra_full(const AlgebraSpec& algebra);

/// Derivations that also kill e_unit (1 ≤ unit < dim). Throws
/// std::out_of_range for a bad index.
std::size_t unit_stabilizer_dim(const AlgebraSpec& algebra, int unit);

struct TwoFaces {
  bool equal = false;
  StabilizerResult stabilizer;   // of φ in gl(7)
  StabilizerResult derivations;  // of the reconstructed algebra, on its imaginary part
  Reconstruction reconstruction;
  bool metric_preserved = false;  // every stabilizer element is skew for the Engel gram
};
/// Throws NotRegular for degenerate φ.
TwoFaces two_faces_check(const KForm& phi);

/// Every X in stab(φ) satisfies Xᵀβ + βX = 0 for the raw Engel gram β.
bool stabilizer_preserves_metric(const KForm& phi);
/// An X with Xᵀβ + βX = 0 but X·φ ≠ 0, if one exists.
std::optional<MatrixQ> metric_not_form_witness(const KForm& phi);

bool annihilates(const MatrixQ& X, const KForm& omega);
/// Xᵀg + gX = 0
bool is_skew_for(const MatrixQ& X, const MatrixQ& g);
bool is_derivation(const MatrixQ& D, const AlgebraSpec& algebra);  // D on the imaginary part
MatrixQ bracket(const MatrixQ& X, const MatrixQ& Y);

// Sample forms for the stabilizer table.

/// Σ e_{2i-1} ∧ e_{2i} on Q^{2m}
KForm symplectic_form(int m);
/// (123) + (456) on Q^6
KForm threeform6();
/// e_0 ∧ φ + *φ on Q^8 with e_0 ↦ index 1 and e_i ↦ i+1, built from the
/// standard φ and its Hodge dual.
KForm cayley_form();
/// tr([x,y] z) on sl(3) in the basis E12, E13, E21, E23, E31, E32, E11-E22, E22-E33.
KForm sl3_form();
/// The traceless block-diagonal matrices gl(3) ⊕ gl(3) ⊂ gl(6) with both
/// blocks traceless: the stabilizer of threeform6 described directly.
std::vector<MatrixQ> sl3_pair_basis();

}  // namespace g2
