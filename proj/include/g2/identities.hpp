#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "g2/algebra.hpp"
#include "g2/polynomial.hpp"

namespace g2 {

/// (Σ s_i x_i²)(Σ s_j y_j²) = Σ t_k z_k(x,y)², with z_k(x,y) = Σ c_kij x_i y_j.
struct BilinearIdentity {
  int n = 0;
  std::vector<int> signs_lhs;
  std::vector<int> signs_rhs;
  std::vector<Eigen::MatrixXi> z_forms;  // z_forms[k](i, j) = c_kij
};

/// Reads z_k off the multiplication table; signs from the (diagonal) norm
/// form. Throws std::invalid_argument for non-composition algebras or tables
/// that are not signed-unit.
BilinearIdentity derive_identity(const AlgebraPtr& algebra);

struct IdentityCheck {
  bool holds = false;
  Polynomial lhs;
  Polynomial rhs;
  /// First monomial (in x0.., y0.. names) where the two sides differ.
  std::optional<std::string> mismatch;
};
/// Symbolic expansion in 2n variables x_i = var i, y_j = var n+j.
IdentityCheck verify_identity(const BilinearIdentity& id);

/// Variable names x0..x{n-1}, y0..y{n-1}.
std::string variable_name(int n, std::size_t index);
/// e.g. "(x0^2 + x1^2)*(y0^2 + y1^2) = (x0*y0 - x1*y1)^2 + (x0*y1 + x1*y0)^2"
std::string format_identity(const BilinearIdentity& id);
/// The bilinear forms alone, e.g. "x0*y0 - x1*y1".
std::string format_z(const BilinearIdentity& id, int k);

struct HurwitzWitness {
  Element x;
  Element y;
  Rational q_xy;
  Rational q_x_q_y;
};
/// A rational pair with Q(xy) ≠ Q(x)Q(y) in `algebra` (the sedenions by
/// default), or nothing when the two-unit search finds none.
std::optional<HurwitzWitness> hurwitz_boundary(const AlgebraPtr& algebra = algebras::sedenions());

}  // namespace g2
