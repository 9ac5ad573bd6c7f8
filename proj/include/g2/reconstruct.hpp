#pragma once

#include <string>
#include <vector>

#include "g2/algebra.hpp"
#include "g2/exactla.hpp"
#include "g2/exterior.hpp"

namespace g2 {

/// Bilinear product on Q^n: x×y = Σ c(i,j,k) x_i y_j e_k (0-based indices).
class CrossProduct {
 public:
  explicit CrossProduct(int n) : n_(n), c_(static_cast<std::size_t>(n * n * n)) {}

  int n() const { return n_; }
  Rational& at(int i, int j, int k) { return c_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return c_[index(i, j, k)]; }
  VectorQ apply(const VectorQ& x, const VectorQ& y) const;
  bool is_antisymmetric() const;

 private:
  std::size_t index(int i, int j, int k) const { return static_cast<std::size_t>((i * n_ + j) * n_ + k); }
  int n_;
  std::vector<Rational> c_;
};

struct NormalizedMetric {
  MatrixQ metric;  // scale * gram
  Rational scale;  // > 0
};
/// Positive rescaling so the first nonzero diagonal entry (or, failing that,
/// the first nonzero entry) has absolute value 1. Signs pass through.
/// Throws DegenerateMetric for singular input.
NormalizedMetric normalize_metric(const MatrixQ& gram);

/// c(i,j,k) = Σ_l φ_{ijl} (g⁻¹)_{lk}. Any n; φ must be a 3-form.
CrossProduct flip_index(const KForm& phi, const MatrixQ& metric);

/// Unital algebra on Q ⊕ Q^n with x·y = -g(x,y)·e_0 + x×y on imaginary x, y.
/// Throws DegenerateMetric for singular or non-symmetric metrics.
AlgebraPtr adjoin_unit(const CrossProduct& cross, const MatrixQ& metric, std::string label = "reconstructed");

struct Reconstruction {
  AlgebraPtr algebra;
  MatrixQ gram;         // raw Engel gram
  Signature signature;  // of the raw gram
  Rational scale;       // > 0; det(β/6)^{-1/9}/6 when rational, else normalize_metric's
  bool unimodular = false;  // the ninth root existed: det(metric) = 1
  int orientation = 1;  // sign making det(metric) > 0
  MatrixQ metric;       // orientation * scale * gram
  bool composition = false;
  bool compact = false;  // metric definite
};

/// Engel gram -> metric with det > 0 -> flip_index -> adjoin_unit. The metric
/// is the unimodular one when det(β/6) has a rational ninth root.
/// Throws NotRegular for a degenerate 3-form.
Reconstruction reconstruct_octonions(const KForm& phi);

/// Quaternion-type algebra from a 3-form c·(123) on Q^3 and a metric chosen
/// by hand. Throws std::invalid_argument for the zero form.
AlgebraPtr quaternion_analogue(const KForm& vol3, const MatrixQ& metric);

}  // namespace g2
