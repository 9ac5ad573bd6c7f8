#include "g2/reconstruct.hpp"

#include <stdexcept>
#include <tuple>

#include "g2/errors.hpp"

namespace g2 {

VectorQ CrossProduct::apply(const VectorQ& x, const VectorQ& y) const {
  VectorQ out = VectorQ::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (y(j).is_zero()) continue;
      const Rational xy = x(i) * y(j);
      for (int k = 0; k < n_; ++k)
        if (!at(i, j, k).is_zero()) out(k) += at(i, j, k) * xy;
    }
  }
  return out;
}

bool CrossProduct::is_antisymmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

NormalizedMetric normalize_metric(const MatrixQ& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("metric must be square");
  if (determinant(gram).is_zero()) throw DegenerateMetric("metric is degenerate");
  Rational pivot;
  for (Eigen::Index i = 0; i < gram.rows() && pivot.is_zero(); ++i) pivot = gram(i, i);
  for (Eigen::Index i = 0; i < gram.size() && pivot.is_zero(); ++i) pivot = gram(i % gram.rows(), i / gram.rows());
  const Rational scale = Rational(1) / abs(pivot);
  return {gram * scale, scale};
}

CrossProduct flip_index(const KForm& phi, const MatrixQ& metric) {
  if (phi.k() != 3) throw std::invalid_argument("index flip needs a 3-form");
  const int n = phi.n();
  if (metric.rows() != n || metric.cols() != n) throw std::invalid_argument("metric size does not match form");
  if (determinant(metric).is_zero()) throw DegenerateMetric("metric is singular");
  const MatrixQ ginv = inverse(metric);
  CrossProduct cp(n);
  for (const auto& [I, c] : phi.terms()) {
    // each increasing term contributes to all six orderings
    const int a = I[0] - 1, b = I[1] - 1, l0 = I[2] - 1;
    const int perms[6][3] = {{a, b, l0}, {b, l0, a}, {l0, a, b}, {b, a, l0}, {a, l0, b}, {l0, b, a}};
    for (int p = 0; p < 6; ++p) {
      const Rational v = p < 3 ? c : -c;
      const auto [i, j, l] = std::tuple(perms[p][0], perms[p][1], perms[p][2]);
      for (int k = 0; k < n; ++k)
        if (!ginv(l, k).is_zero()) cp.at(i, j, k) += v * ginv(l, k);
    }
  }
  return cp;
}

AlgebraPtr adjoin_unit(const CrossProduct& cross, const MatrixQ& metric, std::string label) {
  const int n = cross.n();
  if (metric.rows() != n || metric.cols() != n) throw std::invalid_argument("metric size does not match product");
  if (!is_symmetric(metric)) throw DegenerateMetric("metric is not symmetric");
  if (determinant(metric).is_zero()) throw DegenerateMetric("metric is singular");
  const int d = n + 1;
  std::vector<VectorQ> products;
  products.reserve(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == 0 || j == 0) {
        products.push_back(unit_vector(d, i + j));
        continue;
      }
      VectorQ v(d);
      v(0) = -metric(i - 1, j - 1);
      for (int k = 0; k < n; ++k) v(k + 1) = cross.at(i - 1, j - 1, k);
      products.push_back(std::move(v));
    }
  return std::make_shared<const AlgebraSpec>(std::move(label), d, std::move(products));
}

Reconstruction reconstruct_octonions(const KForm& phi) {
  Reconstruction r;
  r.gram = engel_metric(phi).gram;
  if (determinant(r.gram).is_zero()) throw NotRegular("not regular: the Engel metric is degenerate");
  r.signature = signature(r.gram);
  // The metric compatible with φ is B / det(B)^{1/9}, B = gram/6. When the
  // ninth root is rational we use it and the product composes; otherwise the
  // diagonal normalization below is off by a positive factor.
  const MatrixQ b = r.gram / Rational(6);
  if (const auto root = exact_root(determinant(b), 9)) {
    r.orientation = root->sign();
    r.scale = Rational(1) / (Rational(6) * abs(*root));
    r.unimodular = true;
  } else {
    const NormalizedMetric nm = normalize_metric(r.gram);
    r.scale = nm.scale;
    r.orientation = determinant(nm.metric).sign();
  }
  r.metric = r.gram * (r.scale * Rational(r.orientation));
  r.compact = r.signature.positive == 7 || r.signature.negative == 7;
  r.algebra = adjoin_unit(flip_index(phi, r.metric), r.metric, r.compact ? "reconstructed (compact)" : "reconstructed (split)");
  r.composition = is_composition(r.algebra).holds;
  return r;
}

AlgebraPtr quaternion_analogue(const KForm& vol3, const MatrixQ& metric) {
  if (vol3.n() != 3 || vol3.k() != 3) throw std::invalid_argument("expected a 3-form on Q^3");
  if (vol3.is_zero()) throw std::invalid_argument("the zero form gives no product");
  return adjoin_unit(flip_index(vol3, metric), metric, "quaternion analogue");
}

}  // namespace g2
