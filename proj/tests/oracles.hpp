#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's elimination, wedge or action code: ranks use plain rational
// Gaussian elimination with a different pivot rule, forms are evaluated as
// dense alternating tensors.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "g2/algebra.hpp"
#include "g2/exterior.hpp"

namespace oracle {

using g2::MatrixQ;
using g2::Rational;
using g2::VectorQ;

// Row reduction over Q choosing, in each column, the nonzero entry of
// smallest height in the *last* possible row.
inline std::size_t rank(MatrixQ a) {
  std::size_t r = 0;
  for (Eigen::Index c = 0; c < a.cols() && static_cast<Eigen::Index>(r) < a.rows(); ++c) {
    Eigen::Index best = -1;
    for (Eigen::Index i = static_cast<Eigen::Index>(r); i < a.rows(); ++i)
      if (!a(i, c).is_zero()) best = i;
    if (best < 0) continue;
    a.row(best).swap(a.row(static_cast<Eigen::Index>(r)));
    const Rational p = a(static_cast<Eigen::Index>(r), c);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == static_cast<Eigen::Index>(r) || a(i, c).is_zero()) continue;
      const Rational f = a(i, c) / p;
      for (Eigen::Index j = c; j < a.cols(); ++j) a(i, j) -= f * a(static_cast<Eigen::Index>(r), j);
    }
    ++r;
  }
  return r;
}

inline int perm_sign(std::vector<int> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      s = -s;
    }
  return s;
}

// ω(v_1, …, v_k) = Σ_J ω_J det[v_m(J_l)] computed by the Leibniz formula.
inline Rational evaluate(const g2::KForm& omega, const std::vector<VectorQ>& v) {
  const int k = omega.k();
  std::vector<int> p(static_cast<std::size_t>(k));
  Rational total;
  for (const auto& [J, c] : omega.terms()) {
    std::iota(p.begin(), p.end(), 0);
    Rational det;
    do {
      Rational t = perm_sign(p);
      for (int l = 0; l < k; ++l) t *= v[static_cast<std::size_t>(p[static_cast<std::size_t>(l)])](J[static_cast<std::size_t>(l)] - 1);
      det += t;
    } while (std::next_permutation(p.begin(), p.end()));
    total += c * det;
  }
  return total;
}

// (X·ω)(e_I) = Σ_m ω(e_{i_1}, …, X e_{i_m}, …, e_{i_k}) on every increasing I.
inline bool annihilates(const MatrixQ& X, const g2::KForm& omega) {
  const int n = omega.n();
  for (const auto& I : g2::index_tuples(n, omega.k())) {
    Rational sum;
    for (std::size_t m = 0; m < I.size(); ++m) {
      std::vector<VectorQ> v;
      for (std::size_t l = 0; l < I.size(); ++l) {
        const VectorQ e = g2::unit_vector(n, I[l] - 1);
        v.push_back(l == m ? VectorQ(X * e) : e);
      }
      sum += evaluate(omega, v);
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

// β(e_i, e_j) via the fully antisymmetric tensor: the vol coefficient of
// (e_i⌟φ)∧(e_j⌟φ)∧φ equals (1/24) Σ_σ sgn σ φ_{iσ1σ2} φ_{jσ3σ4} φ_{σ5σ6σ7}.
inline MatrixQ engel_gram(const g2::KForm& phi) {
  std::array<Rational, 343> t{};
  auto at = [&t](int a, int b, int c) -> Rational& { return t[static_cast<std::size_t>((a * 7 + b) * 7 + c)]; };
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b)
      for (int c = 0; c < 7; ++c) at(a, b, c) = phi.coefficient({a + 1, b + 1, c + 1});
  std::vector<std::pair<std::array<int, 7>, int>> perms;
  std::array<int, 7> s{0, 1, 2, 3, 4, 5, 6};
  do perms.emplace_back(s, perm_sign(std::vector<int>(s.begin(), s.end())));
  while (std::next_permutation(s.begin(), s.end()));
  MatrixQ g(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Rational sum;
      for (const auto& [p, sign] : perms) {
        const Rational& x = at(i, p[0], p[1]);
        if (x.is_zero()) continue;
        const Rational& y = at(j, p[2], p[3]);
        if (y.is_zero()) continue;
        const Rational& z = at(p[4], p[5], p[6]);
        if (!z.is_zero()) sum += x * y * z * Rational(sign);
      }
      g(i, j) = sum / Rational(24);
    }
  return g;
}

// --- random generators -----------------------------------------------------

inline Rational small_rational(std::mt19937& rng, int num = 5, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return Rational(n(rng), d(rng));
}

inline VectorQ random_vector(std::mt19937& rng, int n) {
  VectorQ v(n);
  for (int i = 0; i < n; ++i) v(i) = small_rational(rng);
  return v;
}

inline g2::Element random_element(std::mt19937& rng, const g2::AlgebraPtr& a) {
  return g2::Element(a, random_vector(rng, a->dim()));
}

inline g2::Element random_imaginary(std::mt19937& rng, const g2::AlgebraPtr& a) {
  VectorQ v = random_vector(rng, a->dim());
  v(0) = 0;
  return g2::Element(a, v);
}

// Each increasing k-tuple present with probability `density`.
inline g2::KForm random_form(std::mt19937& rng, int n, int k, double density = 0.4) {
  std::bernoulli_distribution keep(density);
  g2::KForm f(n, k);
  for (const auto& I : g2::index_tuples(n, k))
    if (keep(rng)) f.add_term(I, small_rational(rng, 3, 2));
  return f;
}

inline MatrixQ random_matrix(std::mt19937& rng, int rows, int cols, int num = 3) {
  MatrixQ m(rows, cols);
  std::uniform_int_distribution<int> d(-num, num);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Unit upper-triangular times unit lower-triangular integer matrix: det 1.
inline MatrixQ random_unimodular(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-1, 1);
  MatrixQ U = MatrixQ::Identity(n, n), L = MatrixQ::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      U(i, j) = d(rng);
      L(j, i) = d(rng);
    }
  return U * L;
}

}  // namespace oracle
