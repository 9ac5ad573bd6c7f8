#include "g2/exactla.hpp"

#include <stdexcept>
#include <utility>

#include "g2/errors.hpp"

namespace g2 {

std::string Signature::str() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) + "," + std::to_string(zero) + ")";
}

namespace detail {

namespace {

// Scales a row of rationals by the lcm of its denominators.
std::vector<Integer> integer_row(const MatrixQ& m, Eigen::Index i) {
  Integer scale = 1;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const mpq_class& q = m(i, j).value();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> row(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const mpq_class& q = m(i, j).value();
    Integer t = scale / q.get_den();
    row[static_cast<std::size_t>(j)] = t * q.get_num();
  }
  return row;
}

}  // namespace

Echelon bareiss(const MatrixQ& m) {
  Echelon out;
  out.cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(integer_row(m, i));

  const std::size_t rows = a.size();
  const auto cols = static_cast<std::size_t>(m.cols());
  Integer previous = 1;
  Integer t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_parity ^= 1;
    }
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer factor = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (pivot * a[i][j] - factor * a[r][j]) / previous, exact
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), pivot.get_mpz_t());
        mpz_mul(t.get_mpz_t(), factor.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_sub(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), t.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    out.pivots.push_back(static_cast<Eigen::Index>(c));
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::vector<VectorQ> nullspace(const MatrixQ& m) {
  const Echelon e = bareiss(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VectorQ> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorQ v = VectorQ::Zero(n);
    v(free) = 1;
    for (std::size_t r = e.rows.size(); r-- > 0;) {
      const auto& row = e.rows[r];
      const Eigen::Index p = e.pivots[r];
      Rational acc;
      for (Eigen::Index j = p + 1; j < n; ++j) {
        const Integer& a = row[static_cast<std::size_t>(j)];
        if (sgn(a) != 0 && !v(j).is_zero()) acc += Rational(a) * v(j);
      }
      v(p) = -acc / Rational(row[static_cast<std::size_t>(p)]);
    }
    if (!is_zero(m * v)) throw std::logic_error("nullspace vector failed m*v = 0");
    basis.push_back(std::move(v));
  }
  return basis;
}

Signature signature(const MatrixQ& input) {
  if (!is_symmetric(input)) throw std::invalid_argument("signature requires a square symmetric matrix");
  MatrixQ a = input;
  const Eigen::Index n = a.rows();
  Signature s;

  auto swap_sym = [&a](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
  };

  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index d = k;
    while (d < n && a(d, d).is_zero()) ++d;
    if (d < n) {
      swap_sym(k, d);
      const Rational pivot = a(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (a(j, k).is_zero()) continue;
        const Rational f = a(j, k) / pivot;
        for (Eigen::Index c = k; c < n; ++c) a(j, c) -= f * a(k, c);
        for (Eigen::Index r = k; r < n; ++r) a(r, j) -= f * a(r, k);
      }
      (pivot.sign() > 0 ? s.positive : s.negative) += 1;
      k += 1;
      continue;
    }
    // Every remaining diagonal entry vanishes: take a 2x2 block [[0,b],[b,0]].
    Eigen::Index bi = -1;
    Eigen::Index bj = -1;
    for (Eigen::Index i = k; i < n && bi < 0; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (!a(i, j).is_zero()) {
          bi = i;
          bj = j;
          break;
        }
    if (bi < 0) {
      s.zero += static_cast<std::size_t>(n - k);
      break;
    }
    swap_sym(k, bi);
    swap_sym(k + 1, bj);
    const Rational b = a(k, k + 1);
    for (Eigen::Index l = k + 2; l < n; ++l) {
      // [a_lk a_l,k+1] * inverse([[0,b],[b,0]]) = [a_l,k+1 / b, a_lk / b]
      const Rational c0 = a(l, k + 1) / b;
      const Rational c1 = a(l, k) / b;
      if (c0.is_zero() && c1.is_zero()) continue;
      for (Eigen::Index c = k; c < n; ++c) a(l, c) -= c0 * a(k, c) + c1 * a(k + 1, c);
      for (Eigen::Index r = k; r < n; ++r) a(r, l) -= c0 * a(r, k) + c1 * a(r, k + 1);
    }
    s.positive += 1;
    s.negative += 1;
    k += 2;
  }
  return s;
}

Rational determinant(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  const Echelon e = bareiss(m);
  if (static_cast<Eigen::Index>(e.pivots.size()) < m.rows()) return 0;
  // The last Bareiss pivot is the determinant of the integer-scaled matrix.
  Rational det(e.rows.back()[static_cast<std::size_t>(m.cols() - 1)]);
  if (e.swap_parity) det = -det;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).value().get_den_mpz_t());
    det /= Rational(scale);
  }
  return det;
}

MatrixQ inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixQ a(n, 2 * n);
  a << m, MatrixQ::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw DegenerateMetric("matrix is singular");
    a.row(p).swap(a.row(c));
    const Rational pivot = a(c, c);
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(c, j) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return a.rightCols(n);
}

}  // namespace detail

MatrixQ stack_columns(std::span<const VectorQ> vectors, Eigen::Index ambient) {
  MatrixQ out(ambient, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != ambient) throw std::invalid_argument("vectors have different ambient dimensions");
    out.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return out;
}

namespace {

Eigen::Index common_length(std::span<const VectorQ> a, std::span<const VectorQ> b) {
  Eigen::Index n = -1;
  for (auto s : {a, b})
    for (const auto& v : s) {
      if (n < 0) n = v.size();
      if (v.size() != n) throw std::invalid_argument("vectors have different ambient dimensions");
    }
  return n < 0 ? 0 : n;
}

}  // namespace

bool subspace_equal(std::span<const VectorQ> a, std::span<const VectorQ> b) {
  const Eigen::Index n = common_length(a, b);
  const MatrixQ ma = stack_columns(a, n);
  const MatrixQ mb = stack_columns(b, n);
  MatrixQ both(n, ma.cols() + mb.cols());
  both << ma, mb;
  const std::size_t ra = rank(ma);
  return ra == rank(mb) && ra == rank(both);
}

bool in_span(std::span<const VectorQ> basis, const VectorQ& v) {
  const VectorQ single[] = {v};
  const Eigen::Index n = common_length(basis, single);
  const MatrixQ m = stack_columns(basis, n);
  MatrixQ ext(n, m.cols() + 1);
  ext << m, v;
  return rank(m) == rank(ext);
}

VectorQ flatten(const MatrixQ& m) {
  VectorQ v(m.size());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

MatrixQ unflatten(const VectorQ& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
  MatrixQ m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = v(j * rows + i);
  return m;
}

}  // namespace g2
