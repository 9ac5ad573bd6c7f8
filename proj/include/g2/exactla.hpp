#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "g2/rational.hpp"

namespace g2 {

/// Sylvester signature of a symmetric matrix.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  std::size_t dimension() const { return positive + negative + zero; }
  std::string str() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Row-echelon form produced by fraction-free elimination. Rows are integer
/// multiples of the input rows (denominators cleared first); `pivots[r]` is
/// the pivot column of row r.
struct Echelon {
  Eigen::Index cols = 0;
  std::vector<std::vector<Integer>> rows;
  std::vector<Eigen::Index> pivots;
  int swap_parity = 0;
};

namespace detail {
Echelon bareiss(const MatrixQ& m);
std::vector<VectorQ> nullspace(const MatrixQ& m);
Signature signature(const MatrixQ& m);
Rational determinant(const MatrixQ& m);
MatrixQ inverse(const MatrixQ& m);
}  // namespace detail

/// Bareiss elimination with deterministic pivoting: the pivot for each column
/// is the first row (top to bottom) with a nonzero entry.
template <typename Derived>
Echelon bareiss_echelon(const Eigen::MatrixBase<Derived>& m) {
  return detail::bareiss(m.eval());
}

template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  return detail::bareiss(m.eval()).pivots.size();
}

/// Basis of ker(m). One vector per free column, with that column set to 1 and
/// the other free columns 0. Each vector is checked against m·v = 0 before it
/// is returned; a failure there throws std::logic_error.
template <typename Derived>
std::vector<VectorQ> nullspace(const Eigen::MatrixBase<Derived>& m) {
  return detail::nullspace(m.eval());
}

/// Signature by symmetric congruence reduction over Q. Throws
/// std::invalid_argument for non-square or non-symmetric input.
template <typename Derived>
Signature signature(const Eigen::MatrixBase<Derived>& m) {
  return detail::signature(m.eval());
}

template <typename Derived>
Rational determinant(const Eigen::MatrixBase<Derived>& m) {
  return detail::determinant(m.eval());
}

/// Throws DegenerateMetric when m is singular.
template <typename Derived>
MatrixQ inverse(const Eigen::MatrixBase<Derived>& m) {
  return detail::inverse(m.eval());
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

/// Columns side by side. All vectors must have length `ambient`.
MatrixQ stack_columns(std::span<const VectorQ> vectors, Eigen::Index ambient);

/// span(a) == span(b), by rank(a) == rank(b) == rank([a b]). Throws
/// std::invalid_argument when the vectors do not share one length.
bool subspace_equal(std::span<const VectorQ> a, std::span<const VectorQ> b);

bool in_span(std::span<const VectorQ> basis, const VectorQ& v);

/// Column-major flattening, the layout used for gl(n) unknowns.
VectorQ flatten(const MatrixQ& m);
MatrixQ unflatten(const VectorQ& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace g2
