#include "g2/stabilizers.hpp"

#include <map>
#include <stdexcept>

#include "g2/errors.hpp"

namespace g2 {

std::vector<VectorQ> StabilizerResult::flattened() const {
  std::vector<VectorQ> out;
  out.reserve(basis.size());
  for (const auto& X : basis) out.push_back(flatten(X));
  return out;
}

KForm lie_action(const MatrixQ& X, const KForm& omega) {
  const int n = omega.n();
  if (X.rows() != n || X.cols() != n) throw std::invalid_argument("matrix size does not match form dimension");
  KForm out(n, omega.k());
  if (omega.k() == 0) return out;
  for (const auto& [I, c] : omega.terms())
    for (std::size_t p = 0; p < I.size(); ++p) {
      // e^b at slot p becomes Σ_a X(b,a) e^a
      const int b = I[p] - 1;
      for (int a = 0; a < n; ++a) {
        if (X(b, a).is_zero()) continue;
        KForm::Index J = I;
        J[p] = a + 1;
        out.add_term(J, c * X(b, a));
      }
    }
  return out;
}

MatrixQ form_stabilizer_system(const KForm& omega) {
  const int n = omega.n();
  const auto rows = index_tuples(n, omega.k());
  std::map<KForm::Index, Eigen::Index> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = static_cast<Eigen::Index>(r);
  MatrixQ sys = MatrixQ::Zero(static_cast<Eigen::Index>(rows.size()), n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MatrixQ X = MatrixQ::Zero(n, n);
      X(b, a) = 1;
      const KForm image = lie_action(X, omega);
      for (const auto& [I, c] : image.terms()) sys(row_of.at(I), a * n + b) = c;
    }
  return sys;
}

namespace {

StabilizerResult from_kernel(const MatrixQ& sys, int n) {
  StabilizerResult r;
  r.ambient_dim = n;
  r.system_rows = static_cast<std::size_t>(sys.rows());
  r.system_cols = static_cast<std::size_t>(sys.cols());
  for (const auto& v : nullspace(sys)) r.basis.push_back(unflatten(v, n, n));
  return r;
}

// Rows of D(e_i e_j) - D(e_i) e_j - e_i D(e_j) = 0 for i, j >= lo, with D
// supported on span(e_lo..e_{d-1}) and unknown D(m,k) at column (k-lo)*m + (m-lo).
MatrixQ derivation_system(const AlgebraSpec& a, int lo) {
  const int d = a.dim();
  const int m = d - lo;
  auto col = [lo, m](int row, int colk) { return static_cast<Eigen::Index>((colk - lo) * m + (row - lo)); };
  MatrixQ sys = MatrixQ::Zero(static_cast<Eigen::Index>(m) * m * d, static_cast<Eigen::Index>(m) * m);
  Eigen::Index r0 = 0;
  for (int i = lo; i < d; ++i)
    for (int j = lo; j < d; ++j, r0 += d) {
      const VectorQ& p = a.product(i, j);
      for (int k = lo; k < d; ++k)
        if (!p(k).is_zero())
          for (int mm = lo; mm < d; ++mm) sys(r0 + mm, col(mm, k)) += p(k);
      // - D(e_i) e_j : D(e_i) = Σ_mm D(mm,i) e_mm
      for (int mm = lo; mm < d; ++mm) {
        const VectorQ& q = a.product(mm, j);
        for (int r = 0; r < d; ++r)
          if (!q(r).is_zero()) sys(r0 + r, col(mm, i)) -= q(r);
        const VectorQ& s = a.product(i, mm);
        for (int r = 0; r < d; ++r)
          if (!s(r).is_zero()) sys(r0 + r, col(mm, j)) -= s(r);
      }
    }
  return sys;
}

}  // namespace

StabilizerResult form_stabilizer(const KForm& omega) { return from_kernel(form_stabilizer_system(omega), omega.n()); }

StabilizerResult metric_stabilizer(const MatrixQ& g) {
  if (!is_symmetric(g)) throw std::invalid_argument("metric is not symmetric");
  const auto n = static_cast<int>(g.rows());
  MatrixQ sys = MatrixQ::Zero(n * (n + 1) / 2, n * n);
  Eigen::Index r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++r)
      for (int m = 0; m < n; ++m) {
        // (Xᵀg)(i,j) = Σ_m X(m,i) g(m,j);  (gX)(i,j) = Σ_m g(i,m) X(m,j)
        sys(r, i * n + m) += g(m, j);
        sys(r, j * n + m) += g(i, m);
      }
  return from_kernel(sys, n);
}

StabilizerResult derivation_algebra(const AlgebraSpec& algebra) {
  return from_kernel(derivation_system(algebra, 1), algebra.dim() - 1);
}

StabilizerResult derivation_algebra_full(const AlgebraSpec& algebra) {
  return from_kernel(derivation_system(algebra, 0), algebra.dim());
}

std::size_t unit_stabilizer_dim(const AlgebraSpec& algebra, int unit) {
  const int d = algebra.dim();
  if (unit < 1 || unit >= d) throw std::out_of_range("unit index must lie in 1.." + std::to_string(d - 1));
  const MatrixQ base = derivation_system(algebra, 1);
  const int m = d - 1;
  MatrixQ sys = MatrixQ::Zero(base.rows() + m, base.cols());
  sys.topRows(base.rows()) = base;
  for (int r = 0; r < m; ++r) sys(base.rows() + r, (unit - 1) * m + r) = 1;
  return nullspace(sys).size();
}

bool annihilates(const MatrixQ& X, const KForm& omega) { return lie_action(X, omega).is_zero(); }

bool is_skew_for(const MatrixQ& X, const MatrixQ& g) {
  return is_zero(MatrixQ(X.transpose() * g + g * X));
}

bool is_derivation(const MatrixQ& D, const AlgebraSpec& a) {
  const int d = a.dim();
  if (D.rows() != d - 1 || D.cols() != d - 1) throw std::invalid_argument("derivation must act on the imaginary part");
  MatrixQ full = MatrixQ::Zero(d, d);
  full.bottomRightCorner(d - 1, d - 1) = D;
  auto prod = [&a, d](const VectorQ& x, const VectorQ& y) {
    VectorQ out = VectorQ::Zero(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (!x(i).is_zero() && !y(j).is_zero()) out += a.product(i, j) * (x(i) * y(j));
    return out;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const VectorQ ei = unit_vector(d, i), ej = unit_vector(d, j);
      const VectorQ lhs = full * a.product(i, j);
      const VectorQ rhs = prod(full * ei, ej) + prod(ei, full * ej);
      if (lhs != rhs) return false;
    }
  return true;
}

MatrixQ bracket(const MatrixQ& X, const MatrixQ& Y) { return X * Y - Y * X; }

TwoFaces two_faces_check(const KForm& phi) {
  TwoFaces t;
  t.reconstruction = reconstruct_octonions(phi);
  t.stabilizer = form_stabilizer(phi);
  t.derivations = derivation_algebra(*t.reconstruction.algebra);
  t.equal = subspace_equal(t.stabilizer.flattened(), t.derivations.flattened());
  t.metric_preserved = true;
  for (const auto& X : t.stabilizer.basis)
    if (!is_skew_for(X, t.reconstruction.gram)) t.metric_preserved = false;
  return t;
}

bool stabilizer_preserves_metric(const KForm& phi) {
  const MatrixQ beta = engel_metric(phi).gram;
  if (determinant(beta).is_zero()) throw NotRegular("not regular: the Engel metric is degenerate");
  for (const auto& X : form_stabilizer(phi).basis)
    if (!is_skew_for(X, beta)) return false;
  return true;
}

std::optional<MatrixQ> metric_not_form_witness(const KForm& phi) {
  const MatrixQ beta = engel_metric(phi).gram;
  if (determinant(beta).is_zero()) throw NotRegular("not regular: the Engel metric is degenerate");
  for (const auto& X : metric_stabilizer(beta).basis)
    if (!annihilates(X, phi)) return X;
  return std::nullopt;
}

KForm symplectic_form(int m) {
  KForm w(2 * m, 2);
  for (int i = 1; i <= m; ++i) w.add_term({2 * i - 1, 2 * i}, 1);
  return w;
}

KForm threeform6() {
  KForm w(6, 3);
  w.add_term({1, 2, 3}, 1);
  w.add_term({4, 5, 6}, 1);
  return w;
}

KForm cayley_form() {
  const KForm phi = standard_phi7();
  const KForm psi = hodge_star(phi, MatrixQ::Identity(7, 7), 1);
  KForm out(8, 4);
  for (const auto& [I, c] : phi.terms()) out.add_term({1, I[0] + 1, I[1] + 1, I[2] + 1}, c);
  for (const auto& [I, c] : psi.terms()) out.add_term({I[0] + 1, I[1] + 1, I[2] + 1, I[3] + 1}, c);
  return out;
}

namespace {

std::vector<MatrixQ> sl3_basis() {
  std::vector<MatrixQ> b;
  auto E = [](int i, int j) {
    MatrixQ m = MatrixQ::Zero(3, 3);
    m(i, j) = 1;
    return m;
  };
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}) b.push_back(E(i, j));
  b.push_back(E(0, 0) - E(1, 1));
  b.push_back(E(1, 1) - E(2, 2));
  return b;
}

}  // namespace

KForm sl3_form() {
  const auto b = sl3_basis();
  KForm w(8, 3);
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k) {
        const MatrixQ m = bracket(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]) * b[static_cast<std::size_t>(k)];
        w.add_term({i + 1, j + 1, k + 1}, m.trace());
      }
  return w;
}

std::vector<MatrixQ> sl3_pair_basis() {
  std::vector<MatrixQ> out;
  for (int block = 0; block < 2; ++block) {
    const int o = 3 * block;
    for (const auto& m : sl3_basis()) {
      MatrixQ X = MatrixQ::Zero(6, 6);
      X.block(o, o, 3, 3) = m;
      out.push_back(X);
    }
  }
  return out;
}

}  // namespace g2
