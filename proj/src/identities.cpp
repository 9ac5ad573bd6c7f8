#include "g2/identities.hpp"

#include <stdexcept>

namespace g2 {

BilinearIdentity derive_identity(const AlgebraPtr& algebra) {
  const AlgebraSpec& a = *algebra;
  if (!a.is_signed_table()) throw std::invalid_argument(a.label() + " is not a signed-unit table");
  if (!is_composition(algebra).holds) throw std::invalid_argument(a.label() + " is not a composition algebra");
  const int n = a.dim();
  const MatrixQ gram = a.norm_gram();
  BilinearIdentity id;
  id.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && !gram(i, j).is_zero()) throw std::invalid_argument("norm form is not diagonal in this basis");
    id.signs_lhs.push_back(gram(i, i).sign());
  }
  id.signs_rhs = id.signs_lhs;
  id.z_forms.assign(static_cast<std::size_t>(n), Eigen::MatrixXi::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const BasisProduct p = a.signed_product(i, j);
      if (p.sign != 0) id.z_forms[static_cast<std::size_t>(p.index)](i, j) = p.sign;
    }
  return id;
}

namespace {

Polynomial z_poly(const BilinearIdentity& id, int k) {
  const auto vars = static_cast<std::size_t>(2 * id.n);
  Polynomial z(vars);
  const auto& c = id.z_forms[static_cast<std::size_t>(k)];
  for (int i = 0; i < id.n; ++i)
    for (int j = 0; j < id.n; ++j)
      if (c(i, j) != 0) z.add_term({static_cast<char>(i), static_cast<char>(id.n + j)}, c(i, j));
  return z;
}

Polynomial sum_of_squares(const BilinearIdentity& id, int offset, const std::vector<int>& signs) {
  const auto vars = static_cast<std::size_t>(2 * id.n);
  Polynomial p(vars);
  for (int i = 0; i < id.n; ++i) {
    const char v = static_cast<char>(offset + i);
    p.add_term({v, v}, signs[static_cast<std::size_t>(i)]);
  }
  return p;
}

}  // namespace

std::string variable_name(int n, std::size_t index) {
  const auto i = static_cast<int>(index);
  return i < n ? "x" + std::to_string(i) : "y" + std::to_string(i - n);
}

IdentityCheck verify_identity(const BilinearIdentity& id) {
  IdentityCheck out;
  out.lhs = sum_of_squares(id, 0, id.signs_lhs) * sum_of_squares(id, id.n, id.signs_lhs);
  out.rhs = Polynomial(static_cast<std::size_t>(2 * id.n));
  for (int k = 0; k < id.n; ++k) {
    const Polynomial z = z_poly(id, k);
    out.rhs += (z * z) * Rational(id.signs_rhs[static_cast<std::size_t>(k)]);
  }
  const Polynomial diff = out.lhs - out.rhs;
  out.holds = diff.is_zero();
  if (!out.holds) {
    const auto& [m, c] = *diff.terms().begin();
    Polynomial single(diff.variables());
    single.add_term(m, 1);
    out.mismatch = single.str([&id](std::size_t v) { return variable_name(id.n, v); }) + " (lhs " +
                   out.lhs.coefficient(m).str() + ", rhs " + out.rhs.coefficient(m).str() + ")";
  }
  return out;
}

std::string format_z(const BilinearIdentity& id, int k) {
  return z_poly(id, k).str([&id](std::size_t v) { return variable_name(id.n, v); });
}

std::string format_identity(const BilinearIdentity& id) {
  auto name = [&id](std::size_t v) { return variable_name(id.n, v); };
  std::string out = "(" + sum_of_squares(id, 0, id.signs_lhs).str(name) + ")*(" +
                    sum_of_squares(id, id.n, id.signs_lhs).str(name) + ") = ";
  for (int k = 0; k < id.n; ++k) {
    const int s = id.signs_rhs[static_cast<std::size_t>(k)];
    if (k == 0) out += s < 0 ? "-" : "";
    else out += s < 0 ? " - " : " + ";
    out += "(" + format_z(id, k) + ")^2";
  }
  return out;
}

std::optional<HurwitzWitness> hurwitz_boundary(const AlgebraPtr& algebra) {
  auto w = composition_witness(algebra);
  if (!w) return std::nullopt;
  const auto& [x, y] = *w;
  const MatrixQ gram = algebra->norm_gram();
  auto q = [&gram](const Element& e) { return Rational((e.coeffs().transpose() * gram * e.coeffs())(0, 0)); };
  return HurwitzWitness{x, y, q(x * y), q(x) * q(y)};
}

}  // namespace g2
