#include "g2/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "g2/errors.hpp"
#include "g2/fano.hpp"

namespace g2 {

namespace {

VectorQ imaginary_part(const VectorQ& v) {
  VectorQ out = v;
  out(0) = 0;
  return out;
}

VectorQ conj_coeffs(const VectorQ& v) {
  VectorQ out = -v;
  out(0) = v(0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraSpec

AlgebraSpec::AlgebraSpec(std::string label, int dim, std::vector<VectorQ> products)
    : label_(std::move(label)), dim_(dim), products_(std::move(products)) {
  if (dim < 1) throw std::invalid_argument("algebra dimension must be positive");
  if (products_.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("structure constants must list dim*dim products");
  for (const auto& p : products_)
    if (p.size() != dim) throw std::invalid_argument("product vector has wrong length");

  for (int i = 0; i < dim; ++i) {
    const VectorQ e = unit_vector(dim, i);
    if (product(0, i) != e || product(i, 0) != e)
      throw std::invalid_argument(label_ + ": e_0 is not a two-sided unit (at e_" + std::to_string(i) + ")");
  }
  for (int i = 1; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      if (!g2::is_zero(imaginary_part(product(i, j) + product(j, i))))
        throw std::invalid_argument(label_ + ": e_" + std::to_string(i) + " e_" + std::to_string(j) +
                                    " + e_" + std::to_string(j) + " e_" + std::to_string(i) + " is not real");

  std::vector<BasisProduct> table;
  table.reserve(products_.size());
  for (const auto& p : products_) {
    BasisProduct bp;
    int nonzero = 0;
    for (int k = 0; k < dim; ++k) {
      if (p(k).is_zero()) continue;
      ++nonzero;
      if (p(k) == 1 || p(k) == -1) bp = {p(k).sign(), k};
      else nonzero = 2;
    }
    if (nonzero > 1) return;
    table.push_back(bp);
  }
  signed_table_ = std::move(table);
}

AlgebraSpec AlgebraSpec::from_signed_table(std::string label, int dim, const std::vector<BasisProduct>& table) {
  if (table.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("signed table must list dim*dim products");
  std::vector<VectorQ> products;
  products.reserve(table.size());
  for (const auto& bp : table) {
    VectorQ v = VectorQ::Zero(dim);
    if (bp.sign != 0) {
      if (bp.index < 0 || bp.index >= dim) throw std::invalid_argument("signed table index out of range");
      v(bp.index) = bp.sign;
    }
    products.push_back(std::move(v));
  }
  return AlgebraSpec(std::move(label), dim, std::move(products));
}

BasisProduct AlgebraSpec::signed_product(int i, int j) const {
  if (!signed_table_) throw std::logic_error(label_ + " is not a signed-unit table");
  return (*signed_table_)[static_cast<std::size_t>(i * dim_ + j)];
}

std::vector<int> AlgebraSpec::unit_squares() const {
  std::vector<int> out;
  for (int i = 1; i < dim_; ++i) {
    const Rational s = unit_square(i);
    if (s != 1 && s != -1) throw std::logic_error(label_ + ": e_" + std::to_string(i) + "^2 is not ±1");
    out.push_back(s.sign());
  }
  return out;
}

MatrixQ AlgebraSpec::norm_gram() const {
  // a(i,j) = Re(conj(e_i) e_j)
  MatrixQ a(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) a(i, j) = i == 0 ? product(i, j)(0) : -product(i, j)(0);
  MatrixQ g(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) g(i, j) = (a(i, j) + a(j, i)) / Rational(2);
  return g;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(AlgebraPtr algebra, VectorQ coeffs) : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw std::invalid_argument("element without algebra");
  if (coeffs_.size() != algebra_->dim()) throw std::invalid_argument("element length does not match algebra dimension");
}

Element Element::basis(const AlgebraPtr& algebra, int i) { return Element(algebra, unit_vector(algebra->dim(), i)); }

Element Element::scalar(const AlgebraPtr& algebra, const Rational& c) {
  VectorQ v = VectorQ::Zero(algebra->dim());
  v(0) = c;
  return Element(algebra, std::move(v));
}

bool Element::is_real() const { return g2::is_zero(imaginary_part(coeffs_)); }

std::string Element::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    const Rational& c = coeffs_(i);
    if (c.is_zero()) continue;
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const Rational mag = abs(c);
    if (i == 0) os << mag;
    else if (mag == 1) os << "e" << i;
    else os << mag << "*e" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

Element& Element::operator+=(const Element& rhs) {
  if (algebra_ != rhs.algebra_ && *algebra_ != *rhs.algebra_) throw AlgebraMismatch();
  coeffs_ += rhs.coeffs_;
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  if (algebra_ != rhs.algebra_ && *algebra_ != *rhs.algebra_) throw AlgebraMismatch();
  coeffs_ -= rhs.coeffs_;
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  coeffs_ *= c;
  return *this;
}

Element Element::operator-() const { return Element(algebra_, -coeffs_); }

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

bool operator==(const Element& a, const Element& b) {
  return (a.algebra_ == b.algebra_ || *a.algebra_ == *b.algebra_) && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Operations

Element multiply(const Element& x, const Element& y) {
  if (x.algebra() != y.algebra() && *x.algebra() != *y.algebra()) throw AlgebraMismatch();
  const AlgebraSpec& a = *x.algebra();
  const int n = a.dim();
  VectorQ out = VectorQ::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational c = x[i] * y[j];
      if (a.is_signed_table()) {
        const BasisProduct bp = a.signed_product(i, j);
        if (bp.sign > 0) out(bp.index) += c;
        else if (bp.sign < 0) out(bp.index) -= c;
      } else {
        out += a.product(i, j) * c;
      }
    }
  }
  return Element(x.algebra(), std::move(out));
}

Element conjugate(const Element& x) { return Element(x.algebra(), conj_coeffs(x.coeffs())); }

Rational quadratic_form(const Element& x) {
  const Element n = conjugate(x) * x;
  if (!n.is_real()) throw NonRealNorm("non-real norm: conj(x)*x = " + n.str());
  return n.real();
}

Element inverse(const Element& x) {
  if (x.is_zero()) throw ZeroElement();
  const Rational q = quadratic_form(x);
  if (q.is_zero()) throw NullVector();
  Element inv = conjugate(x) * (Rational(1) / q);
  const Element one = Element::scalar(x.algebra(), 1);
  if (x * inv != one || inv * x != one) throw std::logic_error("inverse failed x * inverse(x) = 1");
  return inv;
}

Element associator(const Element& x, const Element& y, const Element& z) { return (x * y) * z - x * (y * z); }

AlgebraPtr cayley_dickson_double(const AlgebraSpec& base, int gamma, std::string label) {
  const int n = base.dim();
  if (n != 1 && n != 2 && n != 4 && n != 8)
    throw std::invalid_argument("Cayley-Dickson doubling needs base dimension 1, 2, 4 or 8");
  if (gamma != 1 && gamma != -1) throw std::invalid_argument("doubling parameter must be +1 or -1");
  if (label.empty()) label = "double(" + base.label() + "," + (gamma > 0 ? "+1" : "-1") + ")";

  auto conj_basis = [n](int i) { return i == 0 ? unit_vector(n, 0) : VectorQ(-unit_vector(n, i)); };
  auto mul = [&base, n](const VectorQ& u, const VectorQ& v) {
    VectorQ out = VectorQ::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!u(i).is_zero() && !v(j).is_zero()) out += base.product(i, j) * (u(i) * v(j));
    return out;
  };

  const int m = 2 * n;
  std::vector<VectorQ> products;
  products.reserve(static_cast<std::size_t>(m * m));
  for (int I = 0; I < m; ++I) {
    for (int J = 0; J < m; ++J) {
      VectorQ first = VectorQ::Zero(n);
      VectorQ second = VectorQ::Zero(n);
      const bool left_p = I < n;
      const bool right_r = J < n;
      const int i = left_p ? I : I - n;
      const int j = right_r ? J : J - n;
      const VectorQ ei = unit_vector(n, i);
      const VectorQ ej = unit_vector(n, j);
      if (left_p && right_r) {
        first = base.product(i, j);  // pr
      } else if (left_p) {
        second = mul(ej, ei);  // sp
      } else if (right_r) {
        second = mul(ei, conj_basis(j));  // q r̄
      } else {
        first = mul(conj_basis(j), ei) * Rational(gamma);  // gamma s̄ q
      }
      VectorQ v(m);
      v << first, second;
      products.push_back(std::move(v));
    }
  }
  return std::make_shared<const AlgebraSpec>(std::move(label), m, std::move(products));
}

AlgebraPtr octonions_from_triples(std::span<const Triple> triples, std::span<const int> unit_squares,
                                  std::string label) {
  if (triples.size() != 7) throw std::invalid_argument("need exactly 7 triples");
  if (unit_squares.size() != 7) throw std::invalid_argument("need 7 unit squares");
  check_pair_coverage(triples);
  for (int s : unit_squares)
    if (s != 1 && s != -1) throw std::invalid_argument("unit squares must be +1 or -1");
  auto square = [&](int i) { return unit_squares[static_cast<std::size_t>(i - 1)]; };
  for (const auto& t : triples) {
    const int involutive = (square(t[0]) > 0) + (square(t[1]) > 0) + (square(t[2]) > 0);
    if (involutive != 0 && involutive != 2)
      throw std::invalid_argument("line (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                  std::to_string(t[2]) + ") must contain 0 or 2 units squaring to +1");
  }

  std::vector<BasisProduct> table(64);
  auto at = [&table](int i, int j) -> BasisProduct& { return table[static_cast<std::size_t>(i * 8 + j)]; };
  for (int i = 0; i < 8; ++i) {
    at(0, i) = {1, i};
    at(i, 0) = {1, i};
  }
  for (int i = 1; i < 8; ++i) at(i, i) = {square(i), 0};
  for (const auto& t : triples) {
    for (int r = 0; r < 3; ++r) {
      const int x = t[r];
      const int y = t[(r + 1) % 3];
      const int z = t[(r + 2) % 3];
      const int sign = (square(x) > 0 && square(y) > 0) ? -1 : 1;
      at(x, y) = {sign, z};
      at(y, x) = {-sign, z};
    }
  }
  return std::make_shared<const AlgebraSpec>(AlgebraSpec::from_signed_table(std::move(label), 8, table));
}

namespace {

// vᵀ G v over the nonzero coordinates only; search vectors are very sparse.
Rational q_of(const MatrixQ& gram, const VectorQ& v) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) support.push_back(i);
  Rational q;
  for (auto i : support)
    for (auto j : support)
      if (!gram(i, j).is_zero()) q += gram(i, j) * v(i) * v(j);
  return q;
}

template <typename Predicate>
std::optional<std::pair<Element, Element>> two_unit_search(const AlgebraPtr& algebra, Predicate pred) {
  const int n = algebra->dim();
  std::vector<Element> candidates;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        VectorQ v = VectorQ::Zero(n);
        v(i) = 1;
        v(j) = s;
        candidates.emplace_back(algebra, std::move(v));
      }
  for (const auto& x : candidates)
    for (const auto& y : candidates)
      if (pred(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<Element, Element>> composition_witness(const AlgebraPtr& algebra) {
  const MatrixQ gram = algebra->norm_gram();
  return two_unit_search(algebra, [&gram](const Element& x, const Element& y) {
    return q_of(gram, (x * y).coeffs()) != q_of(gram, x.coeffs()) * q_of(gram, y.coeffs());
  });
}

std::optional<std::pair<Element, Element>> find_zero_divisor(const AlgebraPtr& algebra) {
  return two_unit_search(algebra, [](const Element& x, const Element& y) { return (x * y).is_zero(); });
}

CompositionCheck is_composition(const AlgebraPtr& algebra) {
  const AlgebraSpec& a = *algebra;
  const int n = a.dim();
  const auto vars = static_cast<std::size_t>(2 * n);
  const MatrixQ gram = a.norm_gram();

  std::vector<Polynomial> x;
  std::vector<Polynomial> y;
  for (int i = 0; i < n; ++i) {
    x.push_back(Polynomial::variable(vars, static_cast<std::size_t>(i)));
    y.push_back(Polynomial::variable(vars, static_cast<std::size_t>(n + i)));
  }
  auto quadratic = [&gram, n, vars](const std::vector<Polynomial>& v) {
    Polynomial q(vars);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!gram(i, j).is_zero()) q += (v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]) * gram(i, j);
    return q;
  };

  // (xy)_k = sum_ij c_ijk x_i y_j, built term by term
  std::vector<Polynomial> xy(static_cast<std::size_t>(n), Polynomial(vars));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const VectorQ& p = a.product(i, j);
      for (int k = 0; k < n; ++k) {
        if (p(k).is_zero()) continue;
        Polynomial::Monomial m{static_cast<char>(i), static_cast<char>(n + j)};
        xy[static_cast<std::size_t>(k)].add_term(m, p(k));
      }
    }

  CompositionCheck out;
  out.defect = quadratic(xy) - quadratic(x) * quadratic(y);
  out.holds = out.defect.is_zero();
  if (!out.holds) {
    out.witness = composition_witness(algebra);
    // The two-unit space can miss in principle; fall back to small integer points.
    for (int t = 1; !out.witness && t < 1000; ++t) {
      std::vector<Rational> point(vars);
      for (std::size_t v = 0; v < vars; ++v) point[v] = static_cast<long>((v * 7 + static_cast<std::size_t>(t) * 13) % 11) - 5;
      if (!out.defect.evaluate(point).is_zero()) {
        VectorQ xv(n);
        VectorQ yv(n);
        for (int i = 0; i < n; ++i) {
          xv(i) = point[static_cast<std::size_t>(i)];
          yv(i) = point[static_cast<std::size_t>(n + i)];
        }
        out.witness = std::make_pair(Element(algebra, xv), Element(algebra, yv));
      }
    }
  }
  return out;
}

bool is_alternative(const AlgebraSpec& a) {
  const int n = a.dim();
  auto mul = [&a, n](const VectorQ& u, const VectorQ& v) {
    VectorQ out = VectorQ::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!u(i).is_zero() && !v(j).is_zero()) out += a.product(i, j) * (u(i) * v(j));
    return out;
  };
  std::vector<VectorQ> assoc(static_cast<std::size_t>(n * n * n));
  auto idx = [n](int i, int j, int k) { return static_cast<std::size_t>((i * n + j) * n + k); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        assoc[idx(i, j, k)] = mul(a.product(i, j), unit_vector(n, k)) - mul(unit_vector(n, i), a.product(j, k));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!g2::is_zero(assoc[idx(i, j, k)] + assoc[idx(j, i, k)])) return false;
        if (!g2::is_zero(assoc[idx(i, j, k)] + assoc[idx(i, k, j)])) return false;
      }
  return true;
}

bool conjugation_is_antiautomorphism(const AlgebraSpec& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // conj(e_j) conj(e_i) = s_i s_j e_j e_i with s_0 = 1, s_k = -1
      const int s = (i == 0 ? 1 : -1) * (j == 0 ? 1 : -1);
      if (conj_coeffs(a.product(i, j)) != a.product(j, i) * Rational(s)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Built-in algebras

namespace algebras {

AlgebraPtr reals() {
  static const AlgebraPtr a = std::make_shared<const AlgebraSpec>(
      AlgebraSpec::from_signed_table("reals", 1, {BasisProduct{1, 0}}));
  return a;
}

AlgebraPtr complex() {
  static const AlgebraPtr a = cayley_dickson_double(*reals(), -1, "complex");
  return a;
}

AlgebraPtr split_complex() {
  static const AlgebraPtr a = cayley_dickson_double(*reals(), +1, "split-complex");
  return a;
}

AlgebraPtr quaternions() {
  static const AlgebraPtr a = cayley_dickson_double(*complex(), -1, "quaternions");
  return a;
}

AlgebraPtr split_quaternions() {
  static const AlgebraPtr a = cayley_dickson_double(*complex(), +1, "split-quaternions");
  return a;
}

AlgebraPtr octonions() {
  static const AlgebraPtr a = octonions_from_triples(kFanoTriples, std::array<int, 7>{-1, -1, -1, -1, -1, -1, -1},
                                                     "octonions");
  return a;
}

AlgebraPtr split_octonions() {
  static const AlgebraPtr a = octonions_from_triples(kFanoTriples, kSplitUnitSquares, "split-octonions");
  return a;
}

AlgebraPtr sedenions() {
  static const AlgebraPtr a = cayley_dickson_double(*octonions(), -1, "sedenions");
  return a;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"reals",     "complex",         "split-complex", "quaternions",
                                                 "split-quaternions", "octonions", "split-octonions", "sedenions"};
  return names;
}

AlgebraPtr builtin(std::string_view name) {
  if (name == "reals") return reals();
  if (name == "complex") return complex();
  if (name == "split-complex") return split_complex();
  if (name == "quaternions") return quaternions();
  if (name == "split-quaternions") return split_quaternions();
  if (name == "octonions") return octonions();
  if (name == "split-octonions") return split_octonions();
  if (name == "sedenions") return sedenions();
  return nullptr;
}

}  // namespace algebras

// ---------------------------------------------------------------------------
// Table file

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int parse_index(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

AlgebraPtr parse_algebra_table(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  int dim = 0;
  std::vector<VectorQ> products;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (dim == 0) {
      if (tok.size() != 2 || tok[0] != "dim") throw ParseError(line_no, "expected 'dim N' header");
      dim = parse_index(tok[1], line_no);
      if (dim < 1 || dim > 16) throw ParseError(line_no, "dimension must be between 1 and 16");
      products.assign(static_cast<std::size_t>(dim * dim), VectorQ::Zero(dim));
      for (int i = 0; i < dim; ++i) {
        products[static_cast<std::size_t>(i)] = unit_vector(dim, i);
        products[static_cast<std::size_t>(i * dim)] = unit_vector(dim, i);
      }
      continue;
    }
    if (tok.size() != 4) throw ParseError(line_no, "expected 'i j c k'");
    const int i = parse_index(tok[0], line_no);
    const int j = parse_index(tok[1], line_no);
    const int k = parse_index(tok[3], line_no);
    Rational c;
    try {
      c = Rational::parse(tok[2]);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (i < 1 || i >= dim || j < 1 || j >= dim) throw ParseError(line_no, "i and j must be imaginary indices 1..dim-1");
    if (k < 0 || k >= dim) throw ParseError(line_no, "k out of range");
    products[static_cast<std::size_t>(i * dim + j)](k) += c;
  }
  if (dim == 0) throw ParseError(line_no, "missing 'dim N' header");
  return std::make_shared<const AlgebraSpec>(std::move(label), dim, std::move(products));
}

}  // namespace g2
