#include "g2/exterior.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "g2/errors.hpp"
#include "g2/exactla.hpp"

namespace g2 {

int sort_with_sign(KForm::Index& I) {
  int sign = 1;
  // insertion sort; tuples have at most 8 entries
  for (std::size_t i = 1; i < I.size(); ++i)
    for (std::size_t j = i; j > 0 && I[j - 1] > I[j]; --j) {
      std::swap(I[j - 1], I[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] == I[i]) return 0;
  return sign;
}

KForm::KForm(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("form degree must satisfy 0 <= k <= n");
}

KForm KForm::basis(int n, const Index& I, const Rational& c) {
  KForm f(n, static_cast<int>(I.size()));
  f.add_term(I, c);
  return f;
}

KForm KForm::scalar(int n, const Rational& c) {
  KForm f(n, 0);
  f.add_term({}, c);
  return f;
}

KForm KForm::covector(int n, int i) { return basis(n, {i}); }

Rational KForm::coefficient(const Index& I) const {
  Index sorted = I;
  const int s = sort_with_sign(sorted);
  if (s == 0) return {};
  auto it = terms_.find(sorted);
  if (it == terms_.end()) return {};
  return s > 0 ? it->second : -it->second;
}

void KForm::add_term(Index I, const Rational& c) {
  if (static_cast<int>(I.size()) != k_) throw std::invalid_argument("term degree does not match form degree");
  for (int i : I)
    if (i < 1 || i > n_) throw std::out_of_range("form index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  const int s = sort_with_sign(I);
  if (s == 0 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(I, s > 0 ? c : -c);
  if (!inserted) {
    it->second += s > 0 ? c : -c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm& KForm::operator+=(const KForm& rhs) {
  if (rhs.n_ != n_ || rhs.k_ != k_) throw std::invalid_argument("adding forms of different shape");
  for (const auto& [I, c] : rhs.terms_) add_term(I, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& rhs) {
  if (rhs.n_ != n_ || rhs.k_ != k_) throw std::invalid_argument("subtracting forms of different shape");
  for (const auto& [I, c] : rhs.terms_) add_term(I, -c);
  return *this;
}

KForm& KForm::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [I, v] : terms_) v *= c;
  return *this;
}

KForm KForm::operator-() const {
  KForm f = *this;
  return f *= Rational(-1);
}

std::string KForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [I, c] : terms_) {
    os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (abs(c) != 1 || I.empty()) os << abs(c);
    if (!I.empty()) {
      os << "(";
      for (std::size_t i = 0; i < I.size(); ++i) os << (i && n_ > 9 ? "," : "") << I[i];
      os << ")";
    }
    first = false;
  }
  return os.str();
}

KForm wedge(const KForm& a, const KForm& b) {
  if (a.n() != b.n()) throw std::invalid_argument("wedge of forms on different spaces");
  if (a.k() + b.k() > a.n()) throw std::invalid_argument("wedge degree exceeds dimension");
  KForm out(a.n(), a.k() + b.k());
  KForm::Index I;
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      I = ia;
      I.insert(I.end(), ib.begin(), ib.end());
      out.add_term(I, ca * cb);
    }
  return out;
}

KForm contract(const VectorQ& x, const KForm& a) {
  if (a.k() == 0) throw std::invalid_argument("cannot contract a 0-form");
  if (x.size() != a.n()) throw std::invalid_argument("vector length does not match form dimension");
  KForm out(a.n(), a.k() - 1);
  for (const auto& [I, c] : a.terms())
    for (std::size_t p = 0; p < I.size(); ++p) {
      const Rational& xi = x(I[p] - 1);
      if (xi.is_zero()) continue;
      KForm::Index rest = I;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      out.add_term(rest, (p % 2 == 0 ? c : -c) * xi);
    }
  return out;
}

KForm phi_from_triples(std::span<const Triple> triples, std::span<const int> coeffs) {
  if (!coeffs.empty() && coeffs.size() != triples.size())
    throw std::invalid_argument("one coefficient per triple expected");
  KForm phi(7, 3);
  for (std::size_t t = 0; t < triples.size(); ++t)
    phi.add_term({triples[t][0], triples[t][1], triples[t][2]}, coeffs.empty() ? 1 : coeffs[t]);
  return phi;
}

KForm standard_phi7() { return phi_from_triples(kFanoTriples); }

KForm volume_form(int n) {
  KForm::Index I(static_cast<std::size_t>(n));
  std::iota(I.begin(), I.end(), 1);
  return KForm::basis(n, I);
}

EngelMetric engel_metric(const KForm& phi) {
  if (phi.n() != 7 || phi.k() != 3) throw std::invalid_argument("Engel metric needs a 3-form on Q^7");
  std::vector<KForm> c;
  for (int i = 0; i < 7; ++i) c.push_back(contract(unit_vector(7, i), phi));
  const KForm::Index top = {1, 2, 3, 4, 5, 6, 7};
  EngelMetric m{MatrixQ(7, 7)};
  for (int i = 0; i < 7; ++i)
    for (int j = i; j < 7; ++j) {
      m.gram(i, j) = wedge(wedge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]), phi).coefficient(top);
      m.gram(j, i) = m.gram(i, j);
    }
  return m;
}

bool is_regular(const KForm& phi) { return !determinant(engel_metric(phi).gram).is_zero(); }

std::vector<KForm::Index> index_tuples(int n, int k) {
  std::vector<KForm::Index> out;
  KForm::Index I(static_cast<std::size_t>(k));
  std::iota(I.begin(), I.end(), 1);
  if (k == 0) return {I};
  while (true) {
    out.push_back(I);
    int p = k - 1;
    while (p >= 0 && I[static_cast<std::size_t>(p)] == n - k + p + 1) --p;
    if (p < 0) break;
    ++I[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) I[static_cast<std::size_t>(q)] = I[static_cast<std::size_t>(q - 1)] + 1;
  }
  return out;
}

namespace {

Rational minor(const MatrixQ& m, const KForm::Index& rows, const KForm::Index& cols) {
  const auto k = static_cast<int>(rows.size());
  if (k == 0) return 1;
  MatrixQ sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub(r, c) = m(rows[static_cast<std::size_t>(r)] - 1, cols[static_cast<std::size_t>(c)] - 1);
  return determinant(sub);
}

}  // namespace

KForm hodge_star(const KForm& a, const MatrixQ& metric, int orientation) {
  const int n = a.n();
  if (metric.rows() != n || metric.cols() != n) throw std::invalid_argument("metric size does not match form dimension");
  if (!is_symmetric(metric)) throw std::invalid_argument("metric is not symmetric");
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  const Rational det = determinant(metric);
  if (det.is_zero()) throw DegenerateMetric("metric is degenerate");
  if (!is_rational_square(abs(det)))
    throw std::invalid_argument("|det g| = " + abs(det).str() + " is not a rational square");
  const Rational vol = exact_sqrt(abs(det)) * Rational(orientation);
  const MatrixQ ginv = inverse(metric);

  const auto all = index_tuples(n, a.k());
  KForm out(n, n - a.k());
  for (const auto& I : all) {
    // raised component ω^I = Σ_K ω_K det(g^{-1}[I,K])
    Rational raised;
    for (const auto& [K, c] : a.terms()) raised += c * minor(ginv, I, K);
    if (raised.is_zero()) continue;
    KForm::Index full = I;
    KForm::Index comp;
    for (int i = 1; i <= n; ++i)
      if (!std::binary_search(I.begin(), I.end(), i)) comp.push_back(i);
    full.insert(full.end(), comp.begin(), comp.end());
    const int s = sort_with_sign(full);
    out.add_term(comp, raised * vol * Rational(s));
  }
  return out;
}

KForm form_from_algebra(const AlgebraSpec& algebra) {
  if (algebra.dim() != 8) throw std::invalid_argument("form_from_algebra needs an 8-dimensional algebra");
  auto value = [&algebra](int i, int j, int k) {
    const VectorQ& ij = algebra.product(i, j);
    Rational re;
    for (int m = 0; m < 8; ++m)
      if (!ij(m).is_zero()) re += ij(m) * algebra.product(m, k)(0);
    return -re;
  };
  KForm phi(7, 3);
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j)
      for (int k = 1; k < 8; ++k) {
        const Rational v = value(i, j, k);
        KForm::Index I = {i, j, k};
        const int s = sort_with_sign(I);
        const Rational expect = s == 0 ? Rational() : value(I[0], I[1], I[2]) * Rational(s);
        if (v != expect)
          throw std::invalid_argument("-Re((e_i e_j) e_k) is not alternating at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
        if (i < j && j < k) phi.add_term(I, v);
      }
  return phi;
}

KForm pullback(const KForm& omega, const MatrixQ& A) {
  const int n = omega.n();
  if (A.rows() != n || A.cols() != n) throw std::invalid_argument("pullback matrix has wrong size");
  KForm out(n, omega.k());
  for (const auto& I : index_tuples(n, omega.k())) {
    Rational c;
    for (const auto& [J, w] : omega.terms()) c += w * minor(A, J, I);
    out.add_term(I, c);
  }
  return out;
}

KForm parse_form(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::optional<KForm> form;
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if ((tok[0] == "+" || tok[0] == "-") && tok.size() > 1) {
      tok[1] = tok[0] + tok[1];
      tok.erase(tok.begin());
    }
    Rational c;
    try {
      c = Rational::parse(tok[0]);
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("bad coefficient: ") + e.what());
    }
    KForm::Index I;
    for (std::size_t t = 1; t < tok.size(); ++t) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok[t], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok[t].size() || used == 0) throw ParseError(line_no, "bad index '" + tok[t] + "'");
      if (v < 1 || v > n) throw ParseError(line_no, "index " + tok[t] + " outside 1.." + std::to_string(n));
      if (!I.empty() && v <= I.back()) throw ParseError(line_no, "indices must be strictly increasing");
      I.push_back(v);
    }
    if (!form) {
      if (static_cast<int>(I.size()) > n) throw ParseError(line_no, "degree exceeds dimension");
      form.emplace(n, static_cast<int>(I.size()));
    } else if (static_cast<int>(I.size()) != form->k()) {
      throw ParseError(line_no, "degree " + std::to_string(I.size()) + " differs from earlier terms (" +
                                    std::to_string(form->k()) + ")");
    }
    form->add_term(I, c);
  }
  if (!form) throw ParseError(line_no, "no terms");
  return *form;
}

std::string format_form(const KForm& form) {
  std::ostringstream os;
  os << "# " << form.k() << "-form on Q^" << form.n() << "\n";
  for (const auto& [I, c] : form.terms()) {
    os << (c.sign() > 0 ? "+" : "") << c;
    for (int i : I) os << " " << i;
    os << "\n";
  }
  return os.str();
}

}  // namespace g2
