#include "g2/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2 {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  if (index >= variables || index > 255) throw std::out_of_range("polynomial variable index");
  Polynomial p(variables);
  p.add_term(Monomial(1, static_cast<char>(index)), 1);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw std::invalid_argument("evaluation point has wrong length");
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (char v : m) t *= point[static_cast<unsigned char>(v)];
    total += t;
  }
  return total;
}

std::vector<int> Polynomial::exponents(const Monomial& m) const {
  std::vector<int> e(variables_, 0);
  for (char v : m) ++e[static_cast<unsigned char>(v)];
  return e;
}

std::string Polynomial::str(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string body;
    std::size_t i = 0;
    while (i < m.size()) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      if (!body.empty()) body += "*";
      body += name(static_cast<unsigned char>(m[i]));
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += body;
    } else {
      out += mag.str() + "*" + body;
    }
  }
  return out;
}

std::string Polynomial::str() const {
  return str([](std::size_t i) { return "x" + std::to_string(i); });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.variables_ != variables_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.variables_ != variables_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  return p *= Rational(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) throw std::invalid_argument("polynomials over different variable sets");
  Polynomial out(a.variables_);
  Polynomial::Monomial key;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      key.resize(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), key.begin(),
                 [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

}  // namespace g2
