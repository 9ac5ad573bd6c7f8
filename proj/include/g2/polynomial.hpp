#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "g2/rational.hpp"

namespace g2 {

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A monomial is stored as the sorted multiset of its variable indices, one
/// byte per factor (x0^2*x3 is "\0\0\3"), which keeps low-degree keys inside
/// the small-string buffer. At most 256 variables.
class Polynomial {
 public:
  using Monomial = std::string;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  /// Exponent vector of a monomial key, length variables().
  std::vector<int> exponents(const Monomial& m) const;

  /// Human-readable form, e.g. "x0^2 - 2*x1*y0". `name` maps a variable index
  /// to its printed name.
  std::string str(const std::function<std::string(std::size_t)>& name) const;
  std::string str() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::size_t variables_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace g2
