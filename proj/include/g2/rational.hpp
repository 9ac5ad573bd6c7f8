#pragma once

#include <compare>
#include <optional>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace g2 {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Arithmetic never goes through GMP
/// expression templates, so the type behaves like a plain scalar inside
/// Eigen containers.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long long value);               // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(mpq_class value);

  /// Parses "7", "-3/4", "+2". Throws std::invalid_argument on malformed text
  /// or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string str() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& x);

/// Returns the exact square root when x is the square of a rational, else
/// throws std::domain_error.
Rational exact_sqrt(const Rational& x);
bool is_rational_square(const Rational& x);
/// The rational r with r^k = x, if there is one (odd k admits negative x).
std::optional<Rational> exact_root(const Rational& x, unsigned long k);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace g2

namespace Eigen {

template <>
struct NumTraits<g2::Rational> : GenericNumTraits<g2::Rational> {
  using Real = g2::Rational;
  using NonInteger = g2::Rational;
  using Nested = g2::Rational;
  using Literal = g2::Rational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 50
  };

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace g2 {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact zero test for any Eigen expression over Rational.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& expr) {
  // evaluate once; coefficient access on a product expression recomputes it
  const auto& m = expr.eval();
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

inline VectorQ unit_vector(Eigen::Index n, Eigen::Index i) {
  VectorQ v = VectorQ::Zero(n);
  v(i) = 1;
  return v;
}

}  // namespace g2
