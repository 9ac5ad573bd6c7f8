#include "g2/rational.hpp"

#include <optional>

#include <ostream>
#include <stdexcept>

namespace g2 {

namespace {

mpq_class canonical(mpq_class v) {
  v.canonicalize();
  return v;
}

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') return false;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational::Rational(long long value) : value_(Integer(std::to_string(value))) {}

Rational::Rational(long numerator, long denominator)
    : Rational(Integer(numerator), Integer(denominator)) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = canonical(mpq_class(numerator, denominator));
}

Rational::Rational(mpq_class value) : value_(canonical(std::move(value))) {}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  } else {
    auto den_text = text.substr(slash + 1);
    if (!parse_integer(text.substr(0, slash), num) || den_text.empty() || den_text[0] == '-' ||
        den_text[0] == '+' || !parse_integer(den_text, den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

bool is_rational_square(const Rational& x) {
  if (x.sign() < 0) return false;
  return mpz_perfect_square_p(x.value().get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(x.value().get_den_mpz_t()) != 0;
}

Rational exact_sqrt(const Rational& x) {
  if (!is_rational_square(x)) throw std::domain_error(x.str() + " is not the square of a rational");
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), x.value().get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.value().get_den_mpz_t());
  return Rational(num, den);
}

std::optional<Rational> exact_root(const Rational& x, unsigned long k) {
  if (k == 0 || (x.sign() < 0 && k % 2 == 0)) return std::nullopt;
  Integer num;
  Integer den;
  if (mpz_root(num.get_mpz_t(), x.value().get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), x.value().get_den_mpz_t(), k) == 0) return std::nullopt;
  return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace g2
