#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2/polynomial.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// e_i * e_j = sign * e_index; sign 0 means the product vanishes.
struct BasisProduct {
  int sign = 0;
  int index = 0;
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

using Triple = std::array<int, 3>;

/// Finite-dimensional unital algebra over Q given by structure constants.
///
/// Basis e_0, ..., e_{dim-1} with e_0 the two-sided unit. Construction checks
/// that e_0 is a unit and that e_i e_j + e_j e_i is a multiple of e_0 for all
/// imaginary i, j (distinct imaginary units anticommute up to a real part,
/// squares are real). Tables built from Cayley-Dickson doubling or Fano
/// triples are signed-unit tables: every product is 0 or ±e_k.
class AlgebraSpec {
 public:
  /// products[i * dim + j] holds the coordinates of e_i e_j.
  AlgebraSpec(std::string label, int dim, std::vector<VectorQ> products);

  static AlgebraSpec from_signed_table(std::string label, int dim, const std::vector<BasisProduct>& table);

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }

  const VectorQ& product(int i, int j) const { return products_[static_cast<std::size_t>(i * dim_ + j)]; }

  bool is_signed_table() const { return signed_table_.has_value(); }
  /// Only for signed-unit tables.
  BasisProduct signed_product(int i, int j) const;

  /// Real coefficient of e_i e_i for i >= 1.
  Rational unit_square(int i) const { return product(i, i)(0); }
  /// unit_square(i) for i = 1..dim-1 as ±1; throws std::logic_error if some
  /// square is not ±1.
  std::vector<int> unit_squares() const;

  /// Gram matrix of Q(x) = Re(x̄ x).
  MatrixQ norm_gram() const;

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_;
  }

 private:
  std::string label_;
  int dim_;
  std::vector<VectorQ> products_;
  std::optional<std::vector<BasisProduct>> signed_table_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Coefficient vector over a shared algebra.
class Element {
 public:
  Element(AlgebraPtr algebra, VectorQ coeffs);

  static Element basis(const AlgebraPtr& algebra, int i);
  static Element scalar(const AlgebraPtr& algebra, const Rational& c);

  const AlgebraPtr& algebra() const { return algebra_; }
  const VectorQ& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_(i); }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  const Rational& real() const { return coeffs_(0); }
  bool is_zero() const { return g2::is_zero(coeffs_); }
  bool is_real() const;
  std::string str() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& x, const Element& y);
  friend bool operator==(const Element& a, const Element& b);

 private:
  AlgebraPtr algebra_;
  VectorQ coeffs_;
};

/// Throws AlgebraMismatch when x and y live in different algebras.
Element multiply(const Element& x, const Element& y);
Element conjugate(const Element& x);
/// Real part of x̄x. Throws NonRealNorm if x̄x has an imaginary component.
Rational quadratic_form(const Element& x);
/// x̄ / Q(x). Throws ZeroElement for x = 0 and NullVector when Q(x) = 0.
Element inverse(const Element& x);
/// (xy)z - x(yz)
Element associator(const Element& x, const Element& y, const Element& z);

/// Doubles `base` with (p,q)(r,s) = (pr + gamma·s̄q, sp + q r̄).
/// Basis: e_i = (e_i, 0), e_{n+i} = (0, e_i). Rejects dim 16 input and gamma ∉ {±1}.
AlgebraPtr cayley_dickson_double(const AlgebraSpec& base, int gamma, std::string label = {});

/// Octonion-type algebra from seven oriented triples (a,b,c) meaning
/// e_a e_b = e_c together with its cyclic rotations. unit_squares[i-1] is e_i².
/// When both e_a² = e_b² = +1 the product e_a e_b changes sign, which is what
/// keeps the split tables alternative. Each line must hold zero or two units
/// squaring to +1. Throws FanoAxiomError naming a pair covered twice or never.
AlgebraPtr octonions_from_triples(std::span<const Triple> triples, std::span<const int> unit_squares,
                                  std::string label = "octonions");

/// Symbolic composition check: expands Q(xy) - Q(x)Q(y) in 2·dim formal
/// variables. On failure, `witness` is a rational pair with Q(xy) != Q(x)Q(y).
struct CompositionCheck {
  bool holds = false;
  Polynomial defect;
  std::optional<std::pair<Element, Element>> witness;
};
CompositionCheck is_composition(const AlgebraPtr& algebra);

/// Q(xy) != Q(x)Q(y) searched over x = e_i ± e_j, y = e_k ± e_l (i<j, k<l).
std::optional<std::pair<Element, Element>> composition_witness(const AlgebraPtr& algebra);

/// xy = 0 with x, y nonzero, searched over x = e_i ± e_j, y = e_k ± e_l.
std::optional<std::pair<Element, Element>> find_zero_divisor(const AlgebraPtr& algebra);

/// The associator is alternating, checked on all basis triples (exact, since
/// the associator is trilinear).
bool is_alternative(const AlgebraSpec& algebra);

/// conj(e_i e_j) = conj(e_j) conj(e_i) for all basis pairs.
bool conjugation_is_antiautomorphism(const AlgebraSpec& algebra);

/// Triples whose cyclic products give the octonions in the canonical basis:
/// e1e2 = e4, e2e3 = e5, ...
inline constexpr std::array<Triple, 7> kFanoTriples = {
    {{1, 2, 4}, {1, 7, 5}, {1, 6, 3}, {2, 3, 5}, {2, 7, 6}, {3, 7, 4}, {4, 6, 5}}};

/// Squares of e1..e7 for the split octonions: e1, e4, e6, e7 are involutive.
inline constexpr std::array<int, 7> kSplitUnitSquares = {+1, -1, -1, +1, -1, +1, +1};

namespace algebras {

AlgebraPtr reals();
AlgebraPtr complex();
AlgebraPtr split_complex();
AlgebraPtr quaternions();
AlgebraPtr split_quaternions();
AlgebraPtr octonions();
AlgebraPtr split_octonions();
AlgebraPtr sedenions();

/// reals, complex, split-complex, quaternions, split-quaternions, octonions,
/// split-octonions, sedenions
const std::vector<std::string>& builtin_names();
/// nullptr for an unknown name.
AlgebraPtr builtin(std::string_view name);

}  // namespace algebras

/// Parses the table text format:
///   dim N
///   i j c k        # e_i e_j += c e_k, imaginary i, j (1-based, < N)
/// The unit row and column are filled in. Throws ParseError with the line.
AlgebraPtr parse_algebra_table(std::string_view text, std::string label = "table");

}  // namespace g2
