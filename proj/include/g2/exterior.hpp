#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2/algebra.hpp"
#include "g2/rational.hpp"

namespace g2 {

/// Alternating k-form on Q^n, stored sparsely by strictly increasing 1-based
/// index tuples.
class KForm {
 public:
  using Index = std::vector<int>;

  KForm(int n, int k);

  /// c * e_I. I may be in any order; repeated indices give the zero form.
  static KForm basis(int n, const Index& I, const Rational& c = 1);
  static KForm scalar(int n, const Rational& c);
  /// Covector e^i (1-based).
  static KForm covector(int n, int i);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<Index, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of e_I; I in any order (the permutation sign is applied).
  Rational coefficient(const Index& I) const;
  /// Adds c * e_I with I in any order.
  void add_term(Index I, const Rational& c);

  KForm& operator+=(const KForm& rhs);
  KForm& operator-=(const KForm& rhs);
  KForm& operator*=(const Rational& c);
  KForm operator-() const;

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, const Rational& c) { return a *= c; }
  friend KForm operator*(const Rational& c, KForm a) { return a *= c; }
  friend bool operator==(const KForm&, const KForm&) = default;

  /// "+(124) -(157) ..." with coefficients shown when not ±1.
  std::string str() const;

 private:
  int n_;
  int k_;
  std::map<Index, Rational> terms_;
};

/// Sorts I in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(KForm::Index& I);

/// All strictly increasing k-tuples from 1..n, lexicographic.
std::vector<KForm::Index> index_tuples(int n, int k);

/// Throws std::invalid_argument on mismatched n or degree overflow.
KForm wedge(const KForm& a, const KForm& b);
/// Interior product x ⌟ a. Throws for degree-0 input or wrong vector length.
KForm contract(const VectorQ& x, const KForm& a);

/// The compact 3-form on Q^7 whose triples are kFanoTriples:
/// (124) - (157) - (136) + (235) - (267) - (347) - (456) in increasing order.
KForm standard_phi7();
/// Sum of coeff[t] * e_a∧e_b∧e_c over oriented triples (a,b,c); coefficients
/// default to +1.
KForm phi_from_triples(std::span<const Triple> triples, std::span<const int> coeffs = {});
/// e_1 ∧ ... ∧ e_n
KForm volume_form(int n);

/// Raw Engel gram: entry (i,j) is the coefficient of e1∧…∧e7 in
/// (e_i⌟φ)∧(e_j⌟φ)∧φ. Not normalized.
struct EngelMetric {
  MatrixQ gram;
};
/// Requires n = 7, k = 3.
EngelMetric engel_metric(const KForm& phi);
bool is_regular(const KForm& phi);

/// Hodge dual with respect to a nondegenerate symmetric metric and the volume
/// orientation * sqrt|det g| e1∧…∧en. |det g| must be a rational square.
/// Throws DegenerateMetric for singular metrics.
KForm hodge_star(const KForm& a, const MatrixQ& metric, int orientation = 1);

/// φ(e_i,e_j,e_k) = -Re((e_i e_j) e_k) over the imaginary units of an
/// 8-dimensional algebra. Throws std::invalid_argument for other dimensions or
/// when the result is not alternating.
KForm form_from_algebra(const AlgebraSpec& algebra);

/// Pullback (Aᵀ-action): (A*ω)(v_1..v_k) = ω(Av_1, …, Av_k).
KForm pullback(const KForm& omega, const MatrixQ& A);

/// Form text format: one term per line, `[+|-]c i j k ...` with 1-based
/// strictly increasing indices; `#` starts a comment. All terms share one
/// degree. Throws ParseError naming the line.
KForm parse_form(std::string_view text, int n = 7);
std::string format_form(const KForm& form);

}  // namespace g2
