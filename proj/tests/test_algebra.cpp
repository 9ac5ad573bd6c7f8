#include <gtest/gtest.h>

#include <random>

#include "g2/algebra.hpp"
#include "g2/errors.hpp"
#include "g2/exactla.hpp"
#include "oracles.hpp"

using namespace g2;

namespace {

Element e(const AlgebraPtr& a, int i) { return Element::basis(a, i); }

const std::vector<AlgebraPtr>& composition_algebras() {
  static const std::vector<AlgebraPtr> all = {algebras::complex(),           algebras::split_complex(),
                                              algebras::quaternions(),       algebras::split_quaternions(),
                                              algebras::octonions(),         algebras::split_octonions()};
  return all;
}

}  // namespace

TEST(CayleyDickson, ComplexAndSplitComplex) {
  const auto c = cayley_dickson_double(*algebras::reals(), -1);
  const auto s = cayley_dickson_double(*algebras::reals(), +1);
  EXPECT_EQ(c->unit_squares(), std::vector<int>{-1});
  EXPECT_EQ(s->unit_squares(), std::vector<int>{+1});
  EXPECT_EQ(*c, *algebras::complex());
  EXPECT_EQ(*s, *algebras::split_complex());
}

TEST(CayleyDickson, DoubledQuaternionsAllSquareMinusOne) {
  const auto o = cayley_dickson_double(*algebras::quaternions(), -1);
  EXPECT_EQ(o->dim(), 8);
  EXPECT_EQ(o->unit_squares(), std::vector<int>(7, -1));
}

TEST(CayleyDickson, RejectsBadInput) {
  EXPECT_THROW(cayley_dickson_double(*algebras::sedenions(), -1), std::invalid_argument);
  EXPECT_THROW(cayley_dickson_double(*algebras::reals(), 2), std::invalid_argument);
}

TEST(Octonions, CanonicalRelations) {
  const auto o = algebras::octonions();
  EXPECT_EQ(e(o, 1) * e(o, 2), e(o, 4));
  EXPECT_EQ(e(o, 2) * e(o, 1), -e(o, 4));
  EXPECT_EQ(e(o, 2) * e(o, 3), e(o, 5));
  EXPECT_EQ(o->unit_squares(), std::vector<int>(7, -1));
}

TEST(Octonions, SplitTableKeepsQuotedRelations) {
  const auto s = algebras::split_octonions();
  EXPECT_EQ(e(s, 1) * e(s, 2), e(s, 4));
  EXPECT_EQ(e(s, 3) * e(s, 1), e(s, 6));
  EXPECT_EQ(s->unit_squares(), std::vector<int>(kSplitUnitSquares.begin(), kSplitUnitSquares.end()));
}

TEST(Octonions, FanoErrorNamesPair) {
  const std::array<Triple, 7> bad = {{{1, 2, 3}, {1, 2, 4}, {1, 6, 3}, {2, 3, 5}, {2, 7, 6}, {3, 7, 4}, {4, 6, 5}}};
  const std::array<int, 7> squares{-1, -1, -1, -1, -1, -1, -1};
  try {
    octonions_from_triples(bad, squares);
    FAIL() << "expected FanoAxiomError";
  } catch (const FanoAxiomError& err) {
    EXPECT_EQ(err.first, 1);
    EXPECT_EQ(err.second, 2);
  }
}

TEST(Element, UnitConjugateAndNorm) {
  const auto o = algebras::octonions();
  std::mt19937 rng(7);
  const Element x(o, oracle::random_vector(rng, 8));
  EXPECT_EQ(Element::scalar(o, 1) * x, x);
  EXPECT_EQ(conjugate(Element::scalar(o, 1)), Element::scalar(o, 1));
  EXPECT_EQ(conjugate(e(o, 3)), -e(o, 3));
  EXPECT_EQ(conjugate(Element::scalar(o, 2) + e(o, 1) * Rational(3)), Element::scalar(o, 2) - e(o, 1) * Rational(3));
  EXPECT_EQ(quadratic_form(Element::scalar(o, 1)), Rational(1));
  EXPECT_EQ(quadratic_form(e(o, 5)), Rational(1));
  EXPECT_EQ(quadratic_form(e(algebras::split_octonions(), 1)), Rational(-1));
}

TEST(Element, MultiplyInHamilton) {
  const auto h = algebras::quaternions();
  EXPECT_EQ(e(h, 1) * e(h, 2), e(h, 3));
}

TEST(Element, Inverse) {
  const auto o = algebras::octonions();
  EXPECT_EQ(inverse(e(o, 2)), -e(o, 2));
  EXPECT_EQ(inverse(Element::scalar(o, 2)), Element::scalar(o, Rational(1, 2)));
  const auto s = algebras::split_complex();
  EXPECT_THROW(inverse(e(s, 0) + e(s, 1)), NullVector);
  EXPECT_THROW(inverse(Element::scalar(o, 0)), ZeroElement);
  EXPECT_THROW(multiply(e(o, 1), e(s, 1)), AlgebraMismatch);
}

TEST(Associator, Examples) {
  const auto h = algebras::quaternions();
  EXPECT_TRUE(associator(e(h, 1), e(h, 2), e(h, 3)).is_zero());
  const auto o = algebras::octonions();
  EXPECT_FALSE(associator(e(o, 1), e(o, 2), e(o, 3)).is_zero());
  const Element x = e(o, 1) + e(o, 6), y = e(o, 2) - e(o, 7);
  EXPECT_TRUE(associator(x, x, y).is_zero());
}

TEST(Alternative, Examples) {
  EXPECT_TRUE(is_alternative(*algebras::octonions()));
  EXPECT_TRUE(is_alternative(*algebras::split_octonions()));
  EXPECT_FALSE(is_alternative(*algebras::sedenions()));
}

TEST(Composition, HoldsThroughDimensionEight) {
  for (const auto& a : composition_algebras()) {
    const auto check = is_composition(a);
    EXPECT_TRUE(check.holds) << a->label();
    EXPECT_TRUE(check.defect.is_zero()) << a->label();
  }
}

TEST(Composition, SedenionWitness) {
  const auto check = is_composition(algebras::sedenions());
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.witness.has_value());
  const auto& [x, y] = *check.witness;
  EXPECT_NE(quadratic_form(x * y), quadratic_form(x) * quadratic_form(y));
  EXPECT_FALSE(composition_witness(algebras::octonions()).has_value());
}

TEST(ZeroDivisor, Examples) {
  const auto s = algebras::split_complex();
  const auto pair = find_zero_divisor(s);
  ASSERT_TRUE(pair.has_value());
  EXPECT_TRUE((pair->first * pair->second).is_zero());
  EXPECT_FALSE(find_zero_divisor(algebras::octonions()).has_value());
  for (const auto& a : {algebras::split_quaternions(), algebras::split_octonions(), algebras::sedenions()}) {
    const auto z = find_zero_divisor(a);
    ASSERT_TRUE(z.has_value()) << a->label();
    EXPECT_FALSE(z->first.is_zero());
    EXPECT_FALSE(z->second.is_zero());
    EXPECT_TRUE((z->first * z->second).is_zero());
  }
}

TEST(NormGram, Signatures) {
  EXPECT_EQ(signature(algebras::octonions()->norm_gram()), (Signature{8, 0, 0}));
  EXPECT_EQ(signature(algebras::split_octonions()->norm_gram()), (Signature{4, 4, 0}));
  EXPECT_EQ(signature(algebras::split_quaternions()->norm_gram()), (Signature{2, 2, 0}));
}

TEST(ParseTable, ReadsQuaternions) {
  const auto h = parse_algebra_table("dim 4\n1 1 -1 0\n2 2 -1 0\n3 3 -1 0\n"
                                     "1 2 1 3\n2 1 -1 3\n2 3 1 1\n3 2 -1 1\n3 1 1 2\n1 3 -1 2\n");
  EXPECT_EQ(*h, *algebras::quaternions());
}

TEST(ParseTable, Errors) {
  try {
    parse_algebra_table("dim 4\n1 2 x 3\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line, 2);
  }
  EXPECT_THROW(parse_algebra_table("1 2 1 3\n"), ParseError);
  EXPECT_THROW(parse_algebra_table("dim 4\n1 9 1 3\n"), ParseError);
}

// --- properties ------------------------------------------------------------

TEST(AlgebraProperty, CompositionOnRandomPairs) {
  std::mt19937 rng(201);
  for (const auto& a : composition_algebras())
    for (int t = 0; t < 1000; ++t) {
      const Element x = oracle::random_element(rng, a), y = oracle::random_element(rng, a);
      ASSERT_EQ(quadratic_form(x * y), quadratic_form(x) * quadratic_form(y)) << a->label();
    }
}

TEST(AlgebraProperty, AlternatorIsAntisymmetric) {
  std::mt19937 rng(202);
  for (const auto& a : {algebras::octonions(), algebras::split_octonions()})
    for (int t = 0; t < 250; ++t) {
      const Element x = oracle::random_element(rng, a), y = oracle::random_element(rng, a),
                    z = oracle::random_element(rng, a);
      const Element A = associator(x, y, z);
      ASSERT_EQ(associator(y, x, z), -A);
      ASSERT_EQ(associator(x, z, y), -A);
      ASSERT_EQ(associator(z, x, y), A);
      ASSERT_TRUE(associator(x, x, y).is_zero());
      ASSERT_TRUE(associator(x, y, y).is_zero());
    }
}

TEST(AlgebraProperty, ConjugationIsAntiAutomorphism) {
  std::mt19937 rng(203);
  for (const auto& a : composition_algebras()) {
    EXPECT_TRUE(conjugation_is_antiautomorphism(*a));
    for (int t = 0; t < 200; ++t) {
      const Element x = oracle::random_element(rng, a), y = oracle::random_element(rng, a);
      ASSERT_EQ(conjugate(x * y), conjugate(y) * conjugate(x)) << a->label();
    }
  }
}

TEST(AlgebraProperty, InverseOfNonNullElements) {
  std::mt19937 rng(204);
  const auto a = algebras::split_octonions();
  int checked = 0;
  while (checked < 200) {
    const Element x = oracle::random_element(rng, a);
    if (quadratic_form(x).is_zero()) continue;
    ASSERT_EQ(x * inverse(x), Element::scalar(a, 1));
    ++checked;
  }
}
