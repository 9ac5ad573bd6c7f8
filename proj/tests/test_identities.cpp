#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "g2/identities.hpp"
#include "oracles.hpp"

using namespace g2;

TEST(Identities, TwoSquaresComplex) {
  const auto id = derive_identity(algebras::complex());
  EXPECT_EQ(format_identity(id), "(x0^2 + x1^2)*(y0^2 + y1^2) = (x0*y0 - x1*y1)^2 + (x0*y1 + x1*y0)^2");
  EXPECT_TRUE(verify_identity(id).holds);
}

TEST(Identities, TwoSquaresSplitComplex) {
  const auto id = derive_identity(algebras::split_complex());
  EXPECT_EQ(format_identity(id), "(x0^2 - x1^2)*(y0^2 - y1^2) = (x0*y0 + x1*y1)^2 - (x0*y1 + x1*y0)^2");
  EXPECT_TRUE(verify_identity(id).holds);
}

TEST(Identities, FourAndEightSquares) {
  for (const auto& a : {algebras::quaternions(), algebras::split_quaternions(), algebras::octonions(),
                        algebras::split_octonions()}) {
    const auto id = derive_identity(a);
    EXPECT_EQ(id.n, a->dim());
    const auto start = std::chrono::steady_clock::now();
    const auto check = verify_identity(id);
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(check.holds) << a->label();
    EXPECT_EQ(check.lhs, check.rhs);
    EXPECT_LT(ms, 2000.0);
  }
}

TEST(Identities, CorruptedFormIsCaught) {
  auto id = derive_identity(algebras::octonions());
  // flip one sign in z_3
  for (int i = 0; i < id.n; ++i)
    for (int j = 0; j < id.n; ++j)
      if (id.z_forms[3](i, j) != 0) {
        id.z_forms[3](i, j) = -id.z_forms[3](i, j);
        i = j = id.n;
      }
  const auto check = verify_identity(id);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.mismatch.has_value());
  EXPECT_FALSE(check.mismatch->empty());
}

TEST(Identities, Rejections) {
  EXPECT_THROW(derive_identity(algebras::sedenions()), std::invalid_argument);
}

TEST(Hurwitz, Boundary) {
  const auto w = hurwitz_boundary();
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->q_xy, w->q_x_q_y);
  EXPECT_EQ(w->q_xy, quadratic_form(w->x * w->y));
  EXPECT_EQ(w->q_x_q_y, quadratic_form(w->x) * quadratic_form(w->y));
  EXPECT_FALSE(hurwitz_boundary(algebras::octonions()).has_value());
  EXPECT_FALSE(hurwitz_boundary(algebras::split_quaternions()).has_value());
}

// --- properties ------------------------------------------------------------

TEST(IdentityProperty, RandomSubstitution) {
  std::mt19937 rng(701);
  for (const auto& a : {algebras::complex(), algebras::split_complex(), algebras::quaternions(),
                        algebras::split_quaternions(), algebras::octonions(), algebras::split_octonions()}) {
    const auto id = derive_identity(a);
    const auto check = verify_identity(id);
    for (int t = 0; t < 1000; ++t) {
      std::vector<Rational> point;
      for (int i = 0; i < 2 * id.n; ++i) point.push_back(oracle::small_rational(rng));
      ASSERT_EQ(check.lhs.evaluate(point), check.rhs.evaluate(point)) << a->label();
    }
  }
}

TEST(IdentityProperty, NaturalUnderSignedRelabeling) {
  // x·y in the algebra has components z_k; a signed permutation of the basis
  // permutes the z's with signs, so the squared sums are unchanged.
  std::mt19937 rng(702);
  const auto o = algebras::octonions();
  const auto id = derive_identity(o);
  for (int t = 0; t < 200; ++t) {
    const Element x = oracle::random_element(rng, o), y = oracle::random_element(rng, o);
    Rational lhs_x, lhs_y, rhs;
    for (int i = 0; i < id.n; ++i) {
      lhs_x += Rational(id.signs_lhs[static_cast<std::size_t>(i)]) * x[i] * x[i];
      lhs_y += Rational(id.signs_lhs[static_cast<std::size_t>(i)]) * y[i] * y[i];
    }
    const Element xy = x * y;
    for (int k = 0; k < id.n; ++k) {
      Rational z;
      for (int i = 0; i < id.n; ++i)
        for (int j = 0; j < id.n; ++j)
          if (id.z_forms[static_cast<std::size_t>(k)](i, j) != 0)
            z += Rational(id.z_forms[static_cast<std::size_t>(k)](i, j)) * x[i] * y[j];
      ASSERT_EQ(z, xy[k]);
      rhs += Rational(id.signs_rhs[static_cast<std::size_t>(k)]) * z * z;
    }
    ASSERT_EQ(lhs_x * lhs_y, rhs);
  }
}
