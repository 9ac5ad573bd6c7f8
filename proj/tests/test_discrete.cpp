#include <gtest/gtest.h>

#include <random>
#include <set>

#include "g2/discrete.hpp"
#include "g2/errors.hpp"
#include "g2/exactla.hpp"
#include "g2/exterior.hpp"
#include "oracles.hpp"

using namespace g2;

namespace {

std::set<std::set<int>> as_sets(const std::vector<Triple>& lines) {
  std::set<std::set<int>> out;
  for (const auto& l : lines) out.insert({l[0], l[1], l[2]});
  return out;
}

SignedPerm cycle7(const std::vector<int>& signs) {
  SignedPerm s = SignedPerm::identity(8);
  for (int i = 1; i <= 7; ++i) {
    s.perm[static_cast<std::size_t>(i)] = i % 7 + 1;
    s.signs[static_cast<std::size_t>(i)] = signs[static_cast<std::size_t>(i - 1)];
  }
  return s;
}

}  // namespace

TEST(FanoLines, StandardForm) {
  const auto lines = fano_lines(standard_phi7());
  const std::vector<Triple> printed = {{1, 2, 4}, {1, 5, 7}, {1, 6, 3}, {2, 3, 5}, {2, 7, 6}, {3, 7, 4}, {4, 6, 5}};
  EXPECT_EQ(as_sets(lines), as_sets(printed));
  for (int p = 1; p <= 7; ++p) {
    int count = 0;
    for (const auto& l : lines) count += std::count(l.begin(), l.end(), p);
    EXPECT_EQ(count, 3);
  }
}

TEST(FanoLines, PairCoveredTwice) {
  KForm bad = KForm::basis(7, {1, 2, 3}) + KForm::basis(7, {1, 2, 4});
  for (const auto& t : std::vector<KForm::Index>{{1, 5, 7}, {1, 6, 3}, {2, 5, 6}, {3, 4, 7}, {4, 5, 6}})
    bad.add_term(t, 1);
  try {
    fano_lines(bad);
    FAIL() << "expected FanoAxiomError";
  } catch (const FanoAxiomError& err) {
    EXPECT_EQ(err.first, 1);
    EXPECT_EQ(err.second, 2);
  }
  EXPECT_THROW(check_projective_plane({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}}),
               FanoAxiomError);
}

TEST(Collineations, Order168) {
  const auto lines = fano_lines(standard_phi7());
  EXPECT_EQ(collineation_group_order(lines), 168u);
}

TEST(SignedPerm, GroupLaws) {
  const SignedPerm id = SignedPerm::identity(8);
  const SignedPerm c = cycle7({1, -1, 1, 1, -1, 1, 1});
  EXPECT_EQ(c.compose(c.inverse()), id);
  EXPECT_EQ(c.order() % 7, 0u);
  EXPECT_TRUE(is_automorphism(id, *algebras::octonions()));
  EXPECT_EQ(c.imaginary_matrix() * c.inverse().imaginary_matrix(), MatrixQ(MatrixQ::Identity(7, 7)));
}

TEST(Automorphisms, RawCycleNeedsMoreThanSigns) {
  int hits = 0;
  for (int mask = 0; mask < 128; ++mask) {
    std::vector<int> signs(7);
    for (int i = 0; i < 7; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
    hits += is_automorphism(cycle7(signs), *algebras::octonions());
  }
  EXPECT_EQ(hits, 0);
}

TEST(Automorphisms, OrderTwentyOneSubgroup) {
  const auto r = signed_automorphisms(*algebras::octonions());
  ASSERT_TRUE(r.order7.has_value());
  ASSERT_TRUE(r.order3.has_value());
  EXPECT_EQ(r.order7->order(), 7u);
  EXPECT_EQ(r.order3->order(), 3u);
  EXPECT_EQ(r.subgroup_order, 21u);
  EXPECT_TRUE(r.subgroup_non_abelian);
  const auto group = generated_group({*r.order7, *r.order3});
  EXPECT_EQ(group.size(), 21u);
  for (const auto& g : group) EXPECT_TRUE(is_automorphism(g, *algebras::octonions()));
  EXPECT_NE(r.order7->compose(*r.order3), r.order3->compose(*r.order7));
  EXPECT_EQ(r.elements.size(), r.group_order);
}

TEST(IsoSearch, Examples) {
  const auto o = algebras::octonions();
  const auto self = signed_iso_search(*o, *o);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(*self, SignedPerm::identity(8));

  const auto doubled = cayley_dickson_double(*algebras::quaternions(), -1);
  const auto iso = signed_iso_search(*doubled, *o);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_isomorphism(*iso, *doubled, *o));

  EXPECT_FALSE(signed_iso_search(*o, *algebras::split_octonions()).has_value());
}

// --- properties ------------------------------------------------------------

TEST(DiscreteProperty, AutomorphismsPreserveNorm) {
  std::mt19937 rng(601);
  const auto o = algebras::octonions();
  const auto r = signed_automorphisms(*o);
  std::uniform_int_distribution<std::size_t> pick(0, r.elements.size() - 1);
  const MatrixQ gram = o->norm_gram();
  for (int t = 0; t < 200; ++t) {
    const SignedPerm& s = r.elements[pick(rng)];
    const Element x = oracle::random_element(rng, o), y = oracle::random_element(rng, o);
    const Element sx(o, s.apply(x.coeffs())), sy(o, s.apply(y.coeffs()));
    ASSERT_EQ(quadratic_form(sx), quadratic_form(x));
    ASSERT_EQ(sx * sy, Element(o, s.apply((x * y).coeffs())));
    ASSERT_EQ(determinant(s.imaginary_matrix()), Rational(1));
  }
}

TEST(DiscreteProperty, CollineationCountIndependentOfLabels) {
  std::mt19937 rng(602);
  const auto lines = fano_lines(standard_phi7());
  std::vector<int> relabel{1, 2, 3, 4, 5, 6, 7};
  for (int t = 0; t < 200; ++t) {
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::vector<Triple> moved;
    for (const auto& l : lines) {
      Triple m{relabel[static_cast<std::size_t>(l[0] - 1)], relabel[static_cast<std::size_t>(l[1] - 1)],
               relabel[static_cast<std::size_t>(l[2] - 1)]};
      moved.push_back(m);
    }
    check_projective_plane(moved);
    ASSERT_EQ(collineation_group_order(moved), 168u);
  }
}
