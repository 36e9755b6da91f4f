#include <gtest/gtest.h>

#include "skew3/pbw.hpp"
#include "skew3/smooth.hpp"
#include "support.hpp"

using namespace skew3;
using namespace skew3::testing;

namespace {

// C1..C10 written out again from the overlap expansion, independently of the library.
std::vector<RationalFn> expected_conditions(const AlgebraSpec& s) {
  const RationalFn &al = s.alpha, &be = s.beta, &ga = s.gamma;
  const RationalFn &al_ = s.a_lambda, &bl = s.b_lambda, &cl = s.c_lambda, &dl = s.d_lambda;
  const RationalFn &am = s.a_mu, &bm = s.b_mu, &cm = s.c_mu, &dm = s.d_mu;
  const RationalFn &an = s.a_nu, &bn = s.b_nu, &cn = s.c_nu, &dn = s.d_nu;
  return {
      al_ * (ga - be),
      am * (al - 1) + bl * (1 - be),
      bm * (al - ga),
      an * (1 - al) + cl * (ga - 1),
      bn * (be - 1) + cm * (1 - ga),
      cn * (be - al),
      al_ * bn - al_ * cm + am * an * (1 - al) + ga * am * cl - an * bl + (ga - be) * dl,
      am * bn - al * an * bm - bl * cm + ga * bm * cl + (al - ga) * dm,
      am * cn - al * an * cm - bl * cn + bn * cl + (ga - 1) * cl * cm + (be - al) * dn,
      am * dn - al * an * dm - bl * dn + bn * dl + ga * cl * dm - cm * dl,
  };
}

// Both reductions of zyx with the naive right-to-left reducer.
NCPoly naive_difference(const AlgebraSpec& s) {
  const NaiveReducer naive(s);
  const NCPoly z = NCPoly::gen(Gen::z), x = NCPoly::gen(Gen::x);
  const NCPoly yx = naive.reduce_word("yx");
  const NCPoly zy = naive.reduce_word("zy");
  return naive.mul(z, yx) - naive.mul(zy, x);
}

AlgebraSpec c1_counterexample() {
  AlgebraSpec s;
  s.a_lambda = 1;
  s.beta = 2;
  return s;
}

}  // namespace

TEST(PbwConditions, TranscriptionMatchesIndependentCopy) {
  SeededRng rng(3);
  for (int i = 0; i < 60; ++i) {
    const AlgebraSpec s = random_spec(rng);
    const auto got = pbw_conditions(s);
    const auto want = expected_conditions(s);
    ASSERT_EQ(got.size(), 10u);
    for (std::size_t k = 0; k < 10; ++k) {
      EXPECT_EQ(got[k].id, "C" + std::to_string(k + 1));
      EXPECT_EQ(got[k].lhs, want[k]);
      EXPECT_EQ(got[k].holds, ratfn_is_zero(want[k]));
    }
  }
}

TEST(PbwConditions, Examples) {
  for (const auto& c : pbw_conditions(preset("1").spec)) EXPECT_TRUE(c.holds) << c.id;
  for (const auto& c : pbw_conditions(preset("4").spec)) EXPECT_TRUE(c.holds) << c.id;
  const auto bad = pbw_conditions(c1_counterexample());
  EXPECT_FALSE(bad[0].holds);
  EXPECT_EQ(bad[0].lhs, RationalFn(-1));
  EXPECT_FALSE(is_pbw(c1_counterexample()));

  AlgebraSpec s;
  s.gamma = 2;
  s.c_nu = 1;
  EXPECT_TRUE(is_pbw(s));
  EXPECT_TRUE(diamond_check(s).confluent);
}

TEST(PbwConditions, AllPresetsArePbw) {
  for (const auto* list : {&presets(), &preset_variants()}) {
    for (const auto& p : *list) {
      EXPECT_TRUE(is_pbw(p.spec)) << p.id;
      EXPECT_TRUE(diamond_check(p.spec).confluent) << p.id;
    }
  }
}

TEST(Diamond, Preset5iPathsAgree) {
  const DiamondReport r = diamond_check(preset("5i").spec);
  const NCPoly expected = M(1, 1, 1) - M(2, 0, 0) + M(0, 2, 0) - M(0, 0, 2);
  EXPECT_EQ(r.path_a, expected);
  EXPECT_EQ(r.path_b, expected);
  EXPECT_TRUE(r.difference.is_zero());
  EXPECT_TRUE(r.confluent);
  EXPECT_TRUE(r.closed_form_match);
}

TEST(Diamond, CommutativeRingIsConfluent) {
  const DiamondReport r = diamond_check(AlgebraSpec{});
  EXPECT_TRUE(r.confluent);
  EXPECT_EQ(r.path_a, M(1, 1, 1));
}

TEST(Diamond, QuadraticCoefficientOfC1Counterexample) {
  // a_lambda (gamma - beta) / (alpha gamma) with a_lambda = 1, alpha = gamma = 1, beta = 2.
  const DiamondReport r = diamond_check(c1_counterexample());
  EXPECT_FALSE(r.confluent);
  EXPECT_EQ(r.difference.coefficient(Monomial{2, 0, 0}), RationalFn(-1));
  EXPECT_TRUE(r.closed_form_match);
}

TEST(Diamond, PathsFollowTheirFirstRewrite) {
  const AlgebraSpec s = c1_counterexample();
  const Ring ring(s);
  const DiamondReport r = diamond_check(ring);
  EXPECT_EQ(r.path_a, ring.reduce(ring.rewrite_at("zyx", 1)));
  EXPECT_EQ(r.path_b, ring.reduce(ring.rewrite_at("zyx", 0)));
  EXPECT_EQ(r.difference, naive_difference(s));
}

TEST(Diamond, CoefficientsAgreeWithNaiveReductionAndClosedForm) {
  SeededRng rng(21);
  for (int i = 0; i < 100; ++i) {
    const AlgebraSpec s = random_spec(rng);
    const DiamondReport r = diamond_check(s);
    ASSERT_EQ(r.difference, naive_difference(s));
    ASSERT_EQ(r.difference, r.closed_form);
    ASSERT_TRUE(r.closed_form_match);
    // The xyz coefficient always cancels.
    ASSERT_TRUE(r.difference.coefficient(Monomial{1, 1, 1}).is_zero());
    ASSERT_EQ(r.confluent, is_pbw(s));
  }
}
