#include <gtest/gtest.h>

#include "skew3/calculus.hpp"
#include "skew3/pbw.hpp"
#include "skew3/smooth.hpp"
#include "support.hpp"

using namespace skew3;
using namespace skew3::testing;

namespace {

const NCPoly X = NCPoly::gen(Gen::x), Y = NCPoly::gen(Gen::y), Z = NCPoly::gen(Gen::z);

}  // namespace

TEST(AlgebraSpec, Validation) {
  EXPECT_NO_THROW(validate_spec(preset("1").spec));
  AlgebraSpec s;
  s.alpha = 0;
  try {
    validate_spec(s);
    FAIL() << "expected InvalidSpec";
  } catch (const InvalidSpec& e) {
    EXPECT_EQ(e.field(), "alpha");
  }
  AlgebraSpec t;
  t.beta = P("beta") - P("beta");
  try {
    Ring r(t);
    FAIL() << "expected InvalidSpec";
  } catch (const InvalidSpec& e) {
    EXPECT_EQ(e.field(), "beta");
  }
}

TEST(AlgebraSpec, FieldNamesAreCanonical) {
  const auto& names = AlgebraSpec::field_names();
  ASSERT_EQ(names.size(), 15u);
  EXPECT_EQ(names[0], "alpha");
  EXPECT_EQ(names[3], "a_lambda");
  EXPECT_EQ(names[14], "d_nu");
  AlgebraSpec s;
  s.field("c_mu") = 7;
  EXPECT_EQ(s.c_mu, RationalFn(7));
}

TEST(Ring, ExampleProducts) {
  const Ring r1(preset("1").spec);
  EXPECT_EQ(r1.mul(Y, X), M(1, 1, 0, P("gamma").inverse()));

  const Ring r5(preset("5i").spec);
  EXPECT_EQ(r5.mul(Y, X), M(1, 1, 0) - Z);
  const NCPoly expected = M(1, 1, 1) - M(2, 0, 0) + M(0, 2, 0) - M(0, 0, 2);
  EXPECT_EQ(r5.mul(Z, r5.mul(Y, X)), expected);
  EXPECT_EQ(r5.mul(r5.mul(Z, Y), X), expected);
  EXPECT_EQ(expected.to_string(), "x*y*z - x^2 + y^2 - z^2");
}

TEST(Ring, NormalFormAlreadyOrdered) {
  const Ring r(preset("2ii").spec);
  EXPECT_EQ(r.mul(X, Y), M(1, 1, 0));
  EXPECT_EQ(r.mul(M(1, 2, 0), M(0, 1, 3)), M(1, 3, 3));
  EXPECT_EQ(r.pow(X + Y, 0), C(1));
}

TEST(Ring, LeftmostInversion) {
  EXPECT_EQ(Ring::leftmost_inversion("xyz"), std::nullopt);
  EXPECT_EQ(Ring::leftmost_inversion("zyx"), 0u);
  EXPECT_EQ(Ring::leftmost_inversion("xzy"), 1u);
}

TEST(NCPoly, AddScale) {
  EXPECT_TRUE(nc_add(X, -X).is_zero());
  const NCPoly xy = M(1, 1, 0);
  EXPECT_EQ(nc_scale(nc_scale(xy, P("gamma")), P("gamma").inverse()), xy);
  EXPECT_EQ(nc_add(xy - Z, Z), xy);
  EXPECT_TRUE(nc_scale(xy, RationalFn()).is_zero());
  EXPECT_TRUE(C(RationalFn()).is_zero());
}

TEST(NCPoly, Printing) {
  EXPECT_EQ(NCPoly().to_string(), "0");
  EXPECT_EQ((M(2, 1, 0, P("beta") - 1) + C(Q(1, 2))).to_string(), "(beta - 1)*x^2*y + 1/2");
  EXPECT_EQ(M(0, 0, 1, -P("a")).to_string(), "-a*z");
}

TEST(Endo, ApplyExamples) {
  const Ring r(preset("1").spec);
  const TwistTriple t = build_automorphisms(r);
  EXPECT_EQ(apply_endo(r, t.nu_x, X), M(1, 0, 0, P("beta").inverse()));
  EXPECT_EQ(apply_endo(r, t.nu_x, M(0, 1, 1)), M(0, 1, 1, P("beta") / P("gamma")));
  SeededRng rng(5);
  for (int i = 0; i < 20; ++i) {
    const NCPoly p = random_ncpoly(rng, 3, 4, {"alpha"});
    EXPECT_EQ(apply_endo(r, Endo::identity(), p), p);
  }
}

TEST(Endo, AffineInverse) {
  const Ring r(preset("2ii").spec);
  const TwistTriple t = build_automorphisms(r);
  for (Gen g : kGens) {
    const Endo& e = t.of(g);
    ASSERT_TRUE(e.inverse.has_value());
    const Endo inv = e.inverted();
    for (Gen h : kGens) {
      EXPECT_EQ(apply_endo(r, e, inv.image(h)), NCPoly::gen(h));
      EXPECT_EQ(apply_endo(r, inv, e.image(h)), NCPoly::gen(h));
    }
  }
  EXPECT_EQ(affine_inverse({M(2, 0, 0), Y, Z}), std::nullopt);  // degree 2 image
  EXPECT_EQ(affine_inverse({Y, Y, Z}), std::nullopt);          // singular
}

// Per-spec properties over random triples of degree <= 3.
class RingProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RingProperties, UnitDistributivityAssociativityAgainstNaiveReducer) {
  const auto specs = pbw_sample_specs(77, 40);
  const AlgebraSpec& s = specs.at(GetParam());
  const Ring ring(s);
  const NaiveReducer naive(s);
  const auto params = spec_params(s);
  SeededRng rng(9000 + GetParam());
  for (int i = 0; i < 100; ++i) {
    const NCPoly p = random_ncpoly(rng, 3, 3, params);
    const NCPoly q = random_ncpoly(rng, 3, 3, params);
    const NCPoly w = random_ncpoly(rng, 2, 2, params);
    const NCPoly pq = ring.mul(p, q);
    ASSERT_EQ(ring.mul(C(1), p), p);
    ASSERT_EQ(ring.mul(p, C(1)), p);
    ASSERT_EQ(ring.mul(p, q + w), pq + ring.mul(p, w));
    ASSERT_EQ(ring.mul(p + w, q), pq + ring.mul(w, q));
    if (i % 4 == 0) {
      ASSERT_EQ(pq, naive.mul(p, q)) << "p = " << p.to_string() << ", q = " << q.to_string();
      ASSERT_EQ(ring.mul(pq, w), ring.mul(p, ring.mul(q, w)));
    }
  }
}

TEST_P(RingProperties, LeadingMonomialIsMultiplicative) {
  const auto specs = pbw_sample_specs(77, 40);
  const Ring ring(specs.at(GetParam()));
  for (const Monomial& a : monomials_up_to(2)) {
    for (const Monomial& b : monomials_up_to(2)) {
      const NCPoly prod = ring.mul_monomials(a, b);
      const Monomial lead{a.x + b.x, a.y + b.y, a.z + b.z};
      ASSERT_EQ(prod.leading(), lead);
      ASSERT_FALSE(prod.coefficient(lead).is_zero());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Specs, RingProperties, ::testing::Range<std::size_t>(0, 24));

TEST(Ring, ApplyEndoIsAdditiveAndMultiplicativeForHomomorphisms) {
  for (const char* id : {"1", "2ii", "5v", "3ii"}) {
    const Ring ring(preset(id).spec);
    const TwistTriple t = build_automorphisms(ring);
    const auto params = spec_params(ring.spec());
    SeededRng rng(31);
    for (Gen g : kGens) {
      ASSERT_TRUE(endo_is_homomorphism(ring, t.of(g))) << id;
      for (int i = 0; i < 10; ++i) {
        const NCPoly p = random_ncpoly(rng, 3, 3, params), q = random_ncpoly(rng, 3, 3, params);
        const Endo& e = t.of(g);
        ASSERT_EQ(apply_endo(ring, e, p + q), apply_endo(ring, e, p) + apply_endo(ring, e, q));
        ASSERT_EQ(apply_endo(ring, e, ring.mul(p, q)),
                  ring.mul(apply_endo(ring, e, p), apply_endo(ring, e, q)));
      }
    }
  }
}

TEST(Ring, NonPbwSpecStillReducesDeterministically) {
  AlgebraSpec s;
  s.beta = 2;
  s.a_lambda = 1;
  ASSERT_FALSE(is_pbw(s));
  const Ring a(s), b(s);
  const NCPoly zyx = a.reduce({{"zyx", RationalFn(1)}});
  EXPECT_EQ(zyx, b.reduce({{"zyx", RationalFn(1)}}));
}
