#include "skew3/calculus.hpp"

namespace skew3 {

namespace {

NCPoly affine(const RationalFn& cx, const RationalFn& cy, const RationalFn& cz,
              const RationalFn& c0) {
  NCPoly p;
  p.add_term(Monomial::of(Gen::x), cx);
  p.add_term(Monomial::of(Gen::y), cy);
  p.add_term(Monomial::of(Gen::z), cz);
  p.add_term(Monomial{}, c0);
  return p;
}

Endo with_inverse(std::array<NCPoly, 3> images) {
  auto inv = affine_inverse(images);
  if (!inv) throw Error("twist automorphism is not invertible");
  return Endo{std::move(images), std::move(inv)};
}

}  // namespace

const Endo& TwistTriple::of(Gen g) const {
  switch (g) {
    case Gen::x:
      return nu_x;
    case Gen::y:
      return nu_y;
    case Gen::z:
      return nu_z;
  }
  return nu_x;
}

TwistTriple build_automorphisms(const Ring& ring) {
  const auto& s = ring.spec();
  const RationalFn zero;
  const RationalFn ainv = s.alpha.inverse();
  const RationalFn binv = s.beta.inverse();
  const RationalFn ginv = s.gamma.inverse();
  TwistTriple t;
  t.nu_x = with_inverse({affine(binv, zero, zero, zero), affine(zero, ginv, zero, -ginv * s.a_nu),
                         affine(zero, zero, s.beta, s.a_mu)});
  t.nu_y = with_inverse({affine(s.gamma, zero, zero, s.b_nu), affine(zero, 1, zero, zero),
                         affine(zero, zero, ainv, -ainv * s.b_lambda)});
  t.nu_z = with_inverse({affine(binv, zero, zero, -binv * s.c_mu),
                         affine(zero, s.alpha, zero, s.c_lambda), affine(zero, zero, s.beta, zero)});
  return t;
}

std::array<NCPoly, 3> relation_defects(const Ring& ring, const Endo& e) {
  const auto& s = ring.spec();
  const NCPoly& ex = e.image(Gen::x);
  const NCPoly& ey = e.image(Gen::y);
  const NCPoly& ez = e.image(Gen::z);
  auto rhs = [&](const RationalFn& a, const RationalFn& b, const RationalFn& c, const RationalFn& d) {
    return ex.scaled(a) + ey.scaled(b) + ez.scaled(c) + NCPoly(d);
  };
  return {
      ring.mul(ey, ez) - ring.mul(ez, ey).scaled(s.alpha) -
          rhs(s.a_lambda, s.b_lambda, s.c_lambda, s.d_lambda),
      ring.mul(ez, ex) - ring.mul(ex, ez).scaled(s.beta) - rhs(s.a_mu, s.b_mu, s.c_mu, s.d_mu),
      ring.mul(ex, ey) - ring.mul(ey, ex).scaled(s.gamma) - rhs(s.a_nu, s.b_nu, s.c_nu, s.d_nu),
  };
}

bool endo_is_homomorphism(const Ring& ring, const Endo& e) {
  for (const auto& d : relation_defects(ring, e)) {
    if (!d.is_zero()) return false;
  }
  return true;
}

bool endos_commute(const Ring& ring, const Endo& a, const Endo& b) {
  for (Gen g : kGens) {
    const NCPoly ab = apply_endo(ring, a, b.image(g));
    const NCPoly ba = apply_endo(ring, b, a.image(g));
    if (ab != ba) return false;
  }
  return true;
}

NCPoly basis_twist(const Ring& ring, const TwistTriple& t, int degree, std::size_t index,
                   const NCPoly& p) {
  NCPoly q = p;
  for (Gen g : GradedForm::basis_gens(degree, index)) q = apply_endo(ring, t.of(g), q);
  return q;
}

GradedForm left_act(const Ring& ring, const TwistTriple& t, const NCPoly& p, const GradedForm& f) {
  GradedForm out(f.degree());
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    out.coeff(i) = ring.mul(basis_twist(ring, t, f.degree(), i, p), f.coeff(i));
  }
  return out;
}

Endo nu_omega(const Ring& ring, const TwistTriple& t) {
  return compose(ring, t.nu_z, compose(ring, t.nu_y, t.nu_x));
}

}  // namespace skew3
