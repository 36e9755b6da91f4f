#include <map>

#include "skew3/calculus.hpp"

namespace skew3 {

namespace {

// 1 + r + ... + r^(n-1), times r^shift
RationalFn geometric(const RationalFn& r, std::uint32_t n, int shift) {
  RationalFn sum;
  RationalFn term(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    sum += term;
    term *= r;
  }
  RationalFn scale(1);
  const RationalFn step = shift < 0 ? r.inverse() : r;
  for (int i = 0; i < (shift < 0 ? -shift : shift); ++i) scale *= step;
  return sum * scale;
}

NCPoly affine_gen(Gen g, const RationalFn& lin, const RationalFn& shift) {
  NCPoly p(Monomial::of(g), lin);
  p.add_term(Monomial{}, shift);
  return p;
}

NCPoly tail(std::uint32_t y, std::uint32_t z) { return NCPoly(Monomial{0, y, z}, RationalFn(1)); }

}  // namespace

GradedForm d_closed(const Ring& ring, const NCPoly& p) {
  const auto& s = ring.spec();
  GradedForm out(1);
  const NCPoly ny_x = affine_gen(Gen::x, s.gamma, s.b_nu);
  const NCPoly nz_x = affine_gen(Gen::x, RationalFn(1), -s.c_mu);
  const NCPoly nz_y = affine_gen(Gen::y, s.alpha, s.c_lambda);
  for (const auto& [m, c] : p.terms()) {
    if (m.x > 0) {
      out.coeff(0) += NCPoly(Monomial{m.x - 1, m.y, m.z}, c * geometric(s.beta.inverse(), m.x, 0));
    }
    if (m.y > 0) {
      const NCPoly left = ring.pow(ny_x, m.x);
      out.coeff(1) += ring.mul(left, tail(m.y - 1, m.z)).scaled(c * RationalFn(static_cast<long>(m.y)));
    }
    if (m.z > 0) {
      const NCPoly left = ring.mul(ring.pow(nz_x, m.x), ring.pow(nz_y, m.y));
      const RationalFn k = geometric(s.beta, m.z, -static_cast<int>(m.x));
      out.coeff(2) += ring.mul(left, NCPoly(Monomial{0, 0, m.z - 1}, RationalFn(1))).scaled(c * k);
    }
  }
  return out;
}

GradedForm d_leibniz(const Ring& ring, const TwistTriple& t, const NCPoly& p) {
  std::map<Monomial, GradedForm, MonomialOrder> memo;
  // d(g m) = dg m + g d(m), and g (dh c) = dh nu_h(g) c.
  auto d_mono = [&](auto&& self, const Monomial& m) -> GradedForm {
    if (m.degree() == 0) return GradedForm(1);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
    Gen g = Gen::x;
    Monomial rest = m;
    if (m.x > 0) {
      rest.x -= 1;
    } else if (m.y > 0) {
      g = Gen::y;
      rest.y -= 1;
    } else {
      g = Gen::z;
      rest.z -= 1;
    }
    const GradedForm dr = self(self, rest);
    GradedForm out(1);
    out.coeff(static_cast<std::size_t>(g)) += NCPoly(rest, RationalFn(1));
    for (std::size_t h = 0; h < 3; ++h) {
      if (dr.coeff(h).is_zero()) continue;
      const NCPoly moved = apply_endo(ring, t.of(static_cast<Gen>(h)), NCPoly::gen(g));
      out.coeff(h) += ring.mul(moved, dr.coeff(h));
    }
    memo.emplace(m, out);
    return out;
  };
  GradedForm out(1);
  for (const auto& [m, c] : p.terms()) out += d_mono(d_mono, m).scaled(c);
  return out;
}

GradedForm d_on_forms(const Ring& ring, const TwistTriple& t, const GradedForm& f) {
  if (f.degree() > 2) return GradedForm(f.degree() + 1);
  if (f.degree() == 0) return d_closed(ring, f.coeff(0));
  GradedForm out(f.degree() + 1);
  const RationalFn sign(f.degree() % 2 == 0 ? 1 : -1);
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    const GradedForm e = GradedForm::basis(f.degree(), i);
    out += wedge(ring, t, e, d_closed(ring, f.coeff(i))).scaled(sign);
  }
  return out;
}

}  // namespace skew3
