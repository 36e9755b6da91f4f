#include "skew3/pbw.hpp"

namespace skew3 {

namespace {

// The numerators of the eleven overlap coefficients; the xyz coefficient is 0.
struct OverlapNumerators {
  RationalFn xx, xy, yy, xz_over_beta, yz, zz, x, y, z, one;
};

OverlapNumerators overlap_numerators(const AlgebraSpec& s) {
  const RationalFn one(1);
  const auto& al = s.alpha;
  const auto& be = s.beta;
  const auto& ga = s.gamma;
  OverlapNumerators n;
  n.xx = s.a_lambda * (ga - be);
  n.xy = s.a_mu * (al - one) + s.b_lambda * (one - be);
  n.yy = s.b_mu * (al - ga);
  n.xz_over_beta = s.a_nu * (one - al) + s.c_lambda * (ga - one);
  n.yz = s.b_nu * (be - one) + s.c_mu * (one - ga);
  n.zz = s.c_nu * (be - al);
  n.x = s.a_lambda * s.b_nu - s.a_lambda * s.c_mu + s.a_mu * s.a_nu * (one - al) +
        ga * s.a_mu * s.c_lambda - s.a_nu * s.b_lambda + (ga - be) * s.d_lambda;
  n.y = s.a_mu * s.b_nu - al * s.a_nu * s.b_mu - s.b_lambda * s.c_mu + ga * s.b_mu * s.c_lambda +
        (al - ga) * s.d_mu;
  n.z = s.a_mu * s.c_nu - al * s.a_nu * s.c_mu - s.b_lambda * s.c_nu + s.b_nu * s.c_lambda +
        (ga - one) * s.c_lambda * s.c_mu + (be - al) * s.d_nu;
  n.one = s.a_mu * s.d_nu - al * s.a_nu * s.d_mu - s.b_lambda * s.d_nu + s.b_nu * s.d_lambda +
          ga * s.c_lambda * s.d_mu - s.c_mu * s.d_lambda;
  return n;
}

}  // namespace

std::vector<PbwCondition> pbw_conditions(const AlgebraSpec& s) {
  const auto n = overlap_numerators(s);
  const std::array<const RationalFn*, 10> lhs{&n.xx, &n.xy, &n.yy, &n.xz_over_beta, &n.yz,
                                              &n.zz, &n.x,  &n.y,  &n.z,            &n.one};
  std::vector<PbwCondition> out;
  out.reserve(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    out.push_back({"C" + std::to_string(i + 1), *lhs[i], ratfn_is_zero(*lhs[i])});
  }
  return out;
}

NCPoly diamond_closed_form(const AlgebraSpec& s) {
  validate_spec(s);
  const auto n = overlap_numerators(s);
  const RationalFn scale = (s.alpha * s.gamma).inverse();
  NCPoly out;
  out.add_term({2, 0, 0}, n.xx * scale);
  out.add_term({1, 1, 0}, n.xy * scale);
  out.add_term({0, 2, 0}, n.yy * scale);
  out.add_term({1, 0, 1}, s.beta * n.xz_over_beta * scale);
  out.add_term({0, 1, 1}, n.yz * scale);
  out.add_term({0, 0, 2}, n.zz * scale);
  out.add_term({1, 0, 0}, n.x * scale);
  out.add_term({0, 1, 0}, n.y * scale);
  out.add_term({0, 0, 1}, n.z * scale);
  out.add_term({0, 0, 0}, n.one * scale);
  return out;
}

DiamondReport diamond_check(const Ring& ring) {
  DiamondReport r;
  const Word overlap = "zyx";
  r.path_a = ring.reduce(ring.rewrite_at(overlap, 1));
  r.path_b = ring.reduce(ring.rewrite_at(overlap, 0));
  r.difference = r.path_a - r.path_b;
  r.confluent = r.difference.is_zero();
  r.closed_form = diamond_closed_form(ring.spec());
  r.closed_form_match = r.closed_form == r.difference;
  return r;
}

DiamondReport diamond_check(const AlgebraSpec& s) { return diamond_check(Ring(s)); }

bool is_pbw(const AlgebraSpec& s) {
  validate_spec(s);
  for (const auto& c : pbw_conditions(s)) {
    if (!c.holds) return false;
  }
  return true;
}

}  // namespace skew3
