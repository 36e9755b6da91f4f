#include <sstream>

#include "skew3/pbw.hpp"
#include "skew3/random.hpp"
#include "skew3/smooth.hpp"

namespace skew3 {

std::vector<ConditionResult> thm31_check(const AlgebraSpec& s) {
  validate_spec(s);
  RationalFn s1;
  for (const RationalFn* f : {&s.a_lambda, &s.b_mu, &s.c_nu}) {
    if (!ratfn_is_zero(*f)) {
      s1 = *f;
      break;
    }
  }
  const RationalFn b1 = s.beta - 1;
  std::vector<ConditionResult> out{
      {"S1", "a_lambda = b_mu = c_nu = 0", s1},
      {"S2", "c_mu*(beta - 1) = 0", s.c_mu * b1},
      {"S3", "a_mu*c_mu = 0", s.a_mu * s.c_mu},
      {"S4", "b_nu*(beta - 1) = 0", s.b_nu * b1},
      {"S5", "d_nu*(gamma - 1/beta) = a_nu*b_nu",
       s.d_nu * (s.gamma - s.beta.inverse()) - s.a_nu * s.b_nu},
      {"S6", "d_lambda*(alpha - 1) = c_lambda*b_lambda",
       s.d_lambda * (s.alpha - 1) - s.c_lambda * s.b_lambda},
      {"S7", "d_nu*(gamma - 1) = a_nu*b_nu", s.d_nu * (s.gamma - 1) - s.a_nu * s.b_nu},
      {"S8", "b_lambda*(beta - 1) = 0", s.b_lambda * b1},
      {"S9", "d_lambda*(alpha*beta - 1) = b_lambda*c_lambda",
       s.d_lambda * (s.alpha * s.beta - 1) - s.b_lambda * s.c_lambda},
      {"S10", "a_mu*(beta - 1) = 0", s.a_mu * b1},
  };
  for (auto& c : out) c.holds = ratfn_is_zero(c.lhs);
  return out;
}

std::string Obstruction::to_string() const {
  switch (kind) {
    case ObstructionKind::none:
      return "none";
    case ObstructionKind::constant:
      return "constant:" + field;
    case ObstructionKind::generic:
      return "generic:" + field;
  }
  return "none";
}

namespace {

struct Watched {
  const char* name;
  const RationalFn* value;
};

std::vector<Watched> watched(const AlgebraSpec& s) {
  return {{"a_lambda", &s.a_lambda}, {"b_mu", &s.b_mu}, {"c_nu", &s.c_nu}};
}

}  // namespace

Obstruction thm32_obstruction(const AlgebraSpec& s) {
  validate_spec(s);
  Obstruction generic;
  for (const auto& w : watched(s)) {
    if (ratfn_is_zero(*w.value)) continue;
    if (w.value->is_constant()) return {ObstructionKind::constant, w.name};
    if (generic.kind == ObstructionKind::none) generic = {ObstructionKind::generic, w.name};
  }
  return generic;
}

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::smooth_verified:
      return "smooth_verified";
    case VerdictKind::not_smooth:
      return "not_smooth";
    case VerdictKind::not_smooth_generic:
      return "not_smooth_generic";
    case VerdictKind::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::pbw:
      return "pbw";
    case Stage::structure_constants:
      return "structure_constants";
    case Stage::automorphisms:
      return "automorphisms";
    case Stage::commutation:
      return "commutation";
    case Stage::differential:
      return "differential";
    case Stage::dd_zero:
      return "dd_zero";
    case Stage::connectedness:
      return "connectedness";
    case Stage::integrability:
      return "integrability";
  }
  return "";
}

VerifyOptions VerifyOptions::with_degree(std::uint32_t max_degree) {
  VerifyOptions o;
  o.max_degree = max_degree;
  return o;
}

namespace {

const char* nu_name(Gen g) {
  switch (g) {
    case Gen::x:
      return "nu_x";
    case Gen::y:
      return "nu_y";
    case Gen::z:
      return "nu_z";
  }
  return "";
}

bool leibniz_holds(const Ring& ring, const TwistTriple& t, const NCPoly& p, const NCPoly& q) {
  const GradedForm lhs = d_closed(ring, ring.mul(p, q));
  const GradedForm rhs = right_mul(ring, d_closed(ring, p), q) + left_act(ring, t, p, d_closed(ring, q));
  return lhs == rhs;
}

}  // namespace

SmoothnessVerdict verify_construction(const AlgebraSpec& s, const VerifyOptions& opt) {
  validate_spec(s);
  SmoothnessVerdict v;
  v.calculus.max_degree = opt.max_degree;
  auto fail = [&](Stage st, std::string why) {
    v.kind = VerdictKind::undetermined;
    v.failed_stage = st;
    v.evidence.push_back(std::move(why));
    return v;
  };

  if (!opt.calculus_only) {
    if (!is_pbw(s)) {
      std::string ids;
      for (const auto& c : pbw_conditions(s)) {
        if (!c.holds) ids += (ids.empty() ? "" : ", ") + c.id;
      }
      return fail(Stage::pbw, "PBW conditions fail: " + ids);
    }
    for (const auto& w : watched(s)) {
      if (!ratfn_is_zero(*w.value)) v.nonzero_fields.emplace_back(w.name);
    }
    if (!v.nonzero_fields.empty()) {
      std::string msg;
      for (const auto& w : watched(s)) {
        if (ratfn_is_zero(*w.value)) continue;
        msg += (msg.empty() ? "" : ", ") + std::string(w.name) + " = " + w.value->to_string();
      }
      return fail(Stage::structure_constants, "nonzero: " + msg);
    }
  }

  const Ring ring(s);
  const TwistTriple t = build_automorphisms(ring);
  for (Gen g : kGens) {
    if (!endo_is_homomorphism(ring, t.of(g))) {
      const auto defects = relation_defects(ring, t.of(g));
      std::string msg = std::string(nu_name(g)) + " does not preserve the relations:";
      for (const auto& d : defects) msg += " [" + d.to_string() + "]";
      return fail(Stage::automorphisms, msg);
    }
  }
  const std::pair<Gen, Gen> pairs[] = {{Gen::x, Gen::y}, {Gen::x, Gen::z}, {Gen::y, Gen::z}};
  for (const auto& [a, b] : pairs) {
    if (!endos_commute(ring, t.of(a), t.of(b))) {
      return fail(Stage::commutation,
                  std::string(nu_name(a)) + " and " + nu_name(b) + " do not commute");
    }
  }

  const auto oracle_monos = monomials_up_to(opt.oracle_degree);
  const auto oracle_fail = first_failure(
      oracle_monos.size(),
      [&](std::size_t i) {
        const NCPoly m(oracle_monos[i], RationalFn(1));
        return d_closed(ring, m) == d_leibniz(ring, t, m);
      },
      opt.exec);
  v.calculus.oracle_match = !oracle_fail;

  SeededRng rng(opt.seed);
  const auto params = spec_params(s);
  std::vector<std::pair<NCPoly, NCPoly>> samples;
  samples.reserve(opt.leibniz_pairs);
  for (std::size_t i = 0; i < opt.leibniz_pairs; ++i) {
    NCPoly a = random_ncpoly(rng, opt.max_degree, 4, params);
    NCPoly b = random_ncpoly(rng, opt.max_degree, 4, params);
    samples.emplace_back(std::move(a), std::move(b));
  }
  const auto leibniz_fail = first_failure(
      samples.size(),
      [&](std::size_t i) { return leibniz_holds(ring, t, samples[i].first, samples[i].second); },
      opt.exec);
  v.calculus.leibniz_ok = !leibniz_fail;
  if (oracle_fail) {
    return fail(Stage::differential,
                "closed-form and Leibniz differentials differ on " + oracle_monos[*oracle_fail].to_string());
  }
  if (leibniz_fail) {
    const auto& [a, b] = samples[*leibniz_fail];
    return fail(Stage::differential,
                "Leibniz rule fails for p = " + a.to_string() + ", q = " + b.to_string());
  }

  const auto dd_monos = monomials_up_to(opt.dd_degree);
  const std::size_t nm = dd_monos.size();
  const auto dd_fail = first_failure(
      4 * nm,
      [&](std::size_t i) {
        const NCPoly m(dd_monos[i % nm], RationalFn(1));
        const std::size_t slot = i / nm;
        const GradedForm f = slot == 0 ? GradedForm::basis(0, 0, m) : GradedForm::basis(1, slot - 1, m);
        return d_on_forms(ring, t, d_on_forms(ring, t, f)).is_zero();
      },
      opt.exec);
  v.calculus.dd_zero = !dd_fail;
  if (dd_fail) {
    const std::size_t slot = *dd_fail / nm;
    const std::string where = slot == 0 ? std::string("1")
                                        : GradedForm::basis_name(1, slot - 1);
    return fail(Stage::dd_zero,
                "d(d(" + where + "*" + dd_monos[*dd_fail % nm].to_string() + ")) is nonzero");
  }

  const auto conn = connectedness_check(ring, opt.connect_degree.value_or(opt.max_degree + 1), opt.exec);
  v.calculus.connected = conn.connected;
  if (!conn.connected) {
    std::ostringstream msg;
    msg << "kernel of d up to degree " << conn.max_degree << " has dimension " << conn.kernel_dim;
    return fail(Stage::connectedness, msg.str());
  }

  const auto integ = integrability_check(ring, t, IntegralData::standard(s),
                                         opt.integrability_degree.value_or(opt.max_degree), opt.exec);
  v.calculus.integrable = integ.ok;
  if (!integ.ok) return fail(Stage::integrability, integ.failure);

  v.kind = VerdictKind::smooth_verified;
  std::ostringstream msg;
  msg << "all stages passed (integrability instances: " << integ.checked << ")";
  v.evidence.push_back(msg.str());
  return v;
}

SmoothnessVerdict verify_construction(const AlgebraSpec& s, std::uint32_t max_degree) {
  return verify_construction(s, VerifyOptions::with_degree(max_degree));
}

SmoothnessVerdict classify(const AlgebraSpec& s, const VerifyOptions& opt) {
  const Obstruction ob = thm32_obstruction(s);
  if (ob.kind != ObstructionKind::none) {
    SmoothnessVerdict v;
    v.kind = ob.kind == ObstructionKind::constant ? VerdictKind::not_smooth
                                                  : VerdictKind::not_smooth_generic;
    v.calculus.max_degree = opt.max_degree;
    v.evidence.push_back("obstruction " + ob.to_string() + " = " + s.field(ob.field).to_string());
    return v;
  }
  return verify_construction(s, opt);
}

SmoothnessVerdict classify(const AlgebraSpec& s, std::uint32_t max_degree) {
  return classify(s, VerifyOptions::with_degree(max_degree));
}

CatalogueReport table1(const VerifyOptions& opt) {
  const auto& rows = presets();
  CatalogueReport rep;
  rep.rows = map_indices(
      rows.size(),
      [&](std::size_t i) {
        CatalogueRow r;
        r.id = rows[i].id;
        r.expected_smooth = rows[i].expected_smooth;
        r.verdict = classify(rows[i].spec, opt);
        const bool smooth = r.verdict.kind == VerdictKind::smooth_verified;
        const bool negative = r.verdict.kind == VerdictKind::not_smooth ||
                              r.verdict.kind == VerdictKind::not_smooth_generic;
        r.matches = r.expected_smooth ? smooth : negative;
        return r;
      },
      opt.exec);
  rep.all_match = true;
  for (const auto& r : rep.rows) {
    rep.all_match = rep.all_match && r.matches;
    if (r.verdict.kind == VerdictKind::smooth_verified) ++rep.verified;
    if (r.verdict.kind == VerdictKind::not_smooth || r.verdict.kind == VerdictKind::not_smooth_generic)
      ++rep.not_smooth;
  }
  return rep;
}

CatalogueReport table1(std::uint32_t max_degree) { return table1(VerifyOptions::with_degree(max_degree)); }

}  // namespace skew3
