#include <algorithm>

#include "skew3/smooth.hpp"

namespace skew3 {

namespace {

RationalFn p(const char* name) { return RationalFn::param(name); }

std::string lhs_text(const char* left, const RationalFn& q, const char* right) {
  std::string s = std::string(left) + " - ";
  if (!q.is_one()) s += (q.prints_as_product() ? q.to_string() : "(" + q.to_string() + ")") + "*";
  return s + right;
}

std::string rhs_text(const RationalFn& a, const RationalFn& b, const RationalFn& c,
                     const RationalFn& d) {
  NCPoly r;
  r.add_term(Monomial::of(Gen::x), a);
  r.add_term(Monomial::of(Gen::y), b);
  r.add_term(Monomial::of(Gen::z), c);
  r.add_term(Monomial{}, d);
  return r.to_string();
}

std::string relations_of(const AlgebraSpec& s) {
  return lhs_text("yz", s.alpha, "zy") + " = " +
         rhs_text(s.a_lambda, s.b_lambda, s.c_lambda, s.d_lambda) + ", " +
         lhs_text("zx", s.beta, "xz") + " = " + rhs_text(s.a_mu, s.b_mu, s.c_mu, s.d_mu) + ", " +
         lhs_text("xy", s.gamma, "yx") + " = " + rhs_text(s.a_nu, s.b_nu, s.c_nu, s.d_nu);
}

Preset make(std::string id, bool smooth, AlgebraSpec s) {
  std::string rel = relations_of(s);
  return Preset{std::move(id), std::move(s), smooth, std::move(rel)};
}

AlgebraSpec base(RationalFn alpha, RationalFn beta, RationalFn gamma) {
  AlgebraSpec s;
  s.alpha = std::move(alpha);
  s.beta = std::move(beta);
  s.gamma = std::move(gamma);
  return s;
}

AlgebraSpec row4(bool with_a) {
  AlgebraSpec s = base(p("alpha"), p("alpha"), p("alpha"));
  if (with_a) {
    s.a_lambda = p("a1");
    s.b_mu = p("a2");
    s.c_nu = p("a3");
  }
  s.d_lambda = p("b1");
  s.d_mu = p("b2");
  s.d_nu = p("b3");
  return s;
}

std::vector<Preset> build_catalogue() {
  std::vector<Preset> out;
  out.push_back(make("1", true, base(p("alpha"), p("beta"), p("gamma"))));

  auto two = [&] { return base(1, p("beta"), 1); };
  {
    auto s = two();
    s.c_lambda = 1;
    s.b_mu = 1;
    s.a_nu = 1;
    out.push_back(make("2i", false, s));
  }
  {
    auto s = two();
    s.c_lambda = 1;
    s.d_mu = p("b");
    s.a_nu = 1;
    out.push_back(make("2ii", true, s));
  }
  {
    auto s = two();
    s.b_mu = 1;
    out.push_back(make("2iii", false, s));
  }
  {
    auto s = two();
    s.d_mu = p("b");
    out.push_back(make("2iv", true, s));
  }
  {
    auto s = two();
    s.c_lambda = p("a");
    s.a_nu = 1;
    out.push_back(make("2v", true, s));
  }
  {
    auto s = two();
    s.c_lambda = 1;
    out.push_back(make("2vi", true, s));
  }

  auto three = [&] { return base(p("alpha"), p("beta"), p("alpha")); };
  {
    auto s = three();
    s.b_mu = 1;
    s.d_mu = p("b");
    out.push_back(make("3i", false, s));
  }
  {
    auto s = three();
    s.d_mu = p("b");
    out.push_back(make("3ii", true, s));
  }

  out.push_back(make("4", false, row4(true)));

  auto five = [&] { return base(1, 1, 1); };
  {
    auto s = five();
    s.a_lambda = 1;
    s.b_mu = 1;
    s.c_nu = 1;
    out.push_back(make("5i", false, s));
  }
  {
    auto s = five();
    s.c_nu = 1;
    out.push_back(make("5ii", false, s));
  }
  {
    auto s = five();
    s.d_nu = p("b");
    out.push_back(make("5iii", true, s));
  }
  {
    auto s = five();
    s.b_lambda = -1;
    s.a_mu = 1;
    s.b_mu = 1;
    out.push_back(make("5iv", false, s));
  }
  {
    // zx - xz = z
    auto s = five();
    s.c_lambda = p("a");
    s.c_mu = 1;
    out.push_back(make("5v", true, s));
  }
  return out;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> catalogue = build_catalogue();
  return catalogue;
}

const std::vector<Preset>& preset_variants() {
  // Not part of the catalogue; the verifier decides it, so the flag is informational.
  static const std::vector<Preset> variants{make("4b", false, row4(false))};
  return variants;
}

const Preset& preset(std::string_view id) {
  for (const auto* list : {&presets(), &preset_variants()}) {
    auto it = std::find_if(list->begin(), list->end(), [&](const Preset& p) { return p.id == id; });
    if (it != list->end()) return *it;
  }
  throw UnknownPreset(std::string(id));
}

}  // namespace skew3
