// Multivariate gcd over Q by recursive content extraction and a primitive
// pseudo-remainder sequence in one chosen variable.

#include <algorithm>
#include <iterator>
#include <map>

#include "poly_internal.hpp"
#include "skew3/coeffs.hpp"

namespace skew3 {

namespace {

using Term = MultiPoly::Term;
using Exponents = MultiPoly::Exponents;

std::size_t var_index(const MultiPoly& p, const std::string& v) {
  const auto& vars = p.vars();
  return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
}

/// Coefficients of p viewed as a polynomial in v, keyed by the power of v.
std::map<std::uint32_t, MultiPoly> coefficients_in(const MultiPoly& p, const std::string& v) {
  const std::size_t vi = var_index(p, v);
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) {
    Exponents e = t.exps;
    std::uint32_t k = 0;
    if (vi < e.size() && p.vars()[vi] == v) {
      k = e[vi];
      e[vi] = 0;
    }
    buckets[k].push_back({std::move(e), t.coef});
  }
  std::map<std::uint32_t, MultiPoly> out;
  for (auto& [k, terms] : buckets) out.emplace(k, MultiPoly::from_terms(p.var_list(), std::move(terms)));
  return out;
}

MultiPoly leading_in(const MultiPoly& p, const std::string& v) {
  auto cs = coefficients_in(p, v);
  return cs.rbegin()->second;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  // gcd factors always divide; reaching this is an internal arithmetic bug.
  if (!q) throw Error("internal: inexact polynomial division in gcd");
  return *std::move(q);
}

MultiPoly content_in(const MultiPoly& p, const std::string& v) {
  MultiPoly g;
  for (const auto& [k, c] : coefficients_in(p, v)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

/// Scales p to integer coefficients with no common integer factor.
MultiPoly integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (const auto& t : p.terms()) {
    den = lcm(den, mpz_class(t.coef.get_den()));
    num = gcd(num, mpz_class(t.coef.get_num()));
  }
  return p.scaled(Rational(den, num));
}

/// Pseudo-remainder of a by b with respect to v (b must involve v).
MultiPoly prem(MultiPoly a, const MultiPoly& b, const std::string& v) {
  const std::uint32_t db = b.degree_in(v);
  const MultiPoly lcb = leading_in(b, v);
  const MultiPoly var = MultiPoly::variable(v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const std::uint32_t da = a.degree_in(v);
    const MultiPoly lca = leading_in(a, v);
    a = lcb * a - lca * var.pow(da - db) * b;
  }
  return a;
}

/// Strips the largest monomial dividing p; returns the monomial as a map.
std::map<std::string, std::uint32_t> strip_monomial(MultiPoly& p) {
  const auto& vars = p.vars();
  Exponents lo(vars.size(), UINT32_MAX);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], t.exps[i]);
  }
  std::map<std::string, std::uint32_t> mono;
  bool any = false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] > 0) {
      mono[vars[i]] = lo[i];
      any = true;
    }
  }
  if (any) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      Exponents e = t.exps;
      for (std::size_t i = 0; i < lo.size(); ++i) e[i] -= lo[i];
      terms.push_back({std::move(e), t.coef});
    }
    p = MultiPoly::from_terms(p.var_list(), std::move(terms));
  }
  return mono;
}

using Univariate = std::vector<Rational>;  // coefficient of v^k at index k

/// p with every variable other than v replaced by the matching entry of `at`.
Univariate specialize(const MultiPoly& p, const std::string& v, const std::map<std::string, Rational>& at) {
  Univariate out(p.degree_in(v) + 1);
  const auto& vars = p.vars();
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    std::uint32_t k = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == v) {
        k = t.exps[i];
        continue;
      }
      for (std::uint32_t e = 0; e < t.exps[i]; ++e) c *= at.at(vars[i]);
    }
    out[k] += c;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::size_t univariate_gcd_degree(Univariate a, Univariate b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

/// True when a and b (primitive in v) provably share no factor: at some point
/// where neither leading coefficient in v vanishes, the specialized gcd is
/// constant. Degrees cannot drop there, so the true gcd has degree 0 in v.
bool coprime_by_specialization(const MultiPoly& a, const MultiPoly& b, const std::string& v) {
  std::vector<std::string> others;
  for (const auto* p : {&a, &b}) {
    for (const auto& name : p->vars()) {
      if (name != v) others.push_back(name);
    }
  }
  static const long kValues[] = {2, -3, 5, 7, -11, 13, 17, -19};
  for (std::size_t attempt = 0; attempt < 4; ++attempt) {
    std::map<std::string, Rational> at;
    for (std::size_t i = 0; i < others.size(); ++i) {
      at[others[i]] = kValues[(i + 3 * attempt) % std::size(kValues)] + static_cast<long>(attempt);
    }
    const Univariate sa = specialize(a, v, at);
    const Univariate sb = specialize(b, v, at);
    if (sa.size() != a.degree_in(v) + 1 || sb.size() != b.degree_in(v) + 1) continue;
    return univariate_gcd_degree(sa, sb) == 0;
  }
  return false;
}

MultiPoly primitive_gcd(MultiPoly a, MultiPoly b, const std::string& v) {
  if (coprime_by_specialization(a, b, v)) return MultiPoly(1);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  a = integer_primitive(a);
  b = integer_primitive(b);
  for (;;) {
    MultiPoly r = prem(a, b, v);
    if (r.is_zero()) return monic(b);
    if (r.degree_in(v) == 0) return MultiPoly(1);
    a = std::move(b);
    b = integer_primitive(exact(r, content_in(r, v)));
  }
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a == b) return monic(a);

  MultiPoly pa = a;
  MultiPoly pb = b;
  const auto ma = strip_monomial(pa);
  const auto mb = strip_monomial(pb);
  MultiPoly mono(1);
  for (const auto& [name, e] : ma) {
    auto it = mb.find(name);
    if (it != mb.end()) mono = mono * MultiPoly::variable(name).pow(std::min(e, it->second));
  }
  if (pa.is_constant() || pb.is_constant()) return mono;
  if (pa == pb || pa == -pb) return monic(mono * pa);

  const auto& va = pa.vars();
  const auto& vb = pb.vars();
  std::string v;
  std::uint32_t best = UINT32_MAX;
  for (const auto& name : va) {
    if (!std::binary_search(vb.begin(), vb.end(), name)) continue;
    const std::uint32_t d = std::max(pa.degree_in(name), pb.degree_in(name));
    if (d < best) {
      best = d;
      v = name;
    }
  }
  if (v.empty()) return mono;

  const MultiPoly ca = content_in(pa, v);
  const MultiPoly cb = content_in(pb, v);
  const MultiPoly c = gcd(ca, cb);
  const MultiPoly g = primitive_gcd(exact(pa, ca), exact(pb, cb), v);
  return monic(mono * c * g);
}

}  // namespace skew3
