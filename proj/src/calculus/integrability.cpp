#include <map>
#include <sstream>

#include "skew3/calculus.hpp"

namespace skew3 {

namespace {

GradedForm scaled_basis(int degree, std::size_t index, const RationalFn& c) {
  return GradedForm::basis(degree, index, NCPoly(c));
}

}  // namespace

IntegralData IntegralData::standard(const AlgebraSpec& s) {
  IntegralData d;
  for (std::size_t i = 0; i < 3; ++i) {
    d.one[i] = GradedForm::basis(1, i);
    d.one_bar[i] = GradedForm::basis(1, i);
  }
  const RationalFn binv = s.beta.inverse();
  d.two = {scaled_basis(2, 2, 1), scaled_basis(2, 1, -s.gamma), scaled_basis(2, 0, s.alpha * binv)};
  d.two_bar = {scaled_basis(2, 2, s.gamma * binv), scaled_basis(2, 1, -s.alpha),
               scaled_basis(2, 0, 1)};
  return d;
}

IntegralData IntegralData::swapped_basis(const AlgebraSpec& s) {
  IntegralData d = standard(s);
  d.two[2] = scaled_basis(2, 1, s.alpha * s.beta.inverse());
  d.two_bar[1] = scaled_basis(2, 0, -s.alpha);
  return d;
}

IntegrabilityReport integrability_check(const Ring& ring, const TwistTriple& t,
                                        const IntegralData& data, std::uint32_t max_degree,
                                        Exec exec) {
  const auto monos = monomials_up_to(max_degree);
  const Endo nu_inv = nu_omega(ring, t).inverted();
  const std::size_t per_degree = 3 * monos.size();
  const std::size_t n = 2 * per_degree;

  auto test_form = [&](std::size_t idx, int& k) {
    k = idx < per_degree ? 1 : 2;
    const std::size_t r = idx % per_degree;
    return GradedForm::basis(k, r / monos.size(), NCPoly(monos[r % monos.size()], RationalFn(1)));
  };
  // 0 when both identities hold, else 1 or 2 for the first failing identity.
  auto failing_identity = [&](std::size_t idx) {
    int k = 0;
    const GradedForm w = test_form(idx, k);
    const auto& lo = k == 1 ? data.one : data.two;
    const auto& lo_bar = k == 1 ? data.one_bar : data.two_bar;
    const auto& hi = k == 1 ? data.two : data.one;
    const auto& hi_bar = k == 1 ? data.two_bar : data.one_bar;
    GradedForm right(k);
    GradedForm left(k);
    for (std::size_t i = 0; i < 3; ++i) {
      right += right_mul(ring, lo[i], pi_omega(wedge(ring, t, hi_bar[i], w)));
      const NCPoly c = apply_endo(ring, nu_inv, pi_omega(wedge(ring, t, w, hi[i])));
      left += left_act(ring, t, c, lo_bar[i]);
    }
    if (right != w) return 1;
    if (left != w) return 2;
    return 0;
  };

  IntegrabilityReport rep;
  const auto fail = first_failure(n, [&](std::size_t i) { return failing_identity(i) == 0; }, exec);
  if (!fail) {
    rep.checked = 2 * n;
    return rep;
  }
  int k = 0;
  const GradedForm w = test_form(*fail, k);
  const int which = failing_identity(*fail);
  rep.ok = false;
  rep.checked = 2 * *fail + static_cast<std::size_t>(which);
  std::ostringstream msg;
  msg << "identity " << which << " fails for k=" << k << " at " << w.to_string();
  rep.failure = msg.str();
  return rep;
}

namespace {

using Key = std::pair<std::size_t, Monomial>;

struct KeyOrder {
  bool operator()(const Key& a, const Key& b) const {
    if (a.first != b.first) return a.first < b.first;
    return MonomialOrder{}(a.second, b.second);
  }
};

using SparseVec = std::map<Key, RationalFn, KeyOrder>;

SparseVec flatten(const GradedForm& f) {
  SparseVec v;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    for (const auto& [m, c] : f.coeff(i).terms()) v.emplace(Key{i, m}, c);
  }
  return v;
}

// v -= c * row
void axpy(SparseVec& v, const RationalFn& c, const SparseVec& row) {
  for (const auto& [k, x] : row) {
    auto [it, inserted] = v.try_emplace(k);
    it->second -= c * x;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace

ConnectednessReport connectedness_check(const Ring& ring, std::uint32_t max_degree, Exec exec) {
  const auto monos = monomials_up_to(max_degree);
  auto columns = map_indices(
      monos.size(),
      [&](std::size_t i) { return flatten(d_closed(ring, NCPoly(monos[i], RationalFn(1)))); },
      exec);

  std::map<Key, SparseVec, KeyOrder> pivots;
  for (auto& v : columns) {
    while (!v.empty()) {
      const auto& [key, lead] = *v.rbegin();
      auto it = pivots.find(key);
      if (it == pivots.end()) {
        const Key k = key;
        const RationalFn inv = lead.inverse();
        for (auto& [kk, x] : v) x *= inv;
        pivots.emplace(k, std::move(v));
        break;
      }
      const RationalFn c = lead;
      axpy(v, c, it->second);
    }
  }

  ConnectednessReport rep;
  rep.max_degree = max_degree;
  rep.columns = monos.size();
  rep.rank = pivots.size();
  rep.kernel_dim = rep.columns - rep.rank;
  rep.connected = rep.kernel_dim == 1;
  return rep;
}

}  // namespace skew3
