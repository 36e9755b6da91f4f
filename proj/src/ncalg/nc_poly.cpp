#include <sstream>

#include "skew3/ncalg.hpp"

namespace skew3 {

char gen_char(Gen g) { return "xyz"[static_cast<std::size_t>(g)]; }

const std::array<std::string_view, 15>& AlgebraSpec::field_names() {
  static const std::array<std::string_view, 15> names{
      "alpha", "beta", "gamma", "a_lambda", "b_lambda", "c_lambda", "d_lambda", "a_mu",
      "b_mu",  "c_mu", "d_mu",  "a_nu",     "b_nu",     "c_nu",     "d_nu"};
  return names;
}

RationalFn& AlgebraSpec::field(std::string_view name) {
  return const_cast<RationalFn&>(std::as_const(*this).field(name));
}

const RationalFn& AlgebraSpec::field(std::string_view name) const {
  const std::array<const RationalFn*, 15> slots{&alpha, &beta, &gamma, &a_lambda, &b_lambda,
                                                &c_lambda, &d_lambda, &a_mu, &b_mu, &c_mu,
                                                &d_mu, &a_nu, &b_nu, &c_nu, &d_nu};
  const auto& names = field_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return *slots[i];
  }
  throw Error("unknown algebra spec field '" + std::string(name) + "'");
}

void validate_spec(const AlgebraSpec& s) {
  if (s.alpha.is_zero()) throw InvalidSpec("alpha");
  if (s.beta.is_zero()) throw InvalidSpec("beta");
  if (s.gamma.is_zero()) throw InvalidSpec("gamma");
}

Monomial Monomial::of(Gen g) {
  switch (g) {
    case Gen::x:
      return {1, 0, 0};
    case Gen::y:
      return {0, 1, 0};
    case Gen::z:
      return {0, 0, 1};
  }
  return {};
}

std::string Monomial::to_string() const {
  std::string s;
  auto put = [&s](char g, std::uint32_t e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += g;
    if (e > 1) s += "^" + std::to_string(e);
  };
  put('x', x);
  put('y', y);
  put('z', z);
  return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

std::vector<Monomial> monomials_up_to(std::uint32_t max_degree) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    for (std::uint32_t i = 0; i <= d; ++i) {
      for (std::uint32_t j = 0; i + j <= d; ++j) out.push_back({i, j, d - i - j});
    }
  }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

NCPoly::NCPoly(RationalFn c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

NCPoly::NCPoly(Monomial m, RationalFn c) {
  if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

RationalFn NCPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFn() : it->second;
}

void NCPoly::add_term(const Monomial& m, const RationalFn& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPoly NCPoly::scaled(const RationalFn& c) const {
  if (c.is_zero()) return {};
  NCPoly r = *this;
  if (c.is_one()) return r;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.num().leading_coef() < 0;
    const RationalFn mag = negative ? -c : c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = m.degree() == 0;
    std::string coef = mag.to_string();
    if (!mag.prints_as_product() && (terms_.size() > 1 || !unit || negative)) coef = "(" + coef + ")";
    if (unit) {
      out << coef;
    } else if (mag.is_one()) {
      out << m.to_string();
    } else {
      out << coef << "*" << m.to_string();
    }
  }
  return out.str();
}

NCPoly nc_add(const NCPoly& p, const NCPoly& q) { return p + q; }

NCPoly nc_scale(const NCPoly& p, const RationalFn& c) { return p.scaled(c); }

}  // namespace skew3
