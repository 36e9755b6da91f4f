#include <algorithm>

#include "skew3/coeffs.hpp"

namespace skew3 {

namespace {

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error("internal: inexact division while canonicalizing");
  return *std::move(q);
}

}  // namespace

RationalFn RationalFn::param(const std::string& name) {
  return RationalFn(MultiPoly::variable(name));
}

RationalFn RationalFn::fraction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalFn();
  if (auto c = den.constant_value()) return RationalFn(num.scaled(1 / *c), MultiPoly(1));
  MultiPoly n = num;
  MultiPoly d = den;
  const MultiPoly g = gcd(n, d);
  if (!g.is_constant()) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  const Rational lc = d.leading_coef();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    d = d.scaled(1 / lc);
  }
  return RationalFn(std::move(n), std::move(d));
}

bool RationalFn::is_one() const {
  auto c = num_.constant_value();
  return c && *c == 1 && den_.is_constant();
}

std::optional<Rational> RationalFn::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return *num_.constant_value();
}

std::vector<std::string> RationalFn::params() const {
  std::vector<std::string> out;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(), den_.vars().end(),
                 std::back_inserter(out));
  return out;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational lc = num_.leading_coef();
  return RationalFn(den_.scaled(1 / lc), num_.scaled(1 / lc));
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ = num_ + o.num_;
      return *this;
    }
    return *this = fraction(num_ + o.num_, den_);
  }
  if (den_.is_constant() || o.den_.is_constant()) {
    // gcd(a*d + c*b, b*d) = 1 when one denominator is 1.
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
  }
  const MultiPoly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    return *this;
  }
  const MultiPoly b1 = exact_div(den_, g);
  const MultiPoly d1 = exact_div(o.den_, g);
  MultiPoly n = num_ * d1 + o.num_ * b1;
  MultiPoly d = den_ * d1;
  if (n.is_zero()) return *this = RationalFn();
  const MultiPoly g2 = gcd(n, g);
  if (!g2.is_constant()) {
    n = exact_div(n, g2);
    d = exact_div(d, g2);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  MultiPoly a = num_;
  MultiPoly b = den_;
  MultiPoly c = o.num_;
  MultiPoly d = o.den_;
  if (!d.is_constant()) {
    const MultiPoly g1 = gcd(a, d);
    if (!g1.is_constant()) {
      a = exact_div(a, g1);
      d = exact_div(d, g1);
    }
  }
  if (!b.is_constant()) {
    const MultiPoly g2 = gcd(c, b);
    if (!g2.is_constant()) {
      c = exact_div(c, g2);
      b = exact_div(b, g2);
    }
  }
  MultiPoly n = a * c;
  MultiPoly den = b * d;
  const Rational lc = den.leading_coef();
  if (lc != 1) {
    n = n.scaled(1 / lc);
    den = den.scaled(1 / lc);
  }
  num_ = std::move(n);
  den_ = std::move(den);
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

bool RationalFn::prints_as_product() const { return !(den_.is_constant() && num_.num_terms() > 1); }

std::string RationalFn::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.num_terms() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  const bool bare_den = den_.num_terms() == 1 && den_.vars().size() == 1 && den_.leading_coef() == 1;
  if (!bare_den) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFn ratfn_arith(ArithOp op, const RationalFn& l, const RationalFn& r) {
  switch (op) {
    case ArithOp::add:
      return l + r;
    case ArithOp::sub:
      return l - r;
    case ArithOp::mul:
      return l * r;
    case ArithOp::div:
      return l / r;
    case ArithOp::neg:
      return -l;
    case ArithOp::inv:
      return l.inverse();
  }
  return l;
}

bool ratfn_is_zero(const RationalFn& f) { return f.num().is_zero(); }

namespace {

RationalFn eval_poly(const MultiPoly& p, const Bindings& bindings) {
  const auto& vars = p.vars();
  std::vector<RationalFn> base;
  base.reserve(vars.size());
  for (const auto& v : vars) {
    auto it = bindings.find(v);
    base.push_back(it != bindings.end() ? it->second : RationalFn::param(v));
  }
  RationalFn sum;
  for (const auto& t : p.terms()) {
    RationalFn term(t.coef);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::uint32_t k = 0; k < t.exps[i]; ++k) term *= base[i];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

RationalFn ratfn_subst(const RationalFn& f, const Bindings& bindings) {
  const RationalFn n = eval_poly(f.num(), bindings);
  const RationalFn d = eval_poly(f.den(), bindings);
  if (d.is_zero()) throw DenominatorVanishes(f.den().to_string());
  return n / d;
}

}  // namespace skew3
