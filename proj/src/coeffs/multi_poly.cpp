#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "poly_internal.hpp"
#include "skew3/coeffs.hpp"

namespace skew3 {

namespace {

const MultiPoly::VarList kNoVars;

std::uint64_t degree_of(const MultiPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

int grlex_cmp(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

bool is_valid_param_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  if (name.find_first_not_of("xyz") == std::string_view::npos) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---------------------------------------------------------------------------
// Alignment of two polynomials onto a common, sorted variable list.

PolyAlign::PolyAlign(const MultiPoly& a, const MultiPoly& b) : a_(&a), b_(&b) {
  const auto& va = a.vars();
  const auto& vb = b.vars();
  if (a.vars_ == b.vars_ || va == vb) {
    vars_ = a.vars_ ? a.vars_ : b.vars_;
    return;
  }
  MultiPoly::VarList merged;
  merged.reserve(va.size() + vb.size());
  std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(merged));
  if (merged == va) {
    vars_ = a.vars_;
  } else if (merged == vb) {
    vars_ = b.vars_;
  } else {
    vars_ = std::make_shared<const MultiPoly::VarList>(std::move(merged));
  }
  if (vars_ != a.vars_) {
    a_store_ = remap(a, vars_);
    a_ = &*a_store_;
  }
  if (vars_ != b.vars_) {
    b_store_ = remap(b, vars_);
    b_ = &*b_store_;
  }
}

MultiPoly PolyAlign::remap(const MultiPoly& p, const std::shared_ptr<const MultiPoly::VarList>& to) {
  const auto& from = p.vars();
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    pos[i] = static_cast<std::size_t>(std::lower_bound(to->begin(), to->end(), from[i]) - to->begin());
  }
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.terms_.size());
  for (const auto& t : p.terms_) {
    MultiPoly::Exponents e(to->size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) e[pos[i]] = t.exps[i];
    terms.push_back({std::move(e), t.coef});
  }
  // Relative order of the original variables is preserved, so the term order is too.
  return MultiPoly(to, std::move(terms));
}

MultiPoly PolyAlign::make(std::shared_ptr<const MultiPoly::VarList> vars, std::vector<MultiPoly::Term> terms) {
  MultiPoly p(std::move(vars), std::move(terms));
  p.compact();
  return p;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(const Rational& c) {
  Rational v = c;
  v.canonicalize();  // callers may pass unreduced num/den pairs
  if (v != 0) terms_.push_back({{}, std::move(v)});
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (!is_valid_param_name(name)) throw InvalidParam(name);
  return MultiPoly(std::make_shared<const MultiPoly::VarList>(VarList{name}), {{{1}, Rational(1)}});
}

MultiPoly MultiPoly::from_terms(std::shared_ptr<const MultiPoly::VarList> vars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_cmp(a.exps, b.exps) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    t.coef.canonicalize();
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  MultiPoly p(std::move(vars), std::move(out));
  p.compact();
  return p;
}

const MultiPoly::VarList& MultiPoly::vars() const { return vars_ ? *vars_ : kNoVars; }

void MultiPoly::compact() {
  if (!vars_ || vars_->empty()) {
    vars_.reset();
    return;
  }
  const std::size_t n = vars_->size();
  std::vector<bool> used(n, false);
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < n; ++i) used[i] = used[i] || t.exps[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  VarList kept;
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) kept.push_back((*vars_)[i]);
  }
  for (auto& t : terms_) {
    Exponents e;
    e.reserve(kept.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) e.push_back(t.exps[i]);
    }
    t.exps = std::move(e);
  }
  if (kept.empty()) {
    vars_.reset();
  } else {
    vars_ = std::make_shared<const MultiPoly::VarList>(std::move(kept));
  }
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.front().coef;
}

std::uint32_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : static_cast<std::uint32_t>(degree_of(terms_.front().exps));
}

std::uint32_t MultiPoly::degree_in(std::string_view var) const {
  const auto& v = vars();
  auto it = std::find(v.begin(), v.end(), var);
  if (it == v.end()) return 0;
  const auto i = static_cast<std::size_t>(it - v.begin());
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[i]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  Rational v = c;
  v.canonicalize();
  if (v == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef *= v;
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = grlex_cmp(a[i].exps, b[j].exps);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  PolyAlign al(a, b);
  return PolyAlign::make(al.vars(), merge_terms(al.a().terms(), al.b().terms(), false));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  PolyAlign al(a, b);
  return PolyAlign::make(al.vars(), merge_terms(al.a().terms(), al.b().terms(), true));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (auto c = a.constant_value()) return b.scaled(*c);
  if (auto c = b.constant_value()) return a.scaled(*c);
  PolyAlign al(a, b);
  const auto& ta = al.a().terms();
  const auto& tb = al.b().terms();
  const std::size_t n = al.vars()->size();
  std::vector<MultiPoly::Term> prod;
  prod.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      MultiPoly::Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = x.exps[k] + y.exps[k];
      prod.push_back({std::move(e), x.coef * y.coef});
    }
  }
  return MultiPoly::from_terms(al.vars(), std::move(prod));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.terms_ == b.terms_ && (a.vars_ == b.vars_ || a.vars() == b.vars());
}

namespace {

std::string rational_string(const Rational& q) {
  std::string s = q.get_num().get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    if (mono.empty()) {
      out << rational_string(c);
    } else if (c == 1) {
      out << mono;
    } else {
      out << rational_string(c) << "*" << mono;
    }
  }
  return out.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return MultiPoly();
  if (auto c = b.constant_value()) return a.scaled(1 / *c);
  PolyAlign al(a, b);
  const auto& divisor = al.b().terms();
  const auto& lead = divisor.front();
  const std::size_t n = al.vars()->size();
  std::vector<MultiPoly::Term> rem = al.a().terms();
  std::vector<MultiPoly::Term> quot;
  while (!rem.empty()) {
    const auto& lt = rem.front();
    MultiPoly::Exponents qe(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (lt.exps[k] < lead.exps[k]) return std::nullopt;
      qe[k] = lt.exps[k] - lead.exps[k];
    }
    Rational qc = lt.coef / lead.coef;
    std::vector<MultiPoly::Term> sub;
    sub.reserve(divisor.size());
    for (const auto& t : divisor) {
      MultiPoly::Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = t.exps[k] + qe[k];
      sub.push_back({std::move(e), t.coef * qc});
    }
    rem = merge_terms(rem, sub, true);
    quot.push_back({std::move(qe), std::move(qc)});
  }
  return PolyAlign::make(al.vars(), std::move(quot));
}

MultiPoly monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const Rational& lc = p.leading_coef();
  if (lc == 1) return p;
  return p.scaled(1 / lc);
}

}  // namespace skew3
