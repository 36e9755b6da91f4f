#pragma once

// Exact arithmetic in Q(p1, ..., pm): sparse multivariate polynomials over Q
// and reduced fractions of them. Parameters are identified by name and are
// declared implicitly by use.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew3/errors.hpp"

namespace skew3 {

using Rational = mpq_class;

/// True for identifiers usable as parameters: a lowercase letter followed by
/// letters, digits or underscores, excluding words spelled only with the
/// generator letters x, y, z (which read as products such as "xy").
bool is_valid_param_name(std::string_view name);

/// Polynomial over Q in named commuting parameters.
///
/// Variables are stored sorted by name and only variables that occur in some
/// term are kept, so two equal polynomials are structurally identical. Terms
/// are sorted descending in graded-lex order (first variable most significant).
class MultiPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using VarList = std::vector<std::string>;
  struct Term {
    Exponents exps;
    Rational coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly variable(const std::string& name);
  /// Builds from unsorted, possibly repeated terms over `vars` (must be sorted).
  static MultiPoly from_terms(std::shared_ptr<const VarList> vars, std::vector<Term> terms);

  const VarList& vars() const;
  const std::shared_ptr<const VarList>& var_list() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_ == nullptr || vars_->empty(); }
  /// Value of a constant polynomial; nullopt if a parameter occurs.
  std::optional<Rational> constant_value() const;
  const Term& leading() const { return terms_.front(); }
  const Rational& leading_coef() const { return terms_.front().coef; }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::string_view var) const;
  std::size_t num_terms() const { return terms_.size(); }

  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned n) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Canonical text: terms descending, e.g. "alpha*gamma^2 - 1/2*beta + 3".
  std::string to_string() const;

 private:
  MultiPoly(std::shared_ptr<const VarList> vars, std::vector<Term> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}
  void compact();

  std::shared_ptr<const VarList> vars_;
  std::vector<Term> terms_;

  friend class PolyAlign;
  friend std::optional<MultiPoly> divide_exact(const MultiPoly&, const MultiPoly&);
};

/// Quotient a / b when b divides a exactly, nullopt otherwise. b must be nonzero.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);
/// Divides by the graded-lex leading coefficient. Zero stays zero.
MultiPoly monic(const MultiPoly& p);
/// Monic greatest common divisor; gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// Element of Q(params) in canonical form: gcd(num, den) = 1 and den monic.
/// Structural equality is mathematical equality.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(long c) : num_(c), den_(1) {}  // NOLINT: integer literals are field elements
  explicit RationalFn(const Rational& c) : num_(c), den_(1) {}
  explicit RationalFn(MultiPoly num) : num_(std::move(num)), den_(1) {}

  /// Parameter with the given name; throws InvalidParam for bad names.
  static RationalFn param(const std::string& name);
  /// Canonicalized num / den; throws DivisionByZero if den is zero.
  static RationalFn fraction(const MultiPoly& num, const MultiPoly& den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  /// Parameter-free value.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rational> constant_value() const;
  std::vector<std::string> params() const;

  RationalFn inverse() const;
  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Expression string reparseable by the CLI expression parser, e.g.
  /// "(beta - 1)/(alpha*gamma)".
  std::string to_string() const;
  /// True when to_string() is a single product/quotient that can be used as
  /// a factor without parentheses (after an optional leading minus).
  bool prints_as_product() const;

 private:
  RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  MultiPoly num_;
  MultiPoly den_;
};

enum class ArithOp { add, sub, mul, div, neg, inv };

/// Dispatch over the field operations; `r` is ignored for neg/inv.
RationalFn ratfn_arith(ArithOp op, const RationalFn& l, const RationalFn& r = RationalFn());
bool ratfn_is_zero(const RationalFn& f);

using Bindings = std::map<std::string, RationalFn>;
/// Simultaneous substitution of parameters; unbound parameters stay symbolic.
/// Throws DenominatorVanishes when the specialized denominator is zero.
RationalFn ratfn_subst(const RationalFn& f, const Bindings& bindings);

}  // namespace skew3
