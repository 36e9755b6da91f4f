#pragma once

// Expression syntax for algebra elements and structure constants:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | primary ['^' uint]
//   primary:= 'x' | 'y' | 'z' | ident | uint | '(' expr ')'
// Products are noncommutative and always written with '*'. A divisor must be
// free of generators.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skew3/ncalg.hpp"

namespace skew3 {

struct Expr {
  enum class Kind { gen, param, number, add, sub, mul, div, neg, pow };

  Kind kind = Kind::number;
  Gen gen = Gen::x;
  std::string name;       // parameter name
  Rational number;        // literal value
  unsigned exponent = 0;  // for pow
  std::vector<Expr> args;
  std::size_t line = 1;
  std::size_t column = 1;

  bool has_generators() const;
  /// Fully parenthesized prefix form, e.g. "(* (* z y) x)".
  std::string to_sexpr() const;
};

/// Throws SyntaxError with a 1-based position and the expected token kinds.
Expr parse_expr(std::string_view src);

/// Value of a generator-free expression; throws Error if a generator occurs.
RationalFn eval_scalar(const Expr& e);
/// Normal form of the expression in the ring.
NCPoly eval_expr(const Ring& ring, const Expr& e);
NCPoly eval_expr(const AlgebraSpec& s, const Expr& e);

}  // namespace skew3
