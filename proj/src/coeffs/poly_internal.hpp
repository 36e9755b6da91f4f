#pragma once

#include <optional>

#include "skew3/coeffs.hpp"

namespace skew3 {

/// -1, 0, 1 comparison in graded-lex order over a shared variable list.
int grlex_cmp(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

/// Views two polynomials over the union of their variable lists, copying
/// only the operand(s) whose list differs from the union.
class PolyAlign {
 public:
  PolyAlign(const MultiPoly& a, const MultiPoly& b);
  const MultiPoly& a() const { return *a_; }
  const MultiPoly& b() const { return *b_; }
  const std::shared_ptr<const MultiPoly::VarList>& vars() const { return vars_; }

  static MultiPoly remap(const MultiPoly& p, const std::shared_ptr<const MultiPoly::VarList>& to);
  /// Wraps already sorted, combined terms and drops unused variables.
  static MultiPoly make(std::shared_ptr<const MultiPoly::VarList> vars,
                        std::vector<MultiPoly::Term> terms);

 private:
  std::shared_ptr<const MultiPoly::VarList> vars_;
  std::optional<MultiPoly> a_store_;
  std::optional<MultiPoly> b_store_;
  const MultiPoly* a_;
  const MultiPoly* b_;
};

}  // namespace skew3
