#pragma once

// Diamond-lemma machinery for the single overlap ambiguity zyx: the ten
// closed-form coefficient conditions and an independent two-path reduction.

#include <string>
#include <vector>

#include "skew3/ncalg.hpp"

namespace skew3 {

struct PbwCondition {
  std::string id;  // "C1" ... "C10"
  RationalFn lhs;  // holds iff lhs == 0
  bool holds = false;
};

/// The ten conditions, transcribed as data. Evaluated on any spec.
std::vector<PbwCondition> pbw_conditions(const AlgebraSpec& s);

struct DiamondReport {
  NCPoly path_a;      // zyx with yx rewritten first
  NCPoly path_b;      // zyx with zy rewritten first
  NCPoly difference;  // path_a - path_b
  bool confluent = false;
  NCPoly closed_form;  // the displayed coefficients divided by alpha*gamma
  bool closed_form_match = false;
};

/// The overlap difference (z f21 - f32 x) as a normal-form element, built
/// coefficient by coefficient from the closed-form expressions.
NCPoly diamond_closed_form(const AlgebraSpec& s);

DiamondReport diamond_check(const Ring& ring);
DiamondReport diamond_check(const AlgebraSpec& s);

/// All ten conditions vanish.
bool is_pbw(const AlgebraSpec& s);

}  // namespace skew3
