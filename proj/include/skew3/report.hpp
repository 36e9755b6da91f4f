#pragma once

// Deterministic text and JSON renderings of check results. Rational
// functions are written in the expression syntax so they can be read back.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skew3/pbw.hpp"
#include "skew3/smooth.hpp"

namespace skew3 {

enum class Format { text, json };

struct PbwSection {
  std::vector<PbwCondition> conditions;
  bool diamond_confluent = false;
  bool closed_form_match = false;
};

struct SmoothnessSection {
  std::vector<ConditionResult> thm31;
  Obstruction obstruction;
  SmoothnessVerdict verdict;
};

struct CheckReport {
  AlgebraSpec spec;
  std::optional<PbwSection> pbw;
  std::optional<SmoothnessSection> smoothness;
  std::optional<CalculusReport> calculus;
  std::optional<std::uint64_t> seed;
  /// Outcome of a calculus-only run (stages 3 to 8).
  std::optional<SmoothnessVerdict> verification;
};

PbwSection make_pbw_section(const AlgebraSpec& s);

std::string render_report(const CheckReport& r, Format f);
std::string render_catalogue(const CatalogueReport& t, std::uint32_t max_degree, Format f);
std::string render_reduce(const AlgebraSpec& s, const std::string& input, const NCPoly& normal,
                          Format f);
std::string render_preset_list(Format f);
std::string render_preset(const Preset& p, Format f);

}  // namespace skew3
