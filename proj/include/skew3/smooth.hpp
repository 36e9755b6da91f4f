#pragma once

// Classification layer: the ten sufficient conditions, the obstruction on
// a_lambda, b_mu, c_nu, the staged constructive verifier and the catalogue of
// fifteen named algebras.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew3/calculus.hpp"

namespace skew3 {

struct ConditionResult {
  std::string id;  // "S1" ... "S10"
  std::string expr;
  RationalFn lhs;  // the condition holds iff lhs == 0
  bool holds = false;
};

/// S1: a_lambda = b_mu = c_nu = 0 (lhs is the first nonzero of the three),
/// S2..S10 as differences of both sides.
std::vector<ConditionResult> thm31_check(const AlgebraSpec& s);

enum class ObstructionKind { none, constant, generic };

struct Obstruction {
  ObstructionKind kind = ObstructionKind::none;
  std::string field;  // "a_lambda", "b_mu" or "c_nu"; empty for none
  /// "none", "constant:a_lambda", "generic:c_nu", ...
  std::string to_string() const;
};

/// A parameter-free nonzero coefficient is preferred over a symbolic one;
/// ties are broken in the order a_lambda, b_mu, c_nu.
Obstruction thm32_obstruction(const AlgebraSpec& s);

enum class VerdictKind { smooth_verified, not_smooth, not_smooth_generic, undetermined };
std::string_view verdict_name(VerdictKind k);

enum class Stage : int {
  pbw = 1,
  structure_constants = 2,
  automorphisms = 3,
  commutation = 4,
  differential = 5,
  dd_zero = 6,
  connectedness = 7,
  integrability = 8,
};
std::string_view stage_name(Stage s);

/// Outcome of the calculus stages; unset entries were not reached.
struct CalculusReport {
  std::uint32_t max_degree = 0;
  std::optional<bool> dd_zero;
  std::optional<bool> leibniz_ok;
  std::optional<bool> oracle_match;
  std::optional<bool> connected;
  std::optional<bool> integrable;
};

struct SmoothnessVerdict {
  VerdictKind kind = VerdictKind::undetermined;
  std::optional<Stage> failed_stage;
  std::vector<std::string> evidence;
  /// Nonzero members of {a_lambda, b_mu, c_nu} when stage 2 fails.
  std::vector<std::string> nonzero_fields;
  CalculusReport calculus;
};

struct VerifyOptions {
  std::uint32_t max_degree = 4;
  std::uint32_t oracle_degree = 6;  // d_closed vs d_leibniz
  std::uint32_t dd_degree = 6;
  std::size_t leibniz_pairs = 100;
  std::optional<std::uint32_t> connect_degree;      // default max_degree + 1
  std::optional<std::uint32_t> integrability_degree;  // default max_degree
  std::uint64_t seed = 20240607;
  Exec exec = Exec::parallel;
  /// Start at stage 3 (skip the PBW and structure constant gates).
  bool calculus_only = false;

  static VerifyOptions with_degree(std::uint32_t max_degree);
};

SmoothnessVerdict verify_construction(const AlgebraSpec& s, const VerifyOptions& opt);
SmoothnessVerdict verify_construction(const AlgebraSpec& s, std::uint32_t max_degree);

SmoothnessVerdict classify(const AlgebraSpec& s, const VerifyOptions& opt);
SmoothnessVerdict classify(const AlgebraSpec& s, std::uint32_t max_degree);

struct Preset {
  std::string id;
  AlgebraSpec spec;
  bool expected_smooth = false;
  std::string relations;  // human-readable defining relations
};

/// The fifteen catalogue rows in order.
const std::vector<Preset>& presets();
/// Extra rows outside the catalogue ("4b": row 4 with a1 = a2 = a3 = 0).
const std::vector<Preset>& preset_variants();
/// Looks up catalogue rows and variants; throws UnknownPreset.
const Preset& preset(std::string_view id);

struct CatalogueRow {
  std::string id;
  bool expected_smooth = false;
  SmoothnessVerdict verdict;
  bool matches = false;
};

struct CatalogueReport {
  std::vector<CatalogueRow> rows;
  bool all_match = false;
  std::size_t verified = 0;
  std::size_t not_smooth = 0;
};

CatalogueReport table1(const VerifyOptions& opt);
CatalogueReport table1(std::uint32_t max_degree);

}  // namespace skew3
