#pragma once

// Line-oriented algebra description:
//   # comment
//   alpha = q
//   beta  = 1/2
//   gamma = 1
//   c_lambda = a + 1
// alpha, beta and gamma are required; omitted structure constants are 0.

#include <string>
#include <string_view>

#include "skew3/ncalg.hpp"

namespace skew3 {

/// Throws SpecParseError for malformed lines and InvalidSpec when validation fails.
AlgebraSpec parse_spec_file(std::string_view src);
/// Writes alpha, beta, gamma and every nonzero structure constant.
std::string render_spec_file(const AlgebraSpec& s);
/// Reads and parses a file; throws Error if it cannot be opened.
AlgebraSpec load_spec_file(const std::string& path);

}  // namespace skew3
