#pragma once

// Seeded generators for property checks. Only the engine's raw output is used
// (no std distributions), so sequences are identical across standard libraries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skew3/ncalg.hpp"

namespace skew3 {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

/// Structure constants drawn from {0, +-1, +-2, symbolic}; alpha, beta, gamma
/// avoid 0. A symbolic constant is the parameter named after its field.
AlgebraSpec random_spec(SeededRng& rng);

/// Sparse element with 1..max_terms terms of degree <= max_degree and small
/// rational or parameter coefficients (parameters drawn from `params`).
NCPoly random_ncpoly(SeededRng& rng, std::uint32_t max_degree, std::size_t max_terms,
                     const std::vector<std::string>& params = {});

/// Parameters occurring anywhere in the spec, sorted.
std::vector<std::string> spec_params(const AlgebraSpec& s);

}  // namespace skew3
