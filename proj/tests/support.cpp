#include "support.hpp"

#include "skew3/pbw.hpp"
#include "skew3/smooth.hpp"

namespace skew3::testing {

std::vector<AlgebraSpec> pbw_sample_specs(std::uint64_t seed, std::size_t count) {
  std::vector<AlgebraSpec> out;
  for (const auto& p : presets()) out.push_back(p.spec);
  SeededRng rng(seed);
  while (out.size() < count) {
    AlgebraSpec s = random_spec(rng);
    if (is_pbw(s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace skew3::testing
