#include <algorithm>
#include <set>

#include "skew3/random.hpp"

namespace skew3 {

AlgebraSpec random_spec(SeededRng& rng) {
  AlgebraSpec s;
  for (auto name : AlgebraSpec::field_names()) {
    const bool scale = name == "alpha" || name == "beta" || name == "gamma";
    // Half of the affine constants are zero so that PBW specs are not rare.
    const std::uint64_t roll = scale ? 1 + rng.below(5) : rng.below(10);
    RationalFn v;
    switch (scale ? roll : (roll < 5 ? 0 : roll - 4)) {
      case 0:
        v = RationalFn(0);
        break;
      case 1:
        v = RationalFn(1);
        break;
      case 2:
        v = RationalFn(-1);
        break;
      case 3:
        v = RationalFn(2);
        break;
      case 4:
        v = RationalFn(-2);
        break;
      default:
        v = RationalFn::param(std::string(name));
        break;
    }
    s.field(name) = v;
  }
  return s;
}

NCPoly random_ncpoly(SeededRng& rng, std::uint32_t max_degree, std::size_t max_terms,
                     const std::vector<std::string>& params) {
  static const std::vector<Rational> kScalars{Rational(1),     Rational(-1),    Rational(2),
                                              Rational(-2),    Rational(1, 2),  Rational(-3, 2)};
  NCPoly p;
  const std::size_t n = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < n; ++t) {
    const auto d = static_cast<std::uint32_t>(rng.below(max_degree + 1));
    const auto i = static_cast<std::uint32_t>(rng.below(d + 1));
    const auto j = static_cast<std::uint32_t>(rng.below(d - i + 1));
    RationalFn c(rng.pick(kScalars));
    if (!params.empty() && rng.below(3) == 0) c *= RationalFn::param(rng.pick(params));
    p.add_term({i, j, d - i - j}, c);
  }
  if (p.is_zero()) p.add_term({}, RationalFn(1));
  return p;
}

std::vector<std::string> spec_params(const AlgebraSpec& s) {
  std::set<std::string> all;
  for (auto name : AlgebraSpec::field_names()) {
    for (auto& p : s.field(name).params()) all.insert(p);
  }
  return {all.begin(), all.end()};
}

}  // namespace skew3
