#pragma once

// Shared helpers and independent oracles for the test suites.

#include <map>
#include <string>
#include <vector>

#include "skew3/ncalg.hpp"
#include "skew3/random.hpp"

namespace skew3::testing {

inline RationalFn P(const std::string& name) { return RationalFn::param(name); }
inline RationalFn Q(long num, long den) { return RationalFn(Rational(num, den)); }

inline NCPoly M(std::uint32_t i, std::uint32_t j, std::uint32_t l, RationalFn c = RationalFn(1)) {
  return NCPoly(Monomial{i, j, l}, std::move(c));
}
inline NCPoly C(RationalFn c) { return NCPoly(std::move(c)); }

/// Reduces words to normal form by always rewriting the RIGHTMOST inversion,
/// one word at a time, with the relations read directly off the spec fields.
/// Deliberately shares nothing with Ring beyond AlgebraSpec and NCPoly.
class NaiveReducer {
 public:
  explicit NaiveReducer(AlgebraSpec s) : s_(std::move(s)) {}

  NCPoly reduce_word(const std::string& w) const {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    NCPoly out;
    std::size_t pos = std::string::npos;
    for (std::size_t i = w.size(); i-- > 1;) {
      if (w[i - 1] > w[i]) {
        pos = i - 1;
        break;
      }
    }
    if (pos == std::string::npos) {
      Monomial m{};
      for (char c : w) (c == 'x' ? m.x : c == 'y' ? m.y : m.z) += 1;
      out = NCPoly(m, RationalFn(1));
    } else {
      const std::string pre = w.substr(0, pos);
      const std::string post = w.substr(pos + 2);
      for (const auto& [mid, c] : rule(w[pos], w[pos + 1])) {
        out += reduce_word(pre + mid + post).scaled(c);
      }
    }
    memo_.emplace(w, out);
    return out;
  }

  NCPoly mul(const NCPoly& p, const NCPoly& q) const {
    NCPoly out;
    for (const auto& [a, ca] : p.terms()) {
      for (const auto& [b, cb] : q.terms()) {
        out += reduce_word(word(a) + word(b)).scaled(ca * cb);
      }
    }
    return out;
  }

  static std::string word(const Monomial& m) {
    return std::string(m.x, 'x') + std::string(m.y, 'y') + std::string(m.z, 'z');
  }

 private:
  // hi lo -> sum of (word, coefficient)
  std::vector<std::pair<std::string, RationalFn>> rule(char hi, char lo) const {
    const AlgebraSpec& s = s_;
    if (hi == 'y' && lo == 'x') {  // xy - g yx = ...
      const RationalFn gi = s.gamma.inverse();
      return {{"xy", gi}, {"x", -gi * s.a_nu}, {"y", -gi * s.b_nu}, {"z", -gi * s.c_nu}, {"", -gi * s.d_nu}};
    }
    if (hi == 'z' && lo == 'y') {  // yz - a zy = ...
      const RationalFn ai = s.alpha.inverse();
      return {{"yz", ai}, {"x", -ai * s.a_lambda}, {"y", -ai * s.b_lambda}, {"z", -ai * s.c_lambda},
              {"", -ai * s.d_lambda}};
    }
    // zx - b xz = ...
    return {{"xz", s.beta}, {"x", s.a_mu}, {"y", s.b_mu}, {"z", s.c_mu}, {"", s.d_mu}};
  }

  AlgebraSpec s_;
  mutable std::map<std::string, NCPoly> memo_;
};

/// Specs drawn from random_spec that pass the PBW conditions, plus every preset.
std::vector<AlgebraSpec> pbw_sample_specs(std::uint64_t seed, std::size_t count);

}  // namespace skew3::testing
