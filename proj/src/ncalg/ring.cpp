#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "skew3/ncalg.hpp"

namespace skew3 {

struct Ring::ProductCache {
  std::shared_mutex mu;
  std::unordered_map<std::uint64_t, NCPoly> products;
};

namespace {


// Index into Ring::rules_ for the inversion (hi, lo).
std::size_t rule_index(char hi, char lo) {
  if (hi == 'y' && lo == 'x') return 0;
  if (hi == 'z' && lo == 'y') return 1;
  return 2;  // zx
}

std::uint64_t pack(const Monomial& a, const Monomial& b) {
  auto f = [](std::uint32_t v) { return static_cast<std::uint64_t>(v) & 0x3FFU; };
  return f(a.x) | f(a.y) << 10 | f(a.z) << 20 | f(b.x) << 30 | f(b.y) << 40 | f(b.z) << 50;
}

Word word_of(const Monomial& m) {
  return Word(m.x, 'x') + Word(m.y, 'y') + Word(m.z, 'z');
}

Monomial monomial_of_normal_word(const Word& w) {
  Monomial m;
  for (char c : w) {
    switch (c) {
      case 'x':
        ++m.x;
        break;
      case 'y':
        ++m.y;
        break;
      default:
        ++m.z;
        break;
    }
  }
  return m;
}

}  // namespace

Ring::Ring(AlgebraSpec spec) : spec_(std::move(spec)), cache_(std::make_shared<ProductCache>()) {
  validate_spec(spec_);
  const auto& s = spec_;
  auto rhs = [](const RationalFn& lead_coef, const Word& lead, const RationalFn& scale,
                const RationalFn& a, const RationalFn& b, const RationalFn& c, const RationalFn& d) {
    std::vector<std::pair<Word, RationalFn>> r;
    auto put = [&r](Word w, RationalFn v) {
      if (!v.is_zero()) r.emplace_back(std::move(w), std::move(v));
    };
    put(lead, lead_coef);
    put("x", scale * a);
    put("y", scale * b);
    put("z", scale * c);
    put("", scale * d);
    return r;
  };
  const RationalFn ginv = s.gamma.inverse();
  const RationalFn ainv = s.alpha.inverse();
  // yx -> gamma^-1 (xy - a_nu x - b_nu y - c_nu z - d_nu)
  rules_[0] = rhs(ginv, "xy", -ginv, s.a_nu, s.b_nu, s.c_nu, s.d_nu);
  // zy -> alpha^-1 (yz - a_lambda x - b_lambda y - c_lambda z - d_lambda)
  rules_[1] = rhs(ainv, "yz", -ainv, s.a_lambda, s.b_lambda, s.c_lambda, s.d_lambda);
  // zx -> beta xz + a_mu x + b_mu y + c_mu z + d_mu
  rules_[2] = rhs(s.beta, "xz", RationalFn(1), s.a_mu, s.b_mu, s.c_mu, s.d_mu);
}

std::optional<std::size_t> Ring::leftmost_inversion(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) return i;
  }
  return std::nullopt;
}

WordPoly Ring::rewrite_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1]) {
    throw Error("no inversion at position " + std::to_string(pos) + " of " + w);
  }
  WordPoly out;
  const Word head = w.substr(0, pos);
  const Word tail = w.substr(pos + 2);
  for (const auto& [mid, c] : rules_[rule_index(w[pos], w[pos + 1])]) {
    out[head + mid + tail] += c;
  }
  return out;
}

NCPoly Ring::reduce(WordPoly words) const {
  NCPoly out;
  // Every rewrite produces words that are smaller in WordOrder, so popping the
  // largest word first visits each word once with its merged coefficient.
  while (!words.empty()) {
    auto node = words.extract(std::prev(words.end()));
    const Word& w = node.key();
    const RationalFn& c = node.mapped();
    if (c.is_zero()) continue;
    auto pos = leftmost_inversion(w);
    if (!pos) {
      out.add_term(monomial_of_normal_word(w), c);
      continue;
    }
    const Word head = w.substr(0, *pos);
    const Word tail = w.substr(*pos + 2);
    for (const auto& [mid, rc] : rules_[rule_index(w[*pos], w[*pos + 1])]) {
      words[head + mid + tail] += c * rc;
    }
  }
  return out;
}

NCPoly Ring::mul_monomials(const Monomial& a, const Monomial& b) const {
  if (a.degree() == 0) return NCPoly(b, RationalFn(1));
  if (b.degree() == 0) return NCPoly(a, RationalFn(1));
  // Already normal when the last letter of a does not exceed the first of b.
  const char last = a.z ? 'z' : (a.y ? 'y' : 'x');
  const char first = b.x ? 'x' : (b.y ? 'y' : 'z');
  if (last <= first) return NCPoly(Monomial{a.x + b.x, a.y + b.y, a.z + b.z}, RationalFn(1));

  const std::uint64_t key = pack(a, b);
  {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->products.find(key);
    if (it != cache_->products.end()) return it->second;
  }
  WordPoly start;
  start[word_of(a) + word_of(b)] = RationalFn(1);
  NCPoly result = reduce(std::move(start));
  {
    std::unique_lock lock(cache_->mu);
    cache_->products.emplace(key, result);
  }
  return result;
}

NCPoly Ring::mul(const NCPoly& p, const NCPoly& q) const {
  NCPoly out;
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      const RationalFn c = ca * cb;
      const NCPoly prod = mul_monomials(ma, mb);
      for (const auto& [m, v] : prod.terms()) out.add_term(m, v * c);
    }
  }
  return out;
}

NCPoly Ring::pow(const NCPoly& p, unsigned n) const {
  NCPoly r(RationalFn(1));
  for (unsigned i = 0; i < n; ++i) r = mul(r, p);
  return r;
}

NCPoly nc_mul(const Ring& ring, const NCPoly& p, const NCPoly& q) { return ring.mul(p, q); }

}  // namespace skew3
