#include "skew3/ncalg.hpp"

namespace skew3 {

Endo Endo::identity() {
  std::array<NCPoly, 3> gens{NCPoly::gen(Gen::x), NCPoly::gen(Gen::y), NCPoly::gen(Gen::z)};
  return Endo{gens, gens};
}

Endo Endo::inverted() const {
  if (!inverse) throw Error("endomorphism has no constructed inverse");
  return Endo{*inverse, images};
}

NCPoly apply_endo(const Ring& ring, const Endo& e, const NCPoly& p) {
  std::array<std::vector<NCPoly>, 3> powers;
  auto power = [&](std::size_t g, std::uint32_t n) -> const NCPoly& {
    auto& cache = powers[g];
    if (cache.empty()) cache.emplace_back(RationalFn(1));
    while (cache.size() <= n) cache.push_back(ring.mul(cache.back(), e.images[g]));
    return cache[n];
  };
  NCPoly out;
  for (const auto& [m, c] : p.terms()) {
    NCPoly term = ring.mul(ring.mul(power(0, m.x), power(1, m.y)), power(2, m.z));
    out += term.scaled(c);
  }
  return out;
}

Endo compose(const Ring& ring, const Endo& outer, const Endo& inner) {
  Endo r;
  for (std::size_t g = 0; g < 3; ++g) r.images[g] = apply_endo(ring, outer, inner.images[g]);
  if (outer.inverse && inner.inverse) {
    const Endo outer_inv = outer.inverted();
    const Endo inner_inv = inner.inverted();
    std::array<NCPoly, 3> inv;
    for (std::size_t g = 0; g < 3; ++g) inv[g] = apply_endo(ring, inner_inv, outer_inv.images[g]);
    r.inverse = inv;
  }
  return r;
}

std::optional<std::array<NCPoly, 3>> affine_inverse(const std::array<NCPoly, 3>& images) {
  // Augmented system [L | I] with images[i] = sum_j L[i][j] g_j + t[i].
  std::array<std::array<RationalFn, 6>, 3> m;
  std::array<RationalFn, 3> t;
  for (std::size_t i = 0; i < 3; ++i) {
    if (images[i].degree() > 1) return std::nullopt;
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = images[i].coefficient(Monomial::of(kGens[j]));
    for (std::size_t j = 0; j < 3; ++j) m[i][3 + j] = RationalFn(i == j ? 1 : 0);
    t[i] = images[i].coefficient(Monomial{});
  }
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    while (piv < 3 && m[piv][col].is_zero()) ++piv;
    if (piv == 3) return std::nullopt;
    std::swap(m[piv], m[col]);
    const RationalFn inv = m[col][col].inverse();
    for (auto& v : m[col]) v *= inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RationalFn f = m[r][col];
      for (std::size_t k = 0; k < 6; ++k) m[r][k] -= f * m[col][k];
    }
  }
  // Inverse images: g_i -> sum_j M[i][j] g_j - (M t)_i with M = L^-1.
  std::array<NCPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    RationalFn shift;
    for (std::size_t j = 0; j < 3; ++j) {
      const RationalFn& mij = m[i][3 + j];
      out[i].add_term(Monomial::of(kGens[j]), mij);
      shift += mij * t[j];
    }
    out[i].add_term(Monomial{}, -shift);
  }
  return out;
}

}  // namespace skew3
