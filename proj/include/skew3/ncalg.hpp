#pragma once

// The 3-dimensional skew polynomial ring on x, y, z with relations
//
//   yz - alpha zy = a_lambda x + b_lambda y + c_lambda z + d_lambda
//   zx - beta  xz = a_mu x     + b_mu y     + c_mu z     + d_mu
//   xy - gamma yx = a_nu x     + b_nu y     + c_nu z     + d_nu
//
// Elements are kept in normal form on the standard monomials x^i y^j z^l,
// obtained by rewriting inversions (yx, zy, zx) under x < y < z.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "skew3/coeffs.hpp"

namespace skew3 {

enum class Gen : std::uint8_t { x = 0, y = 1, z = 2 };
inline constexpr std::array<Gen, 3> kGens{Gen::x, Gen::y, Gen::z};
char gen_char(Gen g);

struct AlgebraSpec {
  RationalFn alpha{1}, beta{1}, gamma{1};
  RationalFn a_lambda, b_lambda, c_lambda, d_lambda;
  RationalFn a_mu, b_mu, c_mu, d_mu;
  RationalFn a_nu, b_nu, c_nu, d_nu;

  /// Field names in canonical order (alpha, beta, gamma, a_lambda, ..., d_nu).
  static const std::array<std::string_view, 15>& field_names();
  RationalFn& field(std::string_view name);
  const RationalFn& field(std::string_view name) const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Throws InvalidSpec naming the first of alpha, beta, gamma that is zero.
void validate_spec(const AlgebraSpec& s);

/// Exponent triple of the standard monomial x^i y^j z^l.
struct Monomial {
  std::uint32_t x = 0, y = 0, z = 0;

  std::uint32_t degree() const { return x + y + z; }
  static Monomial of(Gen g);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string to_string() const;
};

/// Degree first, then lexicographic on (x, y, z) exponents.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All standard monomials of total degree <= max_degree, ascending.
std::vector<Monomial> monomials_up_to(std::uint32_t max_degree);

/// Element of the ring in normal form: standard monomial -> nonzero coefficient.
class NCPoly {
 public:
  using TermMap = std::map<Monomial, RationalFn, MonomialOrder>;

  NCPoly() = default;
  explicit NCPoly(RationalFn c);
  NCPoly(Monomial m, RationalFn c);
  static NCPoly gen(Gen g) { return NCPoly(Monomial::of(g), RationalFn(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RationalFn coefficient(const Monomial& m) const;
  /// Highest monomial in MonomialOrder; the ring must be nonzero.
  const Monomial& leading() const { return terms_.rbegin()->first; }
  std::uint32_t degree() const { return is_zero() ? 0 : leading().degree(); }

  /// Adds c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const RationalFn& c);

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly scaled(const RationalFn& c) const;
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Canonical text, degree-then-lex descending: "x*y*z - x^2 + y^2 - z^2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

NCPoly nc_add(const NCPoly& p, const NCPoly& q);
NCPoly nc_scale(const NCPoly& p, const RationalFn& c);

/// A word in the free algebra on x, y, z, written with the letters 'x', 'y', 'z'.
using Word = std::string;

/// Degree-lexicographic order on words with x < y < z.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};
using WordPoly = std::map<Word, RationalFn, WordOrder>;

/// The ring attached to a validated spec. Multiplication rewrites the leftmost
/// inversion of each word until only standard monomials remain, so results are
/// deterministic for any spec and are the true product when the spec is PBW.
///
/// Copies share an internal product cache; all members are safe to call
/// concurrently.
class Ring {
 public:
  explicit Ring(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }

  NCPoly mul(const NCPoly& p, const NCPoly& q) const;
  NCPoly mul_monomials(const Monomial& a, const Monomial& b) const;
  NCPoly pow(const NCPoly& p, unsigned n) const;

  /// One rewrite of the inversion at positions (pos, pos+1) of w.
  WordPoly rewrite_at(const Word& w, std::size_t pos) const;
  /// Normal form of a combination of words under the leftmost-inversion strategy.
  NCPoly reduce(WordPoly words) const;
  static std::optional<std::size_t> leftmost_inversion(const Word& w);

 private:
  struct ProductCache;

  AlgebraSpec spec_;
  // Right-hand sides for yx, zy, zx.
  std::array<std::vector<std::pair<Word, RationalFn>>, 3> rules_;
  std::shared_ptr<ProductCache> cache_;
};

NCPoly nc_mul(const Ring& ring, const NCPoly& p, const NCPoly& q);

/// Algebra endomorphism given by the images of x, y, z.
struct Endo {
  std::array<NCPoly, 3> images;
  std::optional<std::array<NCPoly, 3>> inverse;

  static Endo identity();
  const NCPoly& image(Gen g) const { return images[static_cast<std::size_t>(g)]; }
  /// Endo for the stored inverse images (whose own inverse is these images).
  Endo inverted() const;
};

/// Substitutes the images into every standard monomial, multiplying left to right.
NCPoly apply_endo(const Ring& ring, const Endo& e, const NCPoly& p);
/// outer o inner on generators; inverses are composed when both are present.
Endo compose(const Ring& ring, const Endo& outer, const Endo& inner);
/// Inverse images of an affine generator map g -> L g + t with invertible L,
/// nullopt if some image has degree > 1 or L is singular.
std::optional<std::array<NCPoly, 3>> affine_inverse(const std::array<NCPoly, 3>& images);

}  // namespace skew3
