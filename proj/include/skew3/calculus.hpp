#pragma once

// The three-dimensional differential calculus over a skew polynomial ring:
// twist automorphisms, graded forms with coefficients on the right, the
// differential (closed-form partials and an independent Leibniz recursion),
// the wedge product, the volume form and the integrability/connectedness
// certificates.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skew3/ncalg.hpp"
#include "skew3/sweep.hpp"

namespace skew3 {

/// Element of Omega^k for k = 0..3, written sum_i e_i * c_i with the ordered
/// right-module basis
///   k=0: 1;  k=1: dx, dy, dz;  k=2: dx^dy, dx^dz, dy^dz;  k=3: dx^dy^dz.
/// Degrees above 3 exist only as the (rank-zero) zero form.
class GradedForm {
 public:
  explicit GradedForm(int degree = 0);
  static GradedForm basis(int degree, std::size_t index, NCPoly coef = NCPoly(RationalFn(1)));

  int degree() const { return degree_; }
  std::size_t rank() const { return coeffs_.size(); }
  const NCPoly& coeff(std::size_t i) const { return coeffs_.at(i); }
  NCPoly& coeff(std::size_t i) { return coeffs_.at(i); }
  bool is_zero() const;

  GradedForm& operator+=(const GradedForm& o);
  GradedForm& operator-=(const GradedForm& o);
  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  GradedForm operator-() const;
  GradedForm scaled(const RationalFn& c) const;
  friend bool operator==(const GradedForm&, const GradedForm&) = default;

  /// Generators of basis element `index` of the given degree, ascending.
  static const std::vector<Gen>& basis_gens(int degree, std::size_t index);
  static std::string basis_name(int degree, std::size_t index);
  static std::size_t rank_of(int degree);
  std::string to_string() const;

 private:
  int degree_;
  std::vector<NCPoly> coeffs_;
};

/// Coefficient-wise right multiplication f * p.
GradedForm right_mul(const Ring& ring, const GradedForm& f, const NCPoly& p);

/// The twist automorphisms with p dxi = dxi nu_xi(p).
struct TwistTriple {
  Endo nu_x, nu_y, nu_z;
  const Endo& of(Gen g) const;
};

/// nu_x: x -> b^-1 x, y -> g^-1 (y - a_nu), z -> b z + a_mu
/// nu_y: x -> g x + b_nu, y -> y, z -> a^-1 (z - b_lambda)
/// nu_z: x -> b^-1 (x - c_mu), y -> a y + c_lambda, z -> b z
/// each with its inverse obtained by inverting the affine generator map.
TwistTriple build_automorphisms(const Ring& ring);

/// e(y)e(z) - alpha e(z)e(y) - e(lambda) and the two companion defects.
std::array<NCPoly, 3> relation_defects(const Ring& ring, const Endo& e);
bool endo_is_homomorphism(const Ring& ring, const Endo& e);
bool endos_commute(const Ring& ring, const Endo& a, const Endo& b);

/// nu_{g_k}( ... nu_{g_1}(p)) for basis element (degree, index) = dg_1^...^dg_k,
/// so that p * e = e * twist(p).
NCPoly basis_twist(const Ring& ring, const TwistTriple& t, int degree, std::size_t index,
                   const NCPoly& p);
/// p * f, moving p to the right of each basis form.
GradedForm left_act(const Ring& ring, const TwistTriple& t, const NCPoly& p, const GradedForm& f);

/// d from the closed-form partial derivatives on standard monomials.
GradedForm d_closed(const Ring& ring, const NCPoly& p);
/// d from the Leibniz rule, splitting off the leftmost generator of each monomial.
GradedForm d_leibniz(const Ring& ring, const TwistTriple& t, const NCPoly& p);

/// Basis product e_a ^ e_b = scale * e_c, reordered by
///   dy^dx = -gamma^-1 dx^dy,  dz^dx = -beta dx^dz,  dz^dy = -alpha^-1 dy^dz.
/// nullopt when a generator repeats or the degree exceeds 3.
std::optional<std::pair<std::size_t, RationalFn>> basis_wedge(const AlgebraSpec& s, int da,
                                                               std::size_t ia, int db,
                                                               std::size_t ib);
/// f ^ g; the zero form of degree deg f + deg g when that exceeds 3.
GradedForm wedge(const Ring& ring, const TwistTriple& t, const GradedForm& f, const GradedForm& g);
/// d(e a) = (-1)^deg e ^ d(a), extended linearly; deg f <= 2.
GradedForm d_on_forms(const Ring& ring, const TwistTriple& t, const GradedForm& f);

/// Right coordinate of a top form: pi(omega a) = a.
NCPoly pi_omega(const GradedForm& f);
/// p omega = omega nu_omega(p); nu_omega = nu_z o nu_y o nu_x, with inverse.
Endo nu_omega(const Ring& ring, const TwistTriple& t);

/// Forms omega^k_i, bar-omega^k_i (k = 1, 2; i = 1..3) for the integrability identities.
struct IntegralData {
  std::array<GradedForm, 3> one, one_bar, two, two_bar;

  /// omega^2 = (dy^dz, -gamma dx^dz, alpha beta^-1 dx^dy),
  /// bar-omega^2 = (gamma beta^-1 dy^dz, -alpha dx^dz, dx^dy).
  static IntegralData standard(const AlgebraSpec& s);
  /// The list with omega^2_3 = alpha beta^-1 dx^dz and bar-omega^2_2 = -alpha dx^dy,
  /// which does not satisfy the identities.
  static IntegralData swapped_basis(const AlgebraSpec& s);
};

struct IntegrabilityReport {
  bool ok = true;
  std::size_t checked = 0;  // number of (k, identity, test form) instances
  std::string failure;      // first counterexample, empty on success
};

/// Checks, for k = 1, 2 and every test form e * m (e a basis k-form, m a
/// standard monomial of degree <= max_degree):
///   w = sum_i omega^k_i pi(bar-omega^{3-k}_i ^ w)
///   w = sum_i nu_omega^-1(pi(w ^ omega^{3-k}_i)) bar-omega^k_i
IntegrabilityReport integrability_check(const Ring& ring, const TwistTriple& t,
                                        const IntegralData& data, std::uint32_t max_degree,
                                        Exec exec = Exec::parallel);

struct ConnectednessReport {
  std::uint32_t max_degree = 0;
  std::size_t columns = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool connected = false;  // kernel is exactly the constants
};

/// Rank of d on the span of standard monomials of degree <= max_degree, over
/// the field of rational functions in the parameters.
ConnectednessReport connectedness_check(const Ring& ring, std::uint32_t max_degree,
                                        Exec exec = Exec::parallel);

}  // namespace skew3
