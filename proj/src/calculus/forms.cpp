#include <algorithm>
#include <sstream>

#include "skew3/calculus.hpp"

namespace skew3 {

namespace {

using GenList = std::vector<Gen>;

const std::array<std::vector<GenList>, 4>& basis_table() {
  static const std::array<std::vector<GenList>, 4> table{{
      {{}},
      {{Gen::x}, {Gen::y}, {Gen::z}},
      {{Gen::x, Gen::y}, {Gen::x, Gen::z}, {Gen::y, Gen::z}},
      {{Gen::x, Gen::y, Gen::z}},
  }};
  return table;
}

}  // namespace

std::size_t GradedForm::rank_of(int degree) {
  if (degree < 0) throw Error("negative form degree");
  return degree > 3 ? 0 : basis_table()[static_cast<std::size_t>(degree)].size();
}

GradedForm::GradedForm(int degree) : degree_(degree), coeffs_(rank_of(degree)) {}

GradedForm GradedForm::basis(int degree, std::size_t index, NCPoly coef) {
  GradedForm f(degree);
  f.coeff(index) = std::move(coef);
  return f;
}

const std::vector<Gen>& GradedForm::basis_gens(int degree, std::size_t index) {
  return basis_table().at(static_cast<std::size_t>(degree)).at(index);
}

std::string GradedForm::basis_name(int degree, std::size_t index) {
  const auto& gens = basis_gens(degree, index);
  if (gens.empty()) return "1";
  std::string s;
  for (Gen g : gens) {
    if (!s.empty()) s += "^";
    s += 'd';
    s += gen_char(g);
  }
  return s;
}

bool GradedForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const NCPoly& c) { return c.is_zero(); });
}

GradedForm& GradedForm::operator+=(const GradedForm& o) {
  if (o.degree_ != degree_) throw Error("adding forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GradedForm& GradedForm::operator-=(const GradedForm& o) {
  if (o.degree_ != degree_) throw Error("subtracting forms of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GradedForm GradedForm::operator-() const {
  GradedForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

GradedForm GradedForm::scaled(const RationalFn& c) const {
  GradedForm r = *this;
  for (auto& v : r.coeffs_) v = v.scaled(c);
  return r;
}

std::string GradedForm::to_string() const {
  if (degree_ == 0) return coeffs_.front().to_string();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << basis_name(degree_, i) << "*(" << coeffs_[i].to_string() << ")";
  }
  return first ? "0" : out.str();
}

GradedForm right_mul(const Ring& ring, const GradedForm& f, const NCPoly& p) {
  GradedForm r(f.degree());
  for (std::size_t i = 0; i < f.rank(); ++i) r.coeff(i) = ring.mul(f.coeff(i), p);
  return r;
}

std::optional<std::pair<std::size_t, RationalFn>> basis_wedge(const AlgebraSpec& s, int da,
                                                               std::size_t ia, int db,
                                                               std::size_t ib) {
  if (da + db > 3) return std::nullopt;
  GenList gens = GradedForm::basis_gens(da, ia);
  const auto& tail = GradedForm::basis_gens(db, ib);
  gens.insert(gens.end(), tail.begin(), tail.end());
  RationalFn scale(1);
  // Bubble sort; each adjacent swap of (hi, lo) picks up its commutation scalar.
  for (std::size_t pass = 0; pass < gens.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) {
      const Gen hi = gens[k];
      const Gen lo = gens[k + 1];
      if (hi == lo) return std::nullopt;
      if (hi < lo) continue;
      if (hi == Gen::y && lo == Gen::x) {
        scale *= -s.gamma.inverse();
      } else if (hi == Gen::z && lo == Gen::x) {
        scale *= -s.beta;
      } else {
        scale *= -s.alpha.inverse();
      }
      std::swap(gens[k], gens[k + 1]);
    }
  }
  const auto& row = basis_table()[static_cast<std::size_t>(da + db)];
  const auto idx = static_cast<std::size_t>(std::find(row.begin(), row.end(), gens) - row.begin());
  return std::make_pair(idx, scale);
}

GradedForm wedge(const Ring& ring, const TwistTriple& t, const GradedForm& f, const GradedForm& g) {
  const int deg = f.degree() + g.degree();
  GradedForm out(deg);
  if (deg > 3) return out;
  for (std::size_t i = 0; i < f.rank(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < g.rank(); ++j) {
      if (g.coeff(j).is_zero()) continue;
      auto bw = basis_wedge(ring.spec(), f.degree(), i, g.degree(), j);
      if (!bw) continue;
      // (e_i a) ^ (e_j c) = e_i ^ e_j twist_j(a) c
      const NCPoly moved = basis_twist(ring, t, g.degree(), j, f.coeff(i));
      out.coeff(bw->first) += ring.mul(moved, g.coeff(j)).scaled(bw->second);
    }
  }
  return out;
}

NCPoly pi_omega(const GradedForm& f) {
  if (f.degree() != 3) throw Error("pi_omega expects a 3-form");
  return f.coeff(0);
}

}  // namespace skew3
