#pragma once

#include "krall/families.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace krall {

// <r mu, p> = <mu, r p>
struct ChristoffelBy {
  Polynomial r;
};
// <mu(x+lambda), p> = <mu, p(x-lambda)>
struct ShiftBy {
  Rational lambda;
};
// <mu + mass delta_location, p> = <mu, p> + mass p(location), mass in anchor units
struct AddDeltaScaled {
  Rational location;
  Rational mass;
};
using Transform = std::variant<ChristoffelBy, ShiftBy, AddDeltaScaled>;

// Finitely supported measure sum_i m_i delta_{x_i}.
struct DiscreteMeasure {
  std::vector<std::pair<Rational, Rational>> atoms; // (point, mass)
};
// Raw moment sequence mu_0, mu_1, ...; pairing beyond its length throws.
struct RawMoments {
  std::vector<Rational> mu;
};

// A moment functional in units of its base anchor (<base, 1> = 1 for a family base).
class MomentFunctional {
public:
  explicit MomentFunctional(const FamilySpec& base);
  explicit MomentFunctional(FamilyPtr base);
  explicit MomentFunctional(DiscreteMeasure base);
  explicit MomentFunctional(RawMoments base);

  MomentFunctional transformed(const Transform& t) const;
  const std::vector<Transform>& transforms() const { return transforms_; }
  std::optional<FamilySpec> base_family() const;

  Rational pair(const Polynomial& p) const;
  std::vector<Rational> moments(int count) const;

  // Transcendental total mass of the base that the pairing divides out.
  std::string anchor() const;
  nlohmann::json to_json() const;
  static MomentFunctional from_json(const nlohmann::json& j);

private:
  Rational base_pair(const Polynomial& p) const;

  FamilyPtr family_;
  std::optional<DiscreteMeasure> discrete_;
  std::optional<RawMoments> raw_;
  std::vector<Transform> transforms_;
};

MomentFunctional transform(const MomentFunctional& F, const Transform& t);
Rational pairing(const MomentFunctional& F, const Polynomial& p);

using Matrix = std::vector<std::vector<Rational>>;
Rational determinant(Matrix m);

// Theta_n = det(mu_{i+j})_{i,j=0..n}
Rational hankel_det(const std::vector<Rational>& mu, int n);
// Monic orthogonal polynomials p_0..p_nmax; throws DegeneracyError at the first n with Theta_n = 0.
std::vector<Polynomial> orthoseq(const std::vector<Rational>& mu, int nmax);
std::vector<Polynomial> orthoseq(const MomentFunctional& F, int nmax);

struct GramEntry {
  int i, j;
  Rational value;
};
struct GramReport {
  int size = 0;
  std::vector<GramEntry> off_diagonal_failures; // nonzero <q_i, q_j>, i != j
  std::vector<int> zero_diagonal;               // n with <q_n, q_n> = 0
  std::vector<Rational> diagonal;
  bool ok() const { return off_diagonal_failures.empty() && zero_diagonal.empty(); }
};
GramReport gram_check(const MomentFunctional& F, const std::vector<Polynomial>& polys);

// det (c_{n+j-1}^a(i))_{i,j=1..k} and (-1)^{kn} a^{(n-1)k} prod_j j!/(n+j-1)! c_k^{-a}(-n).
struct CasoratiValue {
  Rational det;
  Rational formula;
};
CasoratiValue casorati(const Rational& a, int k, int n);

// Bilinear form of the Laguerre orthogonality lemma, in Gamma(alpha-k) units, k = deg P2.
Rational occ_form(const Rational& alpha, const Polynomial& P2, const Polynomial& f, const Polynomial& g);
// Q of the lemma (built from P2(-x) in the binom(x+j, j) basis).
Polynomial occ_Q(const Rational& alpha, const Polynomial& P2);

} // namespace krall
