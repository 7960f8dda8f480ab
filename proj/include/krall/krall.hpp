#pragma once

#include "krall/dops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace krall {

// q_n = p_n + beta_n p_{n-1} together with the operator having them as eigenfunctions.
struct KrallConstruction {
  std::string theorem;
  FamilyPtr family;
  DOperatorSpec dop;
  int nmax = 0;
  std::optional<Polynomial> P1;
  Polynomial P2;
  Sequence gamma;
  Sequence lambda;
  Sequence beta;
  std::optional<Operator> Dq;
  std::vector<std::string> notes;

  Polynomial q(int n) const;
  Rational lambda0() const { return lambda(0); }
  // Expected genre (-k-1, k+1) for difference operators, k = deg P2.
  std::optional<Genre> expected_genre() const;
};

// theta_1 - theta_0; throws InvalidArgument when theta is not affine in n.
Rational affine_step(const FamilySpec& spec);

// Checks gamma_n != 0 for 1 <= n <= nmax+1.
void require_nonvanishing_gamma(const KrallConstruction& kc, const std::string& parameter);

// Type 1. P1 defaults to the zero-constant antidifference of P2; an explicit P1 must satisfy
// P1(x+d) - P1(x) = P2(x).
KrallConstruction construct_type1(FamilyPtr fam, const DOperatorSpec& dop, const Polynomial& P2, int nmax,
                                  const std::optional<Polynomial>& P1 = std::nullopt,
                                  const std::string& theorem = "type1");

// Type 2 (Hahn, Jacobi). w are the coefficients of P2 in the r_j basis.
KrallConstruction construct_type2(FamilyPtr fam, const DOperatorSpec& dop, const std::vector<Rational>& w, int nmax,
                                  const std::string& theorem = "type2");

// The P1 of the type-2 construction for a given P2 = sum w_j r_j, before any sign flip.
Polynomial type2_P1(const FamilySpec& spec, const std::vector<Rational>& w);

// P1^G = antidifference(G*P2, d); D_{q,G} = P1^G(D_p) + G(D_p) 𝔇 P2(D_p).
Polynomial generalized_P1(const KrallConstruction& kc, const Polynomial& G);
Operator generalized_operator(const KrallConstruction& kc, const Polynomial& G);

struct EigenFailure {
  int n;
  Polynomial lhs;
  Polynomial rhs;
};

struct EigenReport {
  int nmax = 0;
  std::vector<EigenFailure> failures;
  std::optional<Genre> genre;
  std::optional<Genre> expected_genre;
  bool genre_ok() const { return !expected_genre || genre == expected_genre; }
  bool ok() const { return failures.empty() && genre_ok(); }
};

// apply(D, q_n) = lambda(n) q_n for n = 0..nmax.
EigenReport verify_eigen(const KrallConstruction& kc, int nmax);
EigenReport verify_eigen(const KrallConstruction& kc, const Operator& D, const Sequence& lambda, int nmax);

struct BandReport {
  int nmin = 0;
  int nmax = 0;
  std::vector<std::vector<int>> offsets; // offsets[n - nmin]
  int lo = 0;
  int hi = 0;
  bool within(int a, int b) const { return lo >= a && hi <= b; }
};

// Expands multiplier * q_n in the q basis for n = nmin..nmax.
BandReport band_profile(const KrallConstruction& kc, const Polynomial& multiplier, int nmin, int nmax);

} // namespace krall
