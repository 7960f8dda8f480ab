#pragma once

#include "krall/krall.hpp"
#include "krall/moments.hpp"

#include <optional>
#include <string>
#include <vector>

namespace krall {

struct NamedParams {
  int k = 1;
  Rational a, c, N, alpha, beta;
  // Koornwinder mass in anchor units; M is accepted for integer alpha (Laguerre) or beta (Jacobi).
  std::optional<Rational> K, M;
};

struct NamedConstruction {
  KrallConstruction kc;
  MomentFunctional measure;
  std::vector<std::string> errata;
};

// charlier, meixner1, meixner2, krawtchouk, hahn1, hahn2, laguerre, jacobi
const std::vector<std::string>& theorem_ids();
NamedConstruction named(const std::string& theorem, const NamedParams& p, int nmax);

// Target measures on their own, for the lemma checks.
MomentFunctional named_measure(const std::string& theorem, const NamedParams& p);

// Closed forms of the Koornwinder eigenvalues.
Rational laguerre_koekoek_eigenvalue(const Rational& alpha, const Rational& M, int n);
Rational jacobi_zhedanov_eigenvalue(const Rational& alpha, int beta, const Rational& M, int n);

struct IpRow {
  int n;
  Rational lhs; // <rho~, p_n> / <rho~, p_0>
  Rational rhs; // lemma formula, same ratio
};
struct IpReport {
  std::string kind;
  std::vector<IpRow> rows;
  bool ok() const;
};

// chxx, lme1x, meixner2, krawtchouk, hahn1, hahn2
const std::vector<std::string>& ip_lemma_ids();
IpReport ip_lemma_check(const std::string& kind, const NamedParams& p, int nmax);

} // namespace krall
