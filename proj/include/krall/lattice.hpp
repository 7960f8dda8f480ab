#pragma once

#include "krall/families.hpp"

namespace krall {

// s_{j,u}(x) = (-1)^j prod_{i<j} [x + i(u-i)], s_{0,u} = 1.
Polynomial s_ju(int j, const Rational& u);

// Hahn lattice: r_j = s_{j, alpha+c-N-2}, u_j(n) = (n)_j (-n-alpha-c+N+2)_j.
Polynomial r_j(int j, const Hahn& h);
Rational u_j(int j, int n, const Hahn& h);
// Jacobi lattice: r_j = prod_{i<j} [-x + (alpha+i+1)(beta-i)], u_j(n) = (n+alpha)_j (n+beta-j)_j.
Polynomial r_j(int j, const Jacobi& f);
Rational u_j(int j, int n, const Jacobi& f);

// Dispatch on a Hahn or Jacobi spec; throws for the other families.
Polynomial r_j(int j, const FamilySpec& spec);
Rational u_j(int j, int n, const FamilySpec& spec);

// sum_j w_j r_j
Polynomial from_r_basis(const std::vector<Rational>& w, const FamilySpec& spec);
// Inverse of from_r_basis.
std::vector<Rational> to_r_basis(const Polynomial& p, const FamilySpec& spec);

// Monic dual Hahn h_k^{*,alpha,c,N}(x) = sum_j (-k)_j (1-N+j)_{k-j} (c+j)_{k-j} / j! s_{j,N-alpha-c}(x).
Polynomial dual_hahn(const Rational& alpha, const Rational& c, const Rational& N, int k);
// Variant 1: h_k^{*,N+c-1,2-c,alpha+c-1}; variant 2: h_k^{*,-alpha,2-c,-N}.
Polynomial dual_hahn_poly(int variant, const Rational& alpha, const Rational& c, const Rational& N, int k);

} // namespace krall
