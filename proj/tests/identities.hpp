#pragma once

// Auxiliary identities of the Hahn lattice, written out independently of the library's
// construction code so that both the unit tests and the acceptance run can use them.

#include "krall/families.hpp"
#include "krall/lattice.hpp"

namespace krall::test {

// s_{j,u}(x(x-u)) == (-x)_j (x-u)_j
inline bool nlp_holds(int j, const Rational& u) {
  const Polynomial x = Polynomial::x();
  return compose(s_ju(j, u), x * (x - Polynomial(u))) == pochhammer_of(-x, j) * pochhammer_of(x - Polynomial(u), j);
}

// u_j(n) == r_j(theta_{n-1})
inline bool ulll_first_holds(int j, int n, const FamilySpec& spec) {
  return u_j(j, n, spec) == r_j(j, spec)(theta(spec, n - 1));
}

// sigma_n u_j(n) + sigma_{n+1} u_j(n+1)
//   == -2 (u_{j+1}(n+1) - u_{j+1}(n)) / (j+1) + (-alpha-c+N+2(j+1)) (u_j(n+1) - u_j(n))
inline bool ulll_second_holds(int j, int n, const Hahn& h) {
  auto u = [&](int jj, int nn) { return u_j(jj, nn, h); };
  auto sg = [&](int nn) { return Rational(2 * nn + h.alpha + h.c - h.N - 2); };
  Rational lhs = sg(n) * u(j, n) + sg(n + 1) * u(j, n + 1);
  Rational rhs = Rational(-2 * (u(j + 1, n + 1) - u(j + 1, n)) / (j + 1)) +
                 (-h.alpha - h.c + h.N + 2 * (j + 1)) * (u(j, n + 1) - u(j, n));
  return lhs == rhs;
}

// (c)_n (1-N)_n h*_k(n(n+A)) == (c)_k (1-N)_k (n+A)_n h_n(k), A = alpha+c-N
inline bool duality_holds(const Hahn& h, int k, int n) {
  const Rational A = h.alpha + h.c - h.N;
  Rational lhs = pochhammer(h.c, n) * pochhammer(1 - h.N, n) * dual_hahn(h.alpha, h.c, h.N, k)(n * (n + A));
  Rational rhs = pochhammer(h.c, k) * pochhammer(1 - h.N, k) * pochhammer(n + A, n) * classical_poly(h, n)(k);
  return lhs == rhs;
}

// Second-order difference equation of h*_{1,k} on the lattice x(x+2+N-alpha-c).
inline bool sodedh_holds(const Rational& al, const Rational& c, const Rational& N, int k) {
  const Polynomial x = Polynomial::x();
  auto P = [](const Rational& v) { return Polynomial(v); };
  const Polynomial h = dual_hahn_poly(1, al, c, N, k);
  auto lat = [&](int l) {
    Polynomial y = x + P(l);
    return compose(h, y * (y + P(2 + N - al - c)));
  };
  Polynomial r = -x * (x + P(N)) * (x + P(N - al)) * (2 * x + P(N - al - c + 3));
  Polynomial s = (x + P(N - al - c + 2)) * (x + P(2 - al - c)) * (x + P(2 - c)) * (2 * x + P(N - al - c + 1));
  Polynomial u = (2 * x + P(N - al - c + 1)) * (2 * x + P(N - al - c + 2)) * (2 * x + P(N - al - c + 3));
  return r * lat(-1) - (r + s) * lat(0) + s * lat(1) == Rational(k) * u * lat(0);
}

// First-order equation: h*_{1,k}^{c}(L(x+1)) - h*_{1,k}^{c}(L(x))
//   == k (2x-alpha-c+N+3) h*_{1,k-1}^{c-1}(x(x+3+N-alpha-c))
inline bool fodedh_holds(const Rational& al, const Rational& c, const Rational& N, int k) {
  const Polynomial x = Polynomial::x();
  auto P = [](const Rational& v) { return Polynomial(v); };
  const Polynomial h = dual_hahn_poly(1, al, c, N, k);
  auto lat = [&](const Polynomial& y) { return compose(h, y * (y + P(2 + N - al - c))); };
  Polynomial lhs = lat(x + P(1)) - lat(x);
  Polynomial rhs = Rational(k) * (2 * x + P(N - al - c + 3)) *
                   compose(dual_hahn_poly(1, al, c - 1, N, k - 1), x * (x + P(3 + N - al - c)));
  return lhs == rhs;
}

} // namespace krall::test
