#include "krall/lattice.hpp"

namespace krall {

Polynomial s_ju(int j, const Rational& u) {
  Polynomial s = 1;
  for (int i = 0; i < j; ++i) s *= Polynomial{Rational(-i * (u - i)), Rational(-1)};
  return s;
}

Polynomial r_j(int j, const Hahn& h) { return s_ju(j, h.alpha + h.c - h.N - 2); }

Rational u_j(int j, int n, const Hahn& h) {
  return pochhammer(Rational(n), j) * pochhammer(-n - h.alpha - h.c + h.N + 2, j);
}

Polynomial r_j(int j, const Jacobi& f) {
  Polynomial r = 1;
  for (int i = 0; i < j; ++i) r *= Polynomial{Rational((f.alpha + i + 1) * (f.beta - i)), Rational(-1)};
  return r;
}

Rational u_j(int j, int n, const Jacobi& f) {
  return pochhammer(n + f.alpha, j) * pochhammer(n + f.beta - j, j);
}

Polynomial r_j(int j, const FamilySpec& spec) {
  if (const auto* h = std::get_if<Hahn>(&spec)) return r_j(j, *h);
  if (const auto* f = std::get_if<Jacobi>(&spec)) return r_j(j, *f);
  throw InvalidArgument(family_name(spec) + " has no r_j lattice basis");
}

Rational u_j(int j, int n, const FamilySpec& spec) {
  if (const auto* h = std::get_if<Hahn>(&spec)) return u_j(j, n, *h);
  if (const auto* f = std::get_if<Jacobi>(&spec)) return u_j(j, n, *f);
  throw InvalidArgument(family_name(spec) + " has no u_j sequence");
}

Polynomial from_r_basis(const std::vector<Rational>& w, const FamilySpec& spec) {
  Polynomial p;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (w[j] != 0) p += r_j(static_cast<int>(j), spec) * w[j];
  return p;
}

std::vector<Rational> to_r_basis(const Polynomial& p, const FamilySpec& spec) {
  return expand_graded(p, [&](int m) { return r_j(m, spec); });
}

Polynomial dual_hahn(const Rational& alpha, const Rational& c, const Rational& N, int k) {
  Polynomial h;
  const Rational u = N - alpha - c;
  for (int j = 0; j <= k; ++j) {
    Rational w = pochhammer(Rational(-k), j) * pochhammer(1 - N + j, k - j) * pochhammer(c + j, k - j) / factorial(j);
    if (w != 0) h += s_ju(j, u) * w;
  }
  return h;
}

Polynomial dual_hahn_poly(int variant, const Rational& alpha, const Rational& c, const Rational& N, int k) {
  if (variant == 1) return dual_hahn(N + c - 1, 2 - c, alpha + c - 1, k);
  if (variant == 2) return dual_hahn(-alpha, 2 - c, -N, k);
  throw InvalidArgument("dual Hahn variant must be 1 or 2");
}

} // namespace krall
