#include "krall/krall.hpp"

#include "krall/lattice.hpp"
#include "krall/parallel.hpp"

namespace krall {

Polynomial KrallConstruction::q(int n) const {
  if (n == 0) return 1;
  return family->p(n) + family->p(n - 1) * beta(n);
}

std::optional<Genre> KrallConstruction::expected_genre() const {
  if (family->kind() != OperatorKind::difference || !Dq) return std::nullopt;
  const int k = P2.degree();
  return Genre{-k - 1, k + 1, 2 * k + 2};
}

Rational affine_step(const FamilySpec& spec) {
  Rational d = theta(spec, 1) - theta(spec, 0);
  if (theta(spec, 2) - theta(spec, 1) != d)
    throw InvalidArgument(describe(spec) + ": theta_n is not affine in n; use the type-2 construction");
  if (d == 0) throw InvalidArgument(describe(spec) + ": constant theta_n");
  return d;
}

void require_nonvanishing_gamma(const KrallConstruction& kc, const std::string& parameter) {
  for (int n = 1; n <= kc.nmax + 1; ++n)
    if (kc.gamma(n) == 0)
      throw HypothesisError(kc.theorem, parameter, n,
                            kc.theorem + ": gamma_" + std::to_string(n) + " = " + parameter + " vanishes at n=" +
                                std::to_string(n));
}

KrallConstruction construct_type1(FamilyPtr fam, const DOperatorSpec& dop, const Polynomial& P2, int nmax,
                                  const std::optional<Polynomial>& P1, const std::string& theorem) {
  if (dop.kind != DopKind::type1) throw InvalidArgument("construct_type1 needs a type-1 D-operator");
  if (P2.is_zero()) throw InvalidArgument("P2 must be nonzero");
  const Rational d = affine_step(fam->spec());
  Polynomial p1 = P1 ? *P1 : antidifference(P2, d);
  if (shift_arg(p1, d) - p1 != P2) throw InvalidArgument(theorem + ": P1(x+d) - P1(x) != P2(x)");

  KrallConstruction kc;
  kc.theorem = theorem;
  kc.family = fam;
  kc.dop = dop;
  kc.nmax = nmax;
  kc.P1 = p1;
  kc.P2 = P2;
  kc.gamma = [fam, P2](int n) { return P2(fam->theta(n - 1)); };
  kc.lambda = [fam, p1](int n) { return p1(fam->theta(n)); };
  Sequence g = kc.gamma, eps = dop.eps;
  kc.beta = [g, eps](int n) { return Rational(eps(n) * g(n + 1) / g(n)); };
  require_nonvanishing_gamma(kc, "P2(theta_{n-1})");

  const Operator& D = fam->op();
  kc.Dq = poly_of_op(p1, D) + compose(dop.closed_form, poly_of_op(P2, D));
  return kc;
}

Polynomial type2_P1(const FamilySpec& spec, const std::vector<Rational>& w) {
  Polynomial P1;
  if (const auto* h = std::get_if<Hahn>(&spec)) {
    const Rational A = h->alpha + h->c - h->N;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) continue;
      const int jj = static_cast<int>(j);
      P1 += (r_j(jj + 1, *h) * frac(-2, jj + 1) + r_j(jj, *h) * Rational(-A + 2 * (jj + 1))) * w[j];
    }
    return P1;
  }
  if (const auto* f = std::get_if<Jacobi>(&spec)) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] == 0) continue;
      const int jj = static_cast<int>(j);
      P1 += (r_j(jj + 1, *f) * frac(2, jj + 1) + r_j(jj, *f) * Rational(f->alpha - f->beta + 2 * jj + 1)) * w[j];
    }
    return P1;
  }
  throw InvalidArgument(family_name(spec) + ": type-2 construction needs Hahn or Jacobi");
}

KrallConstruction construct_type2(FamilyPtr fam, const DOperatorSpec& dop, const std::vector<Rational>& w, int nmax,
                                  const std::string& theorem) {
  if (dop.kind != DopKind::type2) throw InvalidArgument("construct_type2 needs a type-2 D-operator");
  const FamilySpec& spec = fam->spec();
  const Polynomial P2 = from_r_basis(w, spec);
  if (P2.degree() < 1) throw InvalidArgument(theorem + ": P2 must have degree k >= 1");

  // The engine's P1 is built for sigma_n of the family; the D-operator for -sigma needs -P1.
  int sign = 0;
  for (int n = 1; n <= 4 && sign == 0; ++n) {
    Rational ref = sigma(spec, n), s = dop.sigma(n);
    if (ref == 0 && s == 0) continue;
    if (s == ref) sign = 1;
    else if (s == -ref) sign = -1;
    else break;
  }
  if (sign == 0) throw InvalidArgument(dop.label + ": sigma_n is neither +sigma_n nor -sigma_n of the family");
  const Polynomial P1 = type2_P1(spec, w) * Rational(sign);

  KrallConstruction kc;
  kc.theorem = theorem;
  kc.family = fam;
  kc.dop = dop;
  kc.nmax = nmax;
  kc.P1 = P1;
  kc.P2 = P2;
  kc.gamma = [spec, w](int n) {
    Rational g = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0) g += w[j] * u_j(static_cast<int>(j), n, spec);
    return g;
  };
  Sequence g = kc.gamma, sg = dop.sigma, eps = dop.eps;
  kc.lambda = [fam, g, sg, P1, P2](int n) {
    if (n == 0) return Rational((P1(fam->theta(0)) - sg(1) * P2(fam->theta(0))) / 2);
    return Rational((sg(n) * g(n) + P1(fam->theta(n - 1))) / 2);
  };
  kc.beta = [g, eps](int n) { return Rational(eps(n) * g(n + 1) / g(n)); };
  require_nonvanishing_gamma(kc, "sum_j w_j u_j(n)");

  const Operator& D = fam->op();
  kc.Dq = Rational(1, 2) * poly_of_op(P1, D) + compose(dop.closed_form, poly_of_op(P2, D));
  return kc;
}

Polynomial generalized_P1(const KrallConstruction& kc, const Polynomial& G) {
  if (kc.dop.kind != DopKind::type1) throw InvalidArgument("generalized operator is defined for type 1");
  return antidifference(G * kc.P2, affine_step(kc.family->spec()));
}

Operator generalized_operator(const KrallConstruction& kc, const Polynomial& G) {
  const Operator& D = kc.family->op();
  return poly_of_op(generalized_P1(kc, G), D) +
         compose(poly_of_op(G, D), compose(kc.dop.closed_form, poly_of_op(kc.P2, D)));
}

EigenReport verify_eigen(const KrallConstruction& kc, const Operator& D, const Sequence& lambda, int nmax) {
  EigenReport rep;
  rep.nmax = nmax;
  for (int n = 0; n <= nmax; ++n) kc.family->p(n);
  auto results = parallel_map(nmax + 1, [&](int n) {
    Polynomial q = kc.q(n);
    return EigenFailure{n, D.apply(q), q * lambda(n)};
  });
  for (auto& f : results)
    if (f.lhs != f.rhs) rep.failures.push_back(std::move(f));
  if (D.kind() == OperatorKind::difference && !D.is_zero()) rep.genre = genre_order(D.difference());
  return rep;
}

EigenReport verify_eigen(const KrallConstruction& kc, int nmax) {
  if (!kc.Dq) throw InvalidArgument(kc.theorem + ": construction has no operator");
  EigenReport rep = verify_eigen(kc, *kc.Dq, kc.lambda, nmax);
  rep.expected_genre = kc.expected_genre();
  return rep;
}

BandReport band_profile(const KrallConstruction& kc, const Polynomial& multiplier, int nmin, int nmax) {
  BandReport rep;
  rep.nmin = nmin;
  rep.nmax = nmax;
  const int top = nmax + std::max(multiplier.degree(), 0);
  std::vector<Polynomial> q;
  for (int m = 0; m <= top; ++m) q.push_back(kc.q(m));
  bool first = true;
  for (int n = nmin; n <= nmax; ++n) {
    auto c = expand_graded(multiplier * q[n], [&](int m) -> const Polynomial& { return q[m]; });
    std::vector<int> off;
    for (std::size_t m = 0; m < c.size(); ++m)
      if (c[m] != 0) off.push_back(static_cast<int>(m) - n);
    if (!off.empty()) {
      if (first) rep.lo = off.front(), rep.hi = off.back(), first = false;
      rep.lo = std::min(rep.lo, off.front());
      rep.hi = std::max(rep.hi, off.back());
    }
    rep.offsets.push_back(std::move(off));
  }
  return rep;
}

} // namespace krall
