#include "krall/krall.hpp"
#include "krall/moments.hpp"
#include "krall/named.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace krall;
using krall::test::rq;

namespace {
const Polynomial x = Polynomial::x();

Polynomial prod_plus(int k) {
  Polynomial r = 1;
  for (int i = 1; i <= k; ++i) r *= x + Polynomial(i);
  return r;
}

Polynomial monic(const Polynomial& p) { return p * (1 / p.leading()); }

// Truncated-series oracle for a discrete measure sum_x w(x) delta_{x+offset}, computed in
// 256-bit floating point; returns <f> / <1>.
mpf_class series_ratio(const std::function<mpf_class(long)>& weight, long terms, const Polynomial& f,
                       const Rational& offset) {
  mpf_class num(0, 256), den(0, 256);
  for (long t = 0; t < terms; ++t) {
    mpf_class w = weight(t);
    mpf_class v(f(Rational(t) + offset), 256);
    num += w * v;
    den += w;
  }
  return num / den;
}

bool agrees_to_30_digits(const mpf_class& approx, const Rational& exact) {
  mpf_class e(exact, 256);
  mpf_class diff = abs(approx - e);
  mpf_class scale = abs(e) > 1 ? mpf_class(abs(e), 256) : mpf_class(1, 256);
  return diff / scale < mpf_class("1e-30", 256);
}
} // namespace

TEST_CASE("base pairings") {
  MomentFunctional rho(Charlier{rq("3/2")});
  CHECK(pairing(rho, 1) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(pairing(rho, classical_poly(Charlier{rq("3/2")}, n)) == 0);
  CHECK(rho.anchor().size() > 0);
  CHECK(rho.base_family().has_value());
}

TEST_CASE("shift and Christoffel semantics") {
  MomentFunctional rho(Meixner{rq("1/2"), rq("7/2")});
  Polynomial p = Polynomial{1, 2, 0, rq("-1/3")};
  CHECK(transform(rho, ShiftBy{0}).pair(p) == rho.pair(p));
  CHECK(rho.transformed(ShiftBy{3}).pair(p) == rho.pair(shift_arg(p, -3)));
  CHECK(rho.transformed(ChristoffelBy{x + Polynomial(2)}).pair(p) == rho.pair((x + Polynomial(2)) * p));
  CHECK(rho.transformed(AddDeltaScaled{rq("1/2"), 3}).pair(p) == rho.pair(p) + 3 * p(rq("1/2")));
}

TEST_CASE("discrete and raw bases") {
  MomentFunctional nu(DiscreteMeasure{{{0, 1}, {1, 2}, {3, rq("1/2")}}});
  CHECK(nu.pair(x * x) == 2 + rq("9/2"));
  MomentFunctional raw(RawMoments{{1, 0, 2}});
  CHECK(raw.pair(x * x - Polynomial(1)) == 1);
  CHECK_THROWS(raw.pair(x * x * x));
}

TEST_CASE("orthoseq") {
  Rational a = rq("3/2");
  auto ps = orthoseq(MomentFunctional(Charlier{a}), 8);
  for (int n = 0; n <= 8; ++n) CHECK(ps[n] == classical_poly(Charlier{a}, n) * factorial(n));
  try {
    orthoseq(std::vector<Rational>{1, 0, 0}, 2);
    FAIL("expected DegeneracyError");
  } catch (const DegeneracyError&) {
  }
  CHECK(hankel_det({1, 0, 0}, 1) == 0);
  CHECK(hankel_det({1, 0, 1}, 1) == 1);
  CHECK(determinant({{1, 2}, {3, 4}}) == -2);
}

TEST_CASE("orthoseq reproduces the Charlier construction") {
  auto nc = named("charlier", NamedParams{.k = 2, .a = 1}, 8);
  auto qs = orthoseq(nc.measure, 6);
  for (int n = 0; n <= 6; ++n) CHECK(qs[n] == monic(nc.kc.q(n)));
}

TEST_CASE("orthoseq output satisfies a three-term recurrence") {
  auto nc = named("meixner1", NamedParams{.k = 2, .a = rq("1/2"), .c = rq("7/2")}, 8);
  auto qs = orthoseq(nc.measure, 8);
  for (int n = 1; n < 8; ++n) {
    auto w = expand_graded(x * qs[n], [&](int m) -> const Polynomial& { return qs[m]; });
    for (int m = 0; m < n - 1; ++m) CHECK(w[m] == 0);
    CHECK(w[n + 1] * w[n - 1] != 0);
  }
}

TEST_CASE("gram_check") {
  auto nc = named("charlier", NamedParams{.k = 2, .a = 1}, 8);
  std::vector<Polynomial> qs, ps;
  for (int n = 0; n <= 8; ++n) qs.push_back(nc.kc.q(n)), ps.push_back(nc.kc.family->p(n));
  auto rep = gram_check(nc.measure, qs);
  CHECK(rep.ok());
  CHECK(rep.diagonal.size() == 9);
  auto bad = gram_check(nc.measure, ps);
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.off_diagonal_failures.empty());
}

TEST_CASE("shifted family stays orthogonal") {
  MomentFunctional rho(Meixner{rq("1/3"), rq("5/2")});
  std::vector<Polynomial> shifted;
  for (int n = 0; n <= 6; ++n) shifted.push_back(shift_arg(classical_poly(Meixner{rq("1/3"), rq("5/2")}, n), 4));
  CHECK(gram_check(rho.transformed(ShiftBy{4}), shifted).ok());
}

TEST_CASE("adding a mass point to a discrete measure") {
  // nu on 0..9, lambda = 1/2, mu = (x - lambda) nu
  DiscreteMeasure atoms;
  for (int i = 0; i < 10; ++i) atoms.atoms.push_back({i, Rational(i + 1, 1) / (i * i + 2)});
  for (auto& at : atoms.atoms) at.second.canonicalize();
  const Rational lambda = rq("1/2"), M = rq("3/7");
  MomentFunctional nu(atoms);
  MomentFunctional mu = nu.transformed(ChristoffelBy{x - Polynomial(lambda)});
  auto p = orthoseq(mu, 7);
  auto alpha = [&](int n) { return nu.pair(p[n]); };
  std::vector<Polynomial> q{Polynomial(1)};
  for (int n = 1; n <= 7; ++n) {
    Rational beta = -(alpha(n) + M * p[n](lambda)) / (alpha(n - 1) + M * p[n - 1](lambda));
    q.push_back(p[n] + beta * p[n - 1]);
  }
  auto rep = gram_check(nu.transformed(AddDeltaScaled{lambda, M}), q);
  CHECK(rep.ok());
}

TEST_CASE("Christoffel transform coefficients stay in a band") {
  // r q_n is a combination of p_n .. p_{n+k} when q_n is orthogonal for r mu
  auto nc = named("charlier", NamedParams{.k = 2, .a = 1}, 10);
  auto qs = orthoseq(nc.measure, 7);
  MomentFunctional base = MomentFunctional(Charlier{1}).transformed(ShiftBy{3});
  auto ps = orthoseq(base, 10);
  for (int n = 0; n <= 7; ++n) {
    auto c = expand_graded(prod_plus(2) * qs[n], [&](int m) -> const Polynomial& { return ps[m]; });
    for (int m = 0; m < n; ++m) CHECK(c[m] == 0);
  }
}

TEST_CASE("casorati") {
  CHECK(casorati(1, 2, 1).det == casorati(1, 2, 1).formula);
  for (Rational a : {Rational(1), rq("1/2"), Rational(3)})
    for (int k = 1; k <= 3; ++k)
      for (int n = 0; n <= 6; ++n) {
        auto v = casorati(a, k, n);
        CHECK(v.det == v.formula);
      }
  // k = 1: det = c_n(1)
  for (int n = 0; n <= 6; ++n) CHECK(casorati(rq("2/5"), 1, n).det == classical_poly(Charlier{rq("2/5")}, n)(1));
}

TEST_CASE("Christoffel existence matches the Casorati determinant") {
  // q_n exists for r rho exactly when Theta_{n-1} != 0, i.e. when det Lambda_n != 0
  for (auto [a, k] : {std::pair{Rational(2), 1}, std::pair{Rational(1), 2}, std::pair{Rational(3), 1}}) {
    auto rho = MomentFunctional(Charlier{a}).transformed(ShiftBy{k + 1}).transformed(ChristoffelBy{prod_plus(k)});
    auto mu = rho.moments(20);
    for (int n = 1; n <= 8; ++n) CHECK((hankel_det(mu, n - 1) != 0) == (casorati(a, k, n).det != 0));
  }
  CHECK(casorati(2, 1, 2).det == 0);
}

TEST_CASE("no zeros of c_k^{-a}(-n) for even k and a > 0") {
  for (auto [a, k] : {std::pair{Rational(1), 2}, std::pair{Rational(3), 2}, std::pair{rq("1/2"), 4}}) {
    Polynomial c = classical_poly(Charlier{-a}, k);
    for (int n = 1; n <= 50; ++n) CHECK(c(-n) != 0);
  }
}

TEST_CASE("pairings against a 256-bit truncated series") {
  // Charlier rho~ with (k, a) = (2, 1): weight a^t/t! at t, point t - 3, multiplier (x+1)(x+2)
  auto charlier_w = [](long t) {
    mpf_class w(1, 256);
    for (long i = 1; i <= t; ++i) w /= i;
    return w;
  };
  auto nc = named("charlier", NamedParams{.k = 2, .a = 1}, 6);
  const Rational base = nc.measure.pair(1);
  for (int n = 0; n <= 4; ++n) {
    Polynomial p = classical_poly(Charlier{1}, n) + x * x;
    // the support points t - 3 carry r(t - 3) a^t / t!
    mpf_class approx = series_ratio(charlier_w, 120, shift_arg(prod_plus(2) * p, -3), 0);
    CHECK(agrees_to_30_digits(approx, nc.measure.pair(p) / base));
  }

  // Meixner (a, c) = (1/2, 7/2): weight (c)_t a^t / t!
  const Rational a = rq("1/2"), c = rq("7/2");
  auto meixner_w = [&](long t) {
    mpf_class w(1, 256);
    for (long i = 0; i < t; ++i) w *= mpf_class(c + i, 256) * mpf_class(a, 256) / (i + 1);
    return w;
  };
  MomentFunctional m(Meixner{a, c});
  for (Polynomial p : {Polynomial{1, 1}, x * x * x, Polynomial{rq("1/3"), 0, -2, 1}})
    CHECK(agrees_to_30_digits(series_ratio(meixner_w, 400, p, 0), m.pair(p)));
}

TEST_CASE("Laguerre bilinear form of the orthogonality lemma") {
  for (Rational alpha : {rq("1/2"), rq("5/2")})
    for (const Polynomial& P2 : {Polynomial{rq("1/2"), 1}, Polynomial{1, -1}, Polynomial{3, 1, 1}, Polynomial{3, -4, 1}}) {
      const int k = P2.degree();
      CAPTURE(alpha);
      CAPTURE(to_string(P2));
      auto fam = make_family(Laguerre{alpha});
      auto kc = construct_type1(fam, catalog_entry(fam->spec(), 1), P2, 10);
      for (int n = 0; n <= 10; ++n) {
        for (int j = 0; j < n; ++j) CHECK(occ_form(alpha, P2, kc.q(n), kc.q(j)) == 0);
        CHECK(occ_form(alpha, P2, kc.q(n), kc.q(n)) != 0);
        for (int j = 0; j + k + 2 <= n; ++j)
          CHECK(occ_form(alpha, P2, power(x, k + 1) * kc.q(n), kc.q(j)) == 0);
      }
      if (P2(1) != 0) CHECK(occ_form(alpha, P2, 1, 1) == pochhammer(alpha - k, k) * P2(0) / P2(1));
    }
  CHECK_THROWS_AS(occ_Q(1, Polynomial{1, 1}), InvalidArgument);
}

TEST_CASE("measure JSON round-trip") {
  auto F = named_measure("hahn2", NamedParams{.k = 2, .c = rq("9/2"), .N = rq("11/2"), .alpha = rq("37/3")});
  auto j = F.to_json();
  auto G = MomentFunctional::from_json(j);
  CHECK(G.to_json() == j);
  for (Polynomial p : {Polynomial(1), x, x * x * x}) CHECK(G.pair(p) == F.pair(p));
  auto D = MomentFunctional(Laguerre{1}).transformed(AddDeltaScaled{0, rq("2/3")});
  CHECK(MomentFunctional::from_json(D.to_json()).pair(x) == D.pair(x));
}
