#include "krall/named.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace krall;
using krall::test::rq;

namespace {
struct Sample {
  std::string theorem;
  NamedParams p;
};

std::vector<Sample> samples() {
  const Rational ha = rq("37/3"), hc = rq("9/2"), hN = rq("11/2");
  return {
      {"charlier", {.k = 2, .a = 1}},
      {"charlier", {.k = 1, .a = rq("1/2")}},
      {"charlier", {.k = 3, .a = 3}},
      {"meixner1", {.k = 2, .a = rq("1/2"), .c = rq("7/2")}},
      {"meixner1", {.k = 1, .a = 3, .c = rq("-2/5")}},
      {"meixner2", {.k = 2, .a = rq("1/2"), .c = rq("7/2")}},
      {"meixner2", {.k = 3, .a = rq("-4/3"), .c = rq("11/2")}},
      {"krawtchouk", {.k = 2, .a = rq("1/2"), .N = rq("15/2")}},
      {"krawtchouk", {.k = 1, .a = 2, .N = rq("-1/3")}},
      {"hahn1", {.k = 1, .c = hc, .N = hN, .alpha = ha}},
      {"hahn1", {.k = 2, .c = hc, .N = hN, .alpha = ha}},
      {"hahn2", {.k = 2, .c = hc, .N = hN, .alpha = ha}},
      {"laguerre", {.alpha = 2, .K = 1}},
      {"laguerre", {.alpha = 3, .M = rq("1/3")}},
      {"jacobi", {.alpha = rq("1/2"), .beta = 2, .K = 1}},
      {"jacobi", {.alpha = rq("3/2"), .beta = 1, .M = 2}},
  };
}
} // namespace

TEST_CASE("named constructions satisfy the eigen identity and are orthogonal") {
  for (const auto& s : samples()) {
    CAPTURE(s.theorem);
    auto nc = named(s.theorem, s.p, 10);
    auto rep = verify_eigen(nc.kc, 10);
    CHECK(rep.ok());
    if (rep.expected_genre) CHECK(rep.genre == rep.expected_genre);
    std::vector<Polynomial> qs;
    for (int n = 0; n <= 6; ++n) qs.push_back(nc.kc.q(n));
    CHECK(gram_check(nc.measure, qs).ok());
  }
}

TEST_CASE("Charlier worked values") {
  auto nc = named("charlier", {.k = 2, .a = 1}, 8);
  CHECK(nc.kc.beta(1) == 3);
  CHECK(nc.kc.q(1) == Polynomial{2, 1});
  CHECK(nc.kc.lambda(0) == rq("-1/6"));
  CHECK(nc.errata.empty());
}

TEST_CASE("Charlier extreme coefficients of the operator") {
  // With u1, u2 the leading coefficients of P1, P2 and f(x) = x the Sh_{-1} coefficient of the
  // second-order operator: Sh_{-k-1} carries f(x-1)...f(x-k)(u1 f(x) - u2), Sh_{k+1} carries u1 a^{k+1}.
  const Polynomial x = Polynomial::x();
  for (auto [k, a] : {std::pair{2, Rational(1)}, std::pair{1, rq("1/2")}, std::pair{3, Rational(3)}}) {
    auto nc = named("charlier", {.k = k, .a = a}, 4);
    const auto& D = nc.kc.Dq->difference();
    const Rational u1 = nc.kc.P1->leading(), u2 = nc.kc.P2.leading();
    Polynomial lo = u1 * x - Polynomial(u2);
    for (int i = 1; i <= k; ++i) lo *= x - Polynomial(i);
    CHECK(D.coeff(-k - 1) == lo);
    CHECK(D.coeff(k + 1) == Polynomial(u1 * power(a, k + 1)));
  }
}

TEST_CASE("errata notes and printed variants") {
  auto m = named("meixner1", {.k = 2, .a = rq("1/2"), .c = rq("7/2")}, 6);
  CHECK(m.errata.size() == 1);

  const NamedParams kp{.k = 2, .a = rq("1/2"), .N = rq("15/2")};
  auto kr = named("krawtchouk", kp, 8);
  CHECK(kr.errata.size() == 1);
  KrallConstruction printed = kr.kc;
  Sequence g = kr.kc.gamma;
  const Rational a = kp.a;
  printed.beta = [g, a](int n) { return Rational(n / (1 + a) * g(n + 1) / g(n)); };
  CHECK_FALSE(verify_eigen(printed, 8).ok());
  std::vector<Polynomial> qs;
  for (int n = 0; n <= 6; ++n) qs.push_back(printed.q(n));
  CHECK_FALSE(gram_check(kr.measure, qs).ok());

  const NamedParams hp{.k = 2, .c = rq("9/2"), .N = rq("11/2"), .alpha = rq("37/3")};
  auto h2 = named("hahn2", hp, 6);
  CHECK(h2.errata.size() == 1);
  const auto& D = h2.kc.family->op();
  Operator plus = Rational(1, 2) * poly_of_op(*h2.kc.P1, D) +
                  compose(catalog_entry(h2.kc.family->spec(), 2).closed_form, poly_of_op(h2.kc.P2, D));
  CHECK_FALSE(verify_eigen(h2.kc, plus, h2.kc.lambda, 6).ok());
}

TEST_CASE("hypotheses") {
  auto expect_hyp = [](const std::string& th, const NamedParams& p, const std::string& param) {
    try {
      named(th, p, 6);
      FAIL("expected HypothesisError for " << th);
    } catch (const HypothesisError& e) {
      CHECK(e.theorem() == th);
      CHECK(e.parameter() == param);
    }
  };
  expect_hyp("meixner1", {.k = 2, .a = rq("1/2"), .c = 3}, "c");
  expect_hyp("krawtchouk", {.k = 2, .a = rq("1/2"), .N = -1}, "N");
  expect_hyp("hahn1", {.k = 2, .c = 3, .N = rq("11/2"), .alpha = rq("37/3")}, "c-k-1");
  expect_hyp("laguerre", {.alpha = 0, .K = 1}, "alpha");
  CHECK_THROWS_AS(named("bessel", {}, 4), InvalidArgument);
  CHECK_THROWS_AS(named("charlier", {.k = 0, .a = 1}, 4), InvalidArgument);
}

TEST_CASE("non-integer Koornwinder parameters give orthogonality without an operator") {
  auto lg = named("laguerre", {.alpha = rq("1/2"), .K = 1}, 8);
  CHECK_FALSE(lg.kc.Dq.has_value());
  CHECK_THROWS_AS(lg.kc.lambda(1), InvalidArgument);
  std::vector<Polynomial> qs;
  for (int n = 0; n <= 8; ++n) qs.push_back(lg.kc.q(n));
  CHECK(gram_check(lg.measure, qs).ok());
  CHECK_THROWS_AS(named("laguerre", {.alpha = rq("1/2"), .M = 1}, 4), InvalidArgument);
}

TEST_CASE("Koornwinder eigenvalue concordance") {
  for (int al = 1; al <= 3; ++al) {
    const Rational M = rq("2/5");
    auto nc = named("laguerre", {.alpha = al, .M = M}, 10);
    for (int n = 0; n <= 10; ++n) CHECK(nc.kc.lambda(n) == laguerre_koekoek_eigenvalue(al, M, n));
  }
  for (int be = 1; be <= 2; ++be) {
    const Rational al = rq("1/2"), M = rq("3/7");
    auto nc = named("jacobi", {.alpha = al, .beta = be, .M = M}, 10);
    for (int n = 0; n <= 10; ++n) CHECK(nc.kc.lambda(n) == jacobi_zhedanov_eigenvalue(al, be, M, n));
  }
}

TEST_CASE("inner-product lemmas") {
  auto ch = ip_lemma_check("chxx", {.k = 2, .a = 1}, 8);
  CHECK(ch.ok());
  CHECK(ch.rows[0].lhs == 1);
  CHECK(ch.rows[0].rhs == 1);
  // -c_2^{-1}(-2)/c_2^{-1}(-1) with c_2^{-1}(x) = (x^2+x+1)/2
  CHECK(ch.rows[1].lhs == -3);

  const NamedParams mp{.k = 2, .a = rq("1/2"), .c = rq("7/2")};
  CHECK(ip_lemma_check("lme1x", mp, 8).ok());
  CHECK(ip_lemma_check("meixner2", mp, 8).ok());
  CHECK(ip_lemma_check("krawtchouk", {.k = 2, .a = rq("1/2"), .N = rq("15/2")}, 8).ok());
  const NamedParams hp{.k = 2, .c = rq("9/2"), .N = rq("11/2"), .alpha = rq("37/3")};
  CHECK(ip_lemma_check("hahn1", hp, 6).ok());
  CHECK(ip_lemma_check("hahn2", hp, 6).ok());
  CHECK_THROWS_AS(ip_lemma_check("nosuch", hp, 2), InvalidArgument);
}
