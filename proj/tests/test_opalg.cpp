#include "krall/opalg.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace krall;

namespace {
const Polynomial x = Polynomial::x();
const Polynomial one(1);

DifferenceOperator sh(int l, const Polynomial& f = 1) { return DifferenceOperator::shift(l, f); }

// D_a = x Sh_{-1} - (x+a) Sh_0 + a Sh_1
DifferenceOperator charlier_op(const Rational& a) {
  DifferenceOperator D = sh(-1, x);
  D += sh(0, -(x + Polynomial(a)));
  D += sh(1, a);
  return D;
}
} // namespace

TEST_CASE("apply") {
  CHECK(DifferenceOperator::backward().apply(Polynomial(5)).is_zero());
  CHECK(charlier_op(1).apply(x - one) == -(x - one));
  DifferentialOperator L({Polynomial(), one - x, x});
  CHECK(L.apply(one).is_zero());
  CHECK(Operator(L).apply(x) == one - x);
}

TEST_CASE("apply agrees with pointwise evaluation") {
  std::mt19937 g(3);
  for (int t = 0; t < 20; ++t) {
    Polynomial f = test::random_poly(g, 2), h = test::random_poly(g, 1), p = test::random_poly(g, 6);
    DifferenceOperator D = sh(-2, f);
    D += sh(3, h);
    for (int i = -3; i <= 3; ++i) {
      Rational x0 = frac(i, 2);
      CHECK(D.apply(p)(x0) == f(x0) * p(x0 - 2) + h(x0) * p(x0 + 3));
    }
  }
}

TEST_CASE("compose") {
  CHECK(sh(1).compose(sh(-1)) == DifferenceOperator::identity());
  DifferenceOperator expect = sh(1);
  expect += sh(0, -2);
  expect += sh(-1);
  CHECK(DifferenceOperator::forward().compose(DifferenceOperator::backward()) == expect);
  CHECK(DifferenceOperator::backward().compose(DifferenceOperator::forward()) == expect);

  DifferentialOperator leib = DifferentialOperator::d().compose(DifferentialOperator({x}));
  CHECK(leib == DifferentialOperator({one, x}));
  CHECK_THROWS_AS(compose(Operator(sh(1)), Operator(DifferentialOperator::d())), InvalidArgument);
}

TEST_CASE("compose is application composition") {
  std::mt19937 g(17);
  for (int t = 0; t < 20; ++t) {
    DifferenceOperator A = sh(-1, test::random_poly(g, 1));
    A += sh(2, test::random_poly(g, 2));
    DifferenceOperator B = sh(0, test::random_poly(g, 1));
    B += sh(1, test::random_poly(g, 1));
    Polynomial p = test::random_poly(g, 5);
    CHECK(A.compose(B).apply(p) == A.apply(B.apply(p)));

    DifferentialOperator C({test::random_poly(g, 0), test::random_poly(g, 1), test::random_poly(g, 2)});
    DifferentialOperator E({Polynomial(), test::random_poly(g, 1), test::random_poly(g, 2)});
    CHECK(C.compose(E).apply(p) == C.apply(E.apply(p)));
  }
}

TEST_CASE("poly_of_op and op_linear") {
  Operator D = charlier_op(Rational(1, 3));
  CHECK(poly_of_op(x, D) == D);
  CHECK(poly_of_op(Polynomial(7), D) == Rational(7) * Operator::identity(OperatorKind::difference));
  Operator delta = DifferenceOperator::forward();
  CHECK(poly_of_op(x * x, delta).apply(binom_poly(2)) == one);
  Operator lin = op_linear({{2, D}, {-1, Operator::identity(OperatorKind::difference)}});
  CHECK(lin.apply(x) == Rational(2) * D.apply(x) - x);
}

TEST_CASE("genre_order") {
  CHECK(genre_order(charlier_op(2)) == Genre{-1, 1, 2});
  CHECK(genre_order(sh(3)) == Genre{3, 3, 0});
  CHECK_THROWS_AS(genre_order(DifferenceOperator()), InvalidArgument);
  DifferenceOperator cancel = sh(1);
  cancel += sh(1, -1);
  CHECK(cancel.is_zero());
}

TEST_CASE("differential algebra membership") {
  CHECK(DifferentialOperator({Polynomial(), one - x, x}).in_algebra());
  CHECK_FALSE(DifferentialOperator({x}).in_algebra());
}

TEST_CASE("operator JSON round-trip") {
  std::mt19937 g(23);
  for (int t = 0; t < 10; ++t) {
    DifferenceOperator A = sh(-2, test::random_poly(g, 3));
    A += sh(1, test::random_poly(g, 2));
    Operator a = A;
    auto j = to_json(a);
    CHECK(operator_from_json(j) == a);
    CHECK(to_json(operator_from_json(j)).dump() == j.dump());
    Operator b = DifferentialOperator({test::random_poly(g, 0), test::random_poly(g, 1)});
    CHECK(operator_from_json(to_json(b)) == b);
  }
  CHECK(rational_to_json(3) == "3/1");
  CHECK(rational_from_json(nlohmann::json(4)) == 4);
  CHECK(rational_from_json(nlohmann::json("-2/6")) == Rational(-1, 3));
}
