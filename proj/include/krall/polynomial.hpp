#pragma once

#include "krall/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace krall {

// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
// trailing zeros are always stripped, so the zero polynomial has no coefficients.
class Polynomial {
public:
  static constexpr int zero_degree = -1;

  Polynomial() = default;
  Polynomial(const Rational& c);
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial x();
  static Polynomial monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x0) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& r);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& r) { return a *= r; }
  friend Polynomial operator*(const Rational& r, Polynomial a) { return a *= r; }
  friend Polynomial operator*(Polynomial a, long r) { return a *= Rational(r); }
  friend Polynomial operator*(long r, Polynomial a) { return a *= Rational(r); }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial scale(const Polynomial& p, const Rational& r);
Rational eval_at(const Polynomial& p, const Rational& x0);
// p(x+l)
Polynomial shift_arg(const Polynomial& p, const Rational& l);
// p(a*x + b)
Polynomial affine_arg(const Polynomial& p, const Rational& a, const Rational& b);
// p(q(x))
Polynomial compose(const Polynomial& p, const Polynomial& q);
Polynomial derivative(const Polynomial& p);
Polynomial power(const Polynomial& p, int e);

// x(x-1)...(x-j+1)/j!
Polynomial binom_poly(int j);
// binom(e, j) = e(e-1)...(e-j+1)/j! for a polynomial argument e
Polynomial binom_of(const Polynomial& e, int j);
// (x+offset)_j
Polynomial pochhammer_poly(const Rational& offset, int j);
// (e)_j for a polynomial argument e
Polynomial pochhammer_of(const Polynomial& e, int j);
// e(e-1)...(e-j+1)
Polynomial falling_of(const Polynomial& e, int j);

// Unique P1 with P1(0) = 0 and P1(x+d) - P1(x) = P2(x).
Polynomial antidifference(const Polynomial& P2, const Rational& d);

// Coefficients of p in a degree-graded basis b(0), b(1), ... (deg b(m) = m).
template <class Basis>
std::vector<Rational> expand_graded(const Polynomial& p, Basis&& basis);

std::string to_string(const Polynomial& p);

} // namespace krall

#include "krall/polynomial_impl.hpp"
