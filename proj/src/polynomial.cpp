#include "krall/polynomial.hpp"

#include <sstream>

namespace krall {

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::monomial(int degree, const Rational& c) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::operator()(const Rational& x0) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x0 + *it;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= r;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

Polynomial scale(const Polynomial& p, const Rational& r) { return p * r; }

Rational eval_at(const Polynomial& p, const Rational& x0) { return p(x0); }

Polynomial compose(const Polynomial& p, const Polynomial& q) {
  Polynomial r;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * q + Polynomial(*it);
  return r;
}

Polynomial shift_arg(const Polynomial& p, const Rational& l) {
  // Taylor shift by repeated synthetic division.
  std::vector<Rational> c = p.coeffs();
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) c[j] += l * c[j + 1];
  return Polynomial(std::move(c));
}

Polynomial affine_arg(const Polynomial& p, const Rational& a, const Rational& b) {
  return compose(p, Polynomial{b, a});
}

Polynomial derivative(const Polynomial& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> v(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(v));
}

Polynomial power(const Polynomial& p, int e) {
  Polynomial r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Polynomial falling_of(const Polynomial& e, int j) {
  Polynomial r = 1;
  for (int i = 0; i < j; ++i) r *= e - Polynomial(i);
  return r;
}

Polynomial pochhammer_of(const Polynomial& e, int j) {
  Polynomial r = 1;
  for (int i = 0; i < j; ++i) r *= e + Polynomial(i);
  return r;
}

Polynomial binom_of(const Polynomial& e, int j) { return falling_of(e, j) * (1 / factorial(j)); }

Polynomial binom_poly(int j) { return binom_of(Polynomial::x(), j); }

Polynomial pochhammer_poly(const Rational& offset, int j) {
  return pochhammer_of(Polynomial{offset, Rational(1)}, j);
}

Polynomial antidifference(const Polynomial& P2, const Rational& d) {
  if (d == 0) throw InvalidArgument("antidifference: step d must be nonzero");
  if (P2.is_zero()) return {};
  // Build in the basis b_m(x) = x(x-d)...(x-(m-1)d)/(d^m m!),
  // where b_m(x+d) - b_m(x) = b_{m-1}(x).
  const int n = P2.degree();
  std::vector<Polynomial> b(n + 2);
  b[0] = 1;
  for (int m = 1; m <= n + 1; ++m)
    b[m] = b[m - 1] * Polynomial{-d * (m - 1), Rational(1)} * (1 / (d * m));
  auto w = expand_graded(P2, [&](int m) -> const Polynomial& { return b[m]; });
  Polynomial P1;
  for (int m = 0; m <= n; ++m)
    if (w[m] != 0) P1 += b[m + 1] * w[m];
  return P1;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

} // namespace krall
