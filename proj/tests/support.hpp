#pragma once

#include "krall/polynomial.hpp"

#include <random>

namespace krall::test {

inline Rational rq(const char* s) { return parse_rational(s); }

inline Rational random_rational(std::mt19937& g, int num = 9, int den = 4) {
  std::uniform_int_distribution<int> n(-num, num), d(1, den);
  return frac(n(g), d(g));
}

inline Polynomial random_poly(std::mt19937& g, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(g));
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

} // namespace krall::test
