#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace krall {

using Rational = mpq_class;

// Thrown for malformed input: zero steps, kind mismatches, bad strings.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A defining formula hit a zero denominator (or a zero Hankel determinant).
class DegeneracyError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A theorem hypothesis fails for a concrete n.
class HypothesisError : public std::runtime_error {
public:
  HypothesisError(std::string theorem, std::string parameter, long n, const std::string& what);
  const std::string& theorem() const { return theorem_; }
  const std::string& parameter() const { return parameter_; }
  long n() const { return n_; }

private:
  std::string theorem_;
  std::string parameter_;
  long n_;
};

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& s);

// Always "num/den", e.g. "3/1", "-1/2". Used for JSON.
std::string to_fraction(const Rational& r);

// "3", "-1/2". Used for human output.
std::string to_display(const Rational& r);

// p/q in canonical form; throws InvalidArgument on q = 0.
Rational frac(long p, long q);
Rational factorial(long n);
// Rising factorial (a)_j, (a)_0 = 1.
Rational pochhammer(const Rational& a, long j);
Rational power(const Rational& a, long e);
bool is_integer(const Rational& r);
// Integer value; throws InvalidArgument when r is not an integer or does not fit.
long to_long(const Rational& r);

} // namespace krall
