#include "krall/rational.hpp"

#include <cctype>

namespace krall {

HypothesisError::HypothesisError(std::string theorem, std::string parameter, long n,
                                 const std::string& what)
    : std::runtime_error(what), theorem_(std::move(theorem)), parameter_(std::move(parameter)), n_(n) {}

Rational parse_rational(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  std::string t = s.substr(b, e - b);
  if (t.empty()) throw InvalidArgument("empty rational");
  std::size_t slash = t.find('/');
  auto valid_int = [](const std::string& u, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !u.empty() && (u[0] == '-' || u[0] == '+')) i = 1;
    if (i >= u.size()) return false;
    for (; i < u.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? t : t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InvalidArgument("not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InvalidArgument("zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_fraction(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display(const Rational& r) { return r.get_str(); }

Rational frac(long p, long q) {
  if (q == 0) throw InvalidArgument("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational pochhammer(const Rational& a, long j) {
  if (j < 0) throw InvalidArgument("pochhammer with negative length");
  Rational r = 1;
  for (long i = 0; i < j; ++i) r *= a + i;
  return r;
}

Rational power(const Rational& a, long e) {
  if (e < 0) {
    if (a == 0) throw DegeneracyError("zero to a negative power");
    return 1 / power(a, -e);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw InvalidArgument("expected an integer, got " + r.get_str());
  return r.get_num().get_si();
}

} // namespace krall
