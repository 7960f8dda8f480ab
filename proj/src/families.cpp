#include "krall/families.hpp"

#include <mutex>
#include <sstream>

namespace krall {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Polynomial X = Polynomial::x();

Polynomial lin(const Rational& c0, const Rational& c1) { return Polynomial{c0, c1}; }

bool negative_integer(const Rational& r) { return is_integer(r) && r < 0; }

std::string param_list(const FamilySpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Charlier& f) { os << "a=" << f.a; },
                 [&](const Meixner& f) { os << "a=" << f.a << ", c=" << f.c; },
                 [&](const Krawtchouk& f) { os << "a=" << f.a << ", N=" << f.N; },
                 [&](const Hahn& f) { os << "alpha=" << f.alpha << ", c=" << f.c << ", N=" << f.N; },
                 [&](const Laguerre& f) { os << "alpha=" << f.alpha; },
                 [&](const Jacobi& f) { os << "alpha=" << f.alpha << ", beta=" << f.beta; },
             },
             spec);
  return os.str();
}

Polynomial charlier_sum(const Charlier& f, int n) {
  Polynomial s;
  for (int j = 0; j <= n; ++j) {
    Rational c = power(-f.a, n - j) * factorial(n) / (factorial(j) * factorial(n - j));
    s += falling_of(X, j) * c;
  }
  return s * (1 / factorial(n));
}

Polynomial meixner_sum(const Meixner& f, int n) {
  Polynomial s;
  for (int j = 0; j <= n; ++j)
    s += binom_of(X, j) * binom_of(lin(-f.c, -1), n - j) * power(f.a, -j);
  return n % 2 ? -s : s;
}

Polynomial krawtchouk_sum(const Krawtchouk& f, int n) {
  Polynomial s;
  Rational r = (1 + f.a) / f.a;
  for (int j = 0; j <= n; ++j) {
    Rational c = ((n + j) % 2 ? -1 : 1) * power(r, j - n) * pochhammer(Rational(-n), j) *
                 pochhammer(f.N - n, n - j) / factorial(j);
    if (c != 0) s += pochhammer_of(-X, j) * c;
  }
  return s * (1 / factorial(n));
}

Polynomial hahn_sum(const Hahn& f, int n) {
  Polynomial s;
  for (int j = 0; j <= n; ++j) {
    Rational den = pochhammer(n + f.alpha + f.c - f.N + j, n - j) * factorial(j);
    if (den == 0)
      throw DegeneracyError("hahn(" + param_list(f) + "): factor (n+alpha+c-N+j)_{n-j} vanishes at n=" +
                            std::to_string(n) + ", j=" + std::to_string(j));
    Rational c = pochhammer(Rational(-n), j) * pochhammer(1 - f.N + j, n - j) * pochhammer(f.c + j, n - j) / den;
    if (c != 0) s += pochhammer_of(-X, j) * c;
  }
  return s;
}

Polynomial laguerre_sum(const Laguerre& f, int n) {
  Polynomial s;
  for (int j = 0; j <= n; ++j)
    s += power(-X, j) * (pochhammer(f.alpha + j + 1, n - j) / (factorial(j) * factorial(n - j)));
  return s;
}

Polynomial jacobi_sum(const Jacobi& f, int n) {
  Polynomial s;
  for (int j = 0; j <= n; ++j) {
    Rational c = pochhammer(n + f.alpha - j + 1, j) / factorial(j) * pochhammer(f.beta + j + 1, n - j) /
                 factorial(n - j);
    if (c != 0) s += power(lin(-1, 1), n - j) * power(lin(1, 1), j) * c;
  }
  return s * power(Rational(1, 2), n);
}

} // namespace

std::string family_name(const FamilySpec& spec) {
  static const char* names[] = {"charlier", "meixner", "krawtchouk", "hahn", "laguerre", "jacobi"};
  return names[spec.index()];
}

std::string describe(const FamilySpec& spec) { return family_name(spec) + "(" + param_list(spec) + ")"; }

nlohmann::json family_to_json(const FamilySpec& spec) {
  nlohmann::json j{{"family", family_name(spec)}};
  std::visit(overloaded{
                 [&](const Charlier& f) { j["a"] = to_fraction(f.a); },
                 [&](const Meixner& f) { j["a"] = to_fraction(f.a), j["c"] = to_fraction(f.c); },
                 [&](const Krawtchouk& f) { j["a"] = to_fraction(f.a), j["N"] = to_fraction(f.N); },
                 [&](const Hahn& f) {
                   j["alpha"] = to_fraction(f.alpha), j["c"] = to_fraction(f.c), j["N"] = to_fraction(f.N);
                 },
                 [&](const Laguerre& f) { j["alpha"] = to_fraction(f.alpha); },
                 [&](const Jacobi& f) { j["alpha"] = to_fraction(f.alpha), j["beta"] = to_fraction(f.beta); },
             },
             spec);
  return j;
}

FamilySpec family_from_json(const nlohmann::json& j) {
  try {
    auto r = [&](const char* k) { return rational_from_json(j.at(k)); };
    const std::string f = j.at("family").get<std::string>();
    if (f == "charlier") return Charlier{r("a")};
    if (f == "meixner") return Meixner{r("a"), r("c")};
    if (f == "krawtchouk") return Krawtchouk{r("a"), r("N")};
    if (f == "hahn") return Hahn{r("alpha"), r("c"), r("N")};
    if (f == "laguerre") return Laguerre{r("alpha")};
    if (f == "jacobi") return Jacobi{r("alpha"), r("beta")};
    throw InvalidArgument("unknown family '" + f + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed family JSON: ") + e.what());
  }
}

void check_admissible(const FamilySpec& spec) {
  auto fail = [&](const std::string& why) { throw InvalidArgument(describe(spec) + ": " + why); };
  std::visit(overloaded{
                 [&](const Charlier& f) {
                   if (f.a == 0) fail("a must be nonzero");
                 },
                 [&](const Meixner& f) {
                   if (f.a == 0 || f.a == 1) fail("a must not be 0 or 1");
                 },
                 [&](const Krawtchouk& f) {
                   if (f.a == 0 || f.a == -1) fail("a must not be 0 or -1");
                 },
                 [&](const Hahn&) {
                   // checked per n in the defining sum
                 },
                 [&](const Laguerre& f) {
                   if (negative_integer(f.alpha)) fail("alpha must not be a negative integer");
                 },
                 [&](const Jacobi& f) {
                   if (negative_integer(f.alpha) || negative_integer(f.beta) || negative_integer(f.alpha + f.beta))
                     fail("alpha, beta, alpha+beta must not be negative integers");
                 },
             },
             spec);
}

OperatorKind family_kind(const FamilySpec& spec) {
  return std::holds_alternative<Laguerre>(spec) || std::holds_alternative<Jacobi>(spec) ? OperatorKind::differential
                                                                                       : OperatorKind::difference;
}

Polynomial classical_poly(const FamilySpec& spec, int n) {
  if (n < 0) return {};
  return std::visit(overloaded{
                        [&](const Charlier& f) { return charlier_sum(f, n); },
                        [&](const Meixner& f) { return meixner_sum(f, n); },
                        [&](const Krawtchouk& f) { return krawtchouk_sum(f, n); },
                        [&](const Hahn& f) { return hahn_sum(f, n); },
                        [&](const Laguerre& f) { return laguerre_sum(f, n); },
                        [&](const Jacobi& f) { return jacobi_sum(f, n); },
                    },
                    spec);
}

Polynomial eigen_solve_poly(const FamilySpec& spec, int n) {
  if (n < 0) return {};
  const Operator D = second_order_op(spec);
  std::vector<Polynomial> img(n + 1);
  for (int m = 0; m <= n; ++m) {
    img[m] = D.apply(Polynomial::monomial(m));
    if (img[m].degree() > m) throw DegeneracyError("second-order operator raises degree");
  }
  const Rational th = theta(spec, n);
  std::vector<Rational> c(n + 1);
  c[n] = classical_poly(spec, n).leading();
  for (int i = n - 1; i >= 0; --i) {
    Rational diag = img[i].coeff(i) - th;
    if (diag == 0)
      throw DegeneracyError(describe(spec) + ": theta_" + std::to_string(i) + " = theta_" + std::to_string(n));
    Rational s = 0;
    for (int m = i + 1; m <= n; ++m) s += img[m].coeff(i) * c[m];
    c[i] = -s / diag;
  }
  return Polynomial(std::move(c));
}

Rational theta(const FamilySpec& spec, int n) {
  return std::visit(overloaded{
                        [&](const Charlier&) { return Rational(-n); },
                        [&](const Meixner& f) { return Rational(n * (f.a - 1)); },
                        [&](const Krawtchouk& f) { return Rational(-n * (1 + f.a)); },
                        [&](const Hahn& f) { return Rational((n + 1) * (n + f.alpha + f.c - f.N - 1)); },
                        [&](const Laguerre&) { return Rational(-n); },
                        [&](const Jacobi& f) { return Rational(-n * (n + f.alpha + f.beta + 1)); },
                    },
                    spec);
}

bool has_quadratic_spectrum(const FamilySpec& spec) {
  return std::holds_alternative<Hahn>(spec) || std::holds_alternative<Jacobi>(spec);
}

Rational sigma(const FamilySpec& spec, int n) {
  if (const auto* h = std::get_if<Hahn>(&spec)) return 2 * n + h->alpha + h->c - h->N - 2;
  if (const auto* j = std::get_if<Jacobi>(&spec)) return 2 * n + j->alpha + j->beta - 1;
  throw InvalidArgument(family_name(spec) + " has no sigma sequence");
}

Operator second_order_op(const FamilySpec& spec) {
  check_admissible(spec);
  return std::visit(
      overloaded{
          [&](const Charlier& f) -> Operator {
            return DifferenceOperator({{-1, X}, {0, lin(-f.a, -1)}, {1, Polynomial(f.a)}});
          },
          [&](const Meixner& f) -> Operator {
            return DifferenceOperator(
                {{-1, X}, {0, lin(-f.a * f.c, -(1 + f.a))}, {1, lin(f.a * f.c, f.a)}});
          },
          [&](const Krawtchouk& f) -> Operator {
            Polynomial s1 = lin(1 - f.N, 1) * Rational(-f.a); // -a(x-N+1)
            return DifferenceOperator({{-1, X}, {0, -(X + s1)}, {1, s1}});
          },
          [&](const Hahn& f) -> Operator {
            Polynomial m1 = X * lin(-f.alpha, 1);
            Polynomial p1 = lin(f.c, 1) * lin(1 - f.N, 1);
            Polynomial z{Rational(f.alpha + f.N * (f.c - 1) - 1), Rational(f.alpha - f.c + f.N - 1), Rational(-2)};
            return DifferenceOperator({{-1, m1}, {0, z}, {1, p1}});
          },
          [&](const Laguerre& f) -> Operator {
            return DifferentialOperator({Polynomial(), lin(f.alpha + 1, -1), X});
          },
          [&](const Jacobi& f) -> Operator {
            return DifferentialOperator(
                {Polynomial(), lin(f.beta - f.alpha, -(f.alpha + f.beta + 2)), Polynomial{1, 0, -1}});
          },
      },
      spec);
}

Ttr ttr_by_expansion(const FamilySpec& spec, int n) {
  std::vector<Polynomial> p;
  for (int m = 0; m <= n + 1; ++m) p.push_back(classical_poly(spec, m));
  auto w = expand_graded(X * p[n], [&](int m) -> const Polynomial& { return p[m]; });
  w.resize(n + 2);
  for (int m = 0; m < n - 1; ++m)
    if (w[m] != 0) throw DegeneracyError(describe(spec) + ": x p_n is not a three-term combination");
  return {w[n + 1], w[n], n >= 1 ? w[n - 1] : Rational(0)};
}

Ttr ttr_coeffs(const FamilySpec& spec, int n) {
  auto nz = [&](const Rational& d) {
    if (d == 0) throw DegeneracyError(describe(spec) + ": TTR denominator vanishes at n=" + std::to_string(n));
    return d;
  };
  if (const auto* f = std::get_if<Charlier>(&spec)) return {n + 1, n + f->a, n >= 1 ? f->a : Rational(0)};
  if (const auto* f = std::get_if<Meixner>(&spec)) {
    Rational d = nz(f->a - 1);
    return {f->a * (n + 1) / d, -((f->a + 1) * n + f->a * f->c) / d, n >= 1 ? Rational((n + f->c - 1) / d) : 0};
  }
  if (const auto* f = std::get_if<Hahn>(&spec)) {
    const Rational A = f->alpha + f->c - f->N;
    Rational b = (f->c * (f->N - 1) * (A - 1) + n * (f->alpha - f->c + f->N - 1) * (n + A)) /
                 nz((2 * n + A - 1) * (2 * n + A + 1));
    Rational c = 0;
    if (n >= 1)
      c = n * (f->N - n) * (n + A - 1) * (n + f->alpha - f->N) * (n + f->c - 1) * (n + f->alpha + f->c - 1) /
          nz((2 * n + A - 2) * (2 * n + A - 1) * (2 * n + A - 1) * (2 * n + A));
    return {1, b, c};
  }
  return ttr_by_expansion(spec, n);
}

Family::Family(FamilySpec spec) : spec_(std::move(spec)), op_(second_order_op(spec_)) {}

const Polynomial& Family::p(int n) const {
  if (n < 0) throw InvalidArgument("negative degree");
  {
    std::shared_lock lk(mu_);
    if (n < static_cast<int>(memo_.size())) return memo_[n];
  }
  std::unique_lock lk(mu_);
  while (static_cast<int>(memo_.size()) <= n) memo_.push_back(classical_poly(spec_, static_cast<int>(memo_.size())));
  return memo_[n];
}

std::vector<Rational> Family::expand(const Polynomial& q) const {
  return expand_graded(q, [&](int m) -> const Polynomial& { return p(m); });
}

FamilyPtr make_family(const FamilySpec& spec) { return std::make_shared<const Family>(spec); }

} // namespace krall
