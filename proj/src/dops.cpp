#include "krall/dops.hpp"

#include "krall/parallel.hpp"

namespace krall {

namespace {

const Polynomial X = Polynomial::x();

Operator diff_op(const Polynomial& f, const DifferenceOperator& base) {
  return DifferenceOperator::shift(0, f).compose(base);
}

Sequence constant(const Rational& r) {
  return [r](int) { return r; };
}

DOperatorSpec type1(const FamilySpec& f, Sequence eps, Operator closed, std::string label) {
  return {DopKind::type1, std::move(eps), nullptr, std::move(closed), f, std::move(label)};
}

DOperatorSpec type2(const FamilySpec& f, Sequence eps, Sequence sigma, Operator closed, std::string label) {
  return {DopKind::type2, std::move(eps), std::move(sigma), std::move(closed), f, std::move(label)};
}

std::vector<DOperatorSpec> hahn_catalog(const FamilySpec& spec, const Hahn& h) {
  const Rational al = h.alpha, c = h.c, N = h.N, A = al + c - N;
  auto den = [A, spec](int n) {
    Rational d = (2 * n + A - 1) * (2 * n + A - 2);
    if (d == 0) throw DegeneracyError(describe(spec) + ": (2n+A-1)(2n+A-2) vanishes at n=" + std::to_string(n));
    return d;
  };
  Sequence sp = [A](int n) { return Rational(2 * n + A - 2); };
  Sequence sm = [A](int n) { return Rational(-(2 * n + A - 2)); };
  const auto Delta = DifferenceOperator::forward();
  const auto Nabla = DifferenceOperator::backward();
  const Operator halfA = Rational(A / 2) * Operator::identity(OperatorKind::difference);

  std::vector<DOperatorSpec> out;
  out.push_back(type2(
      spec, [=](int n) { return Rational(n * (N - n) * (n + al - N) / den(n)); }, sp,
      diff_op(Polynomial{N - 1, Rational(-1)}, Delta) - halfA, "hahn-D1"));
  out.push_back(type2(
      spec, [=](int n) { return Rational(n * (n + al - N) * (n + al + c - 1) / den(n)); }, sm,
      diff_op(Polynomial{-al, Rational(1)}, Nabla) + halfA, "hahn-D2"));
  out.push_back(type2(
      spec, [=](int n) { return Rational(-n * (N - n) * (n + c - 1) / den(n)); }, sm, diff_op(X, Nabla) + halfA,
      "hahn-D3"));
  out.push_back(type2(
      spec, [=](int n) { return Rational(-n * (n + c - 1) * (n + al + c - 1) / den(n)); }, sp,
      diff_op(Polynomial{-c, Rational(-1)}, Delta) - halfA, "hahn-D4"));
  return out;
}

std::vector<DOperatorSpec> jacobi_catalog(const FamilySpec& spec, const Jacobi& f) {
  const Rational al = f.alpha, be = f.beta;
  auto den = [=](int n) {
    Rational d = n + al + be;
    if (d == 0) throw DegeneracyError(describe(spec) + ": n+alpha+beta vanishes at n=" + std::to_string(n));
    return d;
  };
  const Operator id = Operator::identity(OperatorKind::differential);
  const Rational h = (al + be + 1) / 2;
  std::vector<DOperatorSpec> out;
  out.push_back(type2(
      spec, [=](int n) { return Rational((n + al) / den(n)); }, [=](int n) { return Rational(2 * n + al + be - 1); },
      Operator(DifferentialOperator::d(1, Polynomial{1, -1})) - h * id, "jacobi-D1"));
  out.push_back(type2(
      spec, [=](int n) { return Rational(-(n + be) / den(n)); },
      [=](int n) { return Rational(-(2 * n + al + be - 1)); },
      Operator(DifferentialOperator::d(1, Polynomial{1, 1})) + h * id, "jacobi-D2"));
  return out;
}

} // namespace

DOperatorSpec negated(const DOperatorSpec& d) {
  if (d.kind != DopKind::type2) throw InvalidArgument("only type-2 D-operators can be negated");
  DOperatorSpec r = d;
  Sequence s = d.sigma;
  r.sigma = [s](int n) { return Rational(-s(n)); };
  r.closed_form = Rational(-1) * d.closed_form;
  r.label = "-" + d.label;
  return r;
}

Polynomial dop_series_apply(const DOperatorSpec& d, int n, const Basis& basis) {
  Polynomial out;
  if (d.kind == DopKind::type2) out = basis(n) * Rational(-d.sigma(n + 1) / 2);
  Rational prod = 1;
  for (int j = 1; j <= n; ++j) {
    prod *= d.eps(n - j + 1);
    if (prod == 0) break;
    Rational c = j % 2 ? prod : Rational(-prod);
    if (d.kind == DopKind::type2) c *= d.sigma(n + 1 - j);
    out += basis(n - j) * c;
  }
  return out;
}

Polynomial dop_series_apply(const DOperatorSpec& d, int n) {
  auto fam = make_family(d.family);
  return dop_series_apply(d, n, [&](int m) { return fam->p(m); });
}

std::vector<DOperatorSpec> catalog(const FamilySpec& spec) {
  check_admissible(spec);
  const auto Delta = DifferenceOperator::forward();
  const auto Nabla = DifferenceOperator::backward();
  if (std::holds_alternative<Charlier>(spec)) return {type1(spec, constant(1), Nabla, "charlier-nabla")};
  if (const auto* f = std::get_if<Meixner>(&spec)) {
    const Rational a = f->a;
    return {type1(spec, constant(-1), Rational(a / (1 - a)) * Operator(Delta), "meixner-D1"),
            type1(spec, constant(-1 / a), Rational(1 / (1 - a)) * Operator(Nabla), "meixner-D2")};
  }
  if (const auto* f = std::get_if<Krawtchouk>(&spec)) {
    const Rational a = f->a;
    return {type1(spec, constant(1 / (1 + a)), Rational(1 / (1 + a)) * Operator(Nabla), "krawtchouk-D1"),
            type1(spec, constant(-a / (1 + a)), Rational(-a / (1 + a)) * Operator(Delta), "krawtchouk-D2")};
  }
  if (const auto* f = std::get_if<Hahn>(&spec)) return hahn_catalog(spec, *f);
  if (std::holds_alternative<Laguerre>(spec))
    return {type1(spec, constant(-1), DifferentialOperator::d(1), "laguerre-d")};
  return jacobi_catalog(spec, std::get<Jacobi>(spec));
}

DOperatorSpec catalog_entry(const FamilySpec& spec, int index) {
  auto all = catalog(spec);
  if (index < 1 || index > static_cast<int>(all.size()))
    throw InvalidArgument(family_name(spec) + " has no D-operator #" + std::to_string(index));
  return all[index - 1];
}

DopReport verify_dop(const DOperatorSpec& d, int nmax, const Basis& basis) {
  DopReport rep{d.label, nmax, {}};
  auto results = parallel_map(nmax + 1, [&](int n) {
    DopFailure f{n, dop_series_apply(d, n, basis), d.closed_form.apply(basis(n))};
    return f;
  });
  for (auto& f : results)
    if (f.series != f.closed) rep.failures.push_back(std::move(f));
  return rep;
}

DopReport verify_dop(const DOperatorSpec& d, int nmax) {
  auto fam = make_family(d.family);
  for (int n = 0; n <= nmax; ++n) fam->p(n); // warm the memo before fanning out
  return verify_dop(d, nmax, [&](int m) { return fam->p(m); });
}

} // namespace krall
