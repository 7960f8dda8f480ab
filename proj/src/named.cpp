#include "krall/named.hpp"

#include "krall/lattice.hpp"

namespace krall {

namespace {

const Polynomial X = Polynomial::x();

// prod_{i=1..k} (x + shift(i))
template <class F>
Polynomial product_poly(int k, F shift) {
  Polynomial r = 1;
  for (int i = 1; i <= k; ++i) r *= Polynomial{Rational(shift(i)), Rational(1)};
  return r;
}

bool nonpositive_integer(const Rational& r) { return is_integer(r) && r <= 0; }

void require_not_ladder(const std::string& theorem, const std::string& name, const Rational& v) {
  if (nonpositive_integer(v))
    throw HypothesisError(theorem, name, 0, theorem + ": " + name + " = " + v.get_str() + " is in {0, -1, -2, ...}");
}

void require_k(const std::string& theorem, int k) {
  if (k < 1) throw InvalidArgument(theorem + ": k must be a positive integer");
}

Polynomial charlier_p(const Rational& a, int n) { return classical_poly(Charlier{a}, n); }
Polynomial meixner_p(const Rational& a, const Rational& c, int n) { return classical_poly(Meixner{a, c}, n); }
Polynomial kraw_p(const Rational& a, const Rational& N, int n) { return classical_poly(Krawtchouk{a, N}, n); }

std::vector<Rational> hahn1_w(const NamedParams& p) {
  std::vector<Rational> w(p.k + 1);
  for (int j = 0; j <= p.k; ++j)
    w[j] = pochhammer(Rational(-p.k), j) * pochhammer(2 - p.alpha - p.c + j, p.k - j) *
           pochhammer(2 - p.c + j, p.k - j) / factorial(j);
  return w;
}

std::vector<Rational> hahn2_w(const NamedParams& p) {
  std::vector<Rational> w(p.k + 1);
  for (int j = 0; j <= p.k; ++j)
    w[j] = pochhammer(Rational(-p.k), j) * pochhammer(2 - p.c + j, p.k - j) * pochhammer(p.N + 1 + j, p.k - j) /
           factorial(j);
  return w;
}

Rational laguerre_K(const NamedParams& p) {
  if (p.K) return *p.K;
  if (p.M && is_integer(p.alpha) && p.alpha >= 0) return *p.M * factorial(to_long(p.alpha));
  throw InvalidArgument("laguerre: give --K, or --M with integer alpha");
}

Rational jacobi_K(const NamedParams& p) {
  if (p.K) return *p.K;
  if (p.M && is_integer(p.beta) && p.beta >= 0) {
    long b = to_long(p.beta);
    return *p.M * factorial(b) * pochhammer(1 + p.alpha, b);
  }
  throw InvalidArgument("jacobi: give --K, or --M with integer beta");
}

NamedConstruction laguerre(const NamedParams& p, int nmax) {
  const std::string th = "laguerre";
  const Rational al = p.alpha;
  if (nonpositive_integer(al)) throw HypothesisError(th, "alpha", 0, th + ": alpha must avoid 0, -1, -2, ...");
  const Rational K = laguerre_K(p);
  auto fam = make_family(Laguerre{al});
  const DOperatorSpec dop = catalog_entry(fam->spec(), 1);
  Sequence gamma = [al, K](int n) { return Rational(1 + K * pochhammer(al + 1, n - 1) / factorial(n - 1)); };

  KrallConstruction kc;
  if (is_integer(al)) {
    const long a = to_long(al);
    const Rational M = K / factorial(a);
    Polynomial P1 = -X, P2 = 1;
    Polynomial prod0 = 1, prod1 = 1;
    for (long i = 0; i <= a; ++i) prod0 *= Polynomial{Rational(i), Rational(-1)};
    for (long i = 1; i <= a; ++i) prod1 *= Polynomial{Rational(i), Rational(-1)};
    P1 += prod0 * Rational(M / (al + 1));
    P2 += prod1 * M;
    kc = construct_type1(fam, dop, P2, nmax, P1, th);
  } else {
    kc.theorem = th;
    kc.family = fam;
    kc.dop = dop;
    kc.nmax = nmax;
    kc.gamma = gamma;
    kc.lambda = [](int) -> Rational { throw InvalidArgument("laguerre: no operator for non-integer alpha"); };
    kc.notes.push_back("non-integer alpha: orthogonality only, no finite-order operator");
  }
  kc.gamma = gamma;
  kc.beta = [gamma](int n) { return Rational(-gamma(n + 1) / gamma(n)); };
  require_nonvanishing_gamma(kc, "1 + K (alpha+1)_{n-1}/(n-1)!");
  return {kc, named_measure(th, p), {}};
}

NamedConstruction jacobi(const NamedParams& p, int nmax) {
  const std::string th = "jacobi";
  const Rational al = p.alpha, be = p.beta;
  const Rational K = jacobi_K(p);
  auto fam = make_family(Jacobi{al, be});
  const DOperatorSpec dop = catalog_entry(fam->spec(), 1);
  Sequence gamma = [al, be, K](int n) {
    return Rational(1 + K * pochhammer(1 + al + be, n - 1) * pochhammer(1 + be, n - 1) /
                            (pochhammer(1 + al, n - 1) * factorial(n - 1)));
  };
  KrallConstruction kc;
  if (is_integer(be) && be >= 1) {
    const long b = to_long(be);
    std::vector<Rational> w(b + 1);
    w[0] = 1;
    w[b] = K / (factorial(b) * pochhammer(1 + al, b));
    kc = construct_type2(fam, dop, w, nmax, th);
  } else {
    kc.theorem = th;
    kc.family = fam;
    kc.dop = dop;
    kc.nmax = nmax;
    kc.lambda = [](int) -> Rational { throw InvalidArgument("jacobi: no operator for non-integer beta"); };
    kc.notes.push_back("non-integer beta: orthogonality only, no finite-order operator");
  }
  kc.gamma = gamma;
  Sequence eps = dop.eps;
  kc.beta = [gamma, eps](int n) { return Rational(eps(n) * gamma(n + 1) / gamma(n)); };
  require_nonvanishing_gamma(kc, "gamma_n");
  return {kc, named_measure(th, p), {}};
}

} // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{"charlier", "meixner1", "meixner2", "krawtchouk",
                                            "hahn1",    "hahn2",    "laguerre", "jacobi"};
  return ids;
}

MomentFunctional named_measure(const std::string& th, const NamedParams& p) {
  const int k = p.k;
  auto plus_i = [](int i) { return i; };
  if (th == "charlier")
    return MomentFunctional(Charlier{p.a}).transformed(ShiftBy{k + 1}).transformed(ChristoffelBy{product_poly(k, plus_i)});
  if (th == "meixner1")
    return MomentFunctional(Meixner{p.a, p.c - k - 1})
        .transformed(ChristoffelBy{product_poly(k, [&](int i) { return Rational(p.c - i); })});
  if (th == "meixner2")
    return MomentFunctional(Meixner{p.a, p.c - k - 1})
        .transformed(ShiftBy{k + 1})
        .transformed(ChristoffelBy{product_poly(k, plus_i)});
  if (th == "krawtchouk")
    return MomentFunctional(Krawtchouk{p.a, p.N + k + 1})
        .transformed(ShiftBy{k + 1})
        .transformed(ChristoffelBy{product_poly(k, plus_i)});
  if (th == "hahn1")
    return MomentFunctional(Hahn{p.alpha, p.c - k - 1, p.N})
        .transformed(ChristoffelBy{product_poly(k, [&](int i) { return Rational(p.c - i); })});
  if (th == "hahn2")
    return MomentFunctional(Hahn{p.alpha + k + 1, p.c - k - 1, p.N + k + 1})
        .transformed(ShiftBy{k + 1})
        .transformed(ChristoffelBy{product_poly(k, plus_i)});
  if (th == "laguerre") return MomentFunctional(Laguerre{p.alpha - 1}).transformed(AddDeltaScaled{0, laguerre_K(p)});
  if (th == "jacobi")
    return MomentFunctional(Jacobi{p.alpha, p.beta - 1}).transformed(AddDeltaScaled{-1, jacobi_K(p)});
  throw InvalidArgument("unknown theorem '" + th + "'");
}

NamedConstruction named(const std::string& th, const NamedParams& p, int nmax) {
  if (th == "laguerre") return laguerre(p, nmax);
  if (th == "jacobi") return jacobi(p, nmax);
  const int k = p.k;
  require_k(th, k);

  if (th == "charlier") {
    auto fam = make_family(Charlier{p.a});
    Polynomial P2 = shift_arg(charlier_p(-p.a, k), -1);
    Polynomial P1 = -charlier_p(-p.a, k + 1);
    auto kc = construct_type1(fam, catalog_entry(fam->spec(), 1), P2, nmax, P1, th);
    return {kc, named_measure(th, p), {}};
  }
  if (th == "meixner1" || th == "meixner2") {
    if (is_integer(p.c) && p.c <= k + 1)
      throw HypothesisError(th, "c", 0, th + ": c must avoid k+1, k, k-1, ...");
    auto fam = make_family(Meixner{p.a, p.c});
    const Rational a = p.a, s = -1 / (a - 1);
    if (th == "meixner1") {
      Polynomial P1 = affine_arg(meixner_p(1 / a, -p.c + 1, k + 1), s, 0) * Rational(1 / (a - 1));
      Polynomial P2 = affine_arg(meixner_p(1 / a, -p.c + 2, k), s, -1);
      auto kc = construct_type1(fam, catalog_entry(fam->spec(), 1), P2, nmax, P1, th);
      std::string note = "operator uses (a/(1-a)) Delta; the printed (a/(1-a)) nabla fails the eigen identity";
      kc.notes.push_back(note);
      return {kc, named_measure(th, p), {note}};
    }
    Polynomial P1 = affine_arg(meixner_p(a, -p.c + 1, k + 1), s, 0) * Rational(-a / (a - 1));
    Polynomial P2 = affine_arg(meixner_p(a, -p.c + 2, k), s, -1);
    auto kc = construct_type1(fam, catalog_entry(fam->spec(), 2), P2, nmax, P1, th);
    return {kc, named_measure(th, p), {}};
  }
  if (th == "krawtchouk") {
    for (int i = 0; i <= k; ++i)
      if (p.N == -i) throw HypothesisError(th, "N", 0, th + ": N must avoid 0, -1, ..., -k");
    auto fam = make_family(Krawtchouk{p.a, p.N});
    const Rational s = 1 / (1 + p.a);
    Polynomial P1 = -affine_arg(kraw_p(p.a, -p.N + 1, k + 1), s, 0);
    Polynomial P2 = affine_arg(kraw_p(p.a, -p.N, k), s, -1);
    auto kc = construct_type1(fam, catalog_entry(fam->spec(), 1), P2, nmax, P1, th);
    std::string note = "beta_n = gamma_{n+1}/((1+a) gamma_n); the printed extra factor n fails the eigen identity";
    kc.notes.push_back(note);
    return {kc, named_measure(th, p), {note}};
  }
  if (th == "hahn1" || th == "hahn2") {
    const Rational A = p.alpha + p.c - p.N;
    require_not_ladder(th, "alpha+c-N+1", A + 1);
    require_not_ladder(th, "alpha-N+1", p.alpha - p.N + 1);
    require_not_ladder(th, "c-k-1", p.c - k - 1);
    auto fam = make_family(Hahn{p.alpha, p.c, p.N});
    if (th == "hahn1") {
      require_not_ladder(th, "alpha+c-k-1", p.alpha + p.c - k - 1);
      auto kc = construct_type2(fam, catalog_entry(fam->spec(), 1), hahn1_w(p), nmax, th);
      return {kc, named_measure(th, p), {}};
    }
    require_not_ladder(th, "alpha+c", p.alpha + p.c);
    auto kc = construct_type2(fam, negated(catalog_entry(fam->spec(), 2)), hahn2_w(p), nmax, th);
    std::string note = "operator is 1/2 P1(D) - D2 P2(D), i.e. the D-operator (eps_{n,2}, +sigma_n)";
    kc.notes.push_back(note);
    return {kc, named_measure(th, p), {note}};
  }
  throw InvalidArgument("unknown theorem '" + th + "'");
}

Rational laguerre_koekoek_eigenvalue(const Rational& alpha, const Rational& M, int n) {
  return n + M / (alpha + 1) * pochhammer(Rational(n), to_long(alpha) + 1);
}

Rational jacobi_zhedanov_eigenvalue(const Rational& alpha, int beta, const Rational& M, int n) {
  return (n + alpha + beta) *
             (n + M * pochhammer(n + alpha, beta) * pochhammer(Rational(n), beta) * (1 + frac(n - 1, beta + 1))) +
         alpha * beta;
}

bool IpReport::ok() const {
  for (const auto& r : rows)
    if (r.lhs != r.rhs) return false;
  return !rows.empty();
}

const std::vector<std::string>& ip_lemma_ids() {
  static const std::vector<std::string> ids{"chxx", "lme1x", "meixner2", "krawtchouk", "hahn1", "hahn2"};
  return ids;
}

IpReport ip_lemma_check(const std::string& kind, const NamedParams& p, int nmax) {
  const int k = p.k;
  require_k(kind, k);
  std::string th = kind == "chxx" ? "charlier" : kind == "lme1x" ? "meixner1" : kind;
  if (th != "charlier" && th != "meixner1" && th != "meixner2" && th != "krawtchouk" && th != "hahn1" && th != "hahn2")
    throw InvalidArgument("unknown lemma '" + kind + "'");
  const MomentFunctional rho = named_measure(th, p);

  FamilySpec spec;
  std::function<Rational(int)> formula; // unnormalized; divided by its n = 0 value
  if (th == "charlier") {
    spec = Charlier{p.a};
    Polynomial ck = charlier_p(-p.a, k);
    formula = [ck](int n) { return Rational((n % 2 ? -1 : 1) * ck(Rational(-n - 1))); };
  } else if (th == "meixner1") {
    spec = Meixner{p.a, p.c};
    Polynomial mk = meixner_p(1 / p.a, -p.c + 2, k);
    formula = [mk](int n) { return mk(Rational(-n - 1)); };
  } else if (th == "meixner2") {
    spec = Meixner{p.a, p.c};
    Polynomial mk = meixner_p(p.a, -p.c + 2, k);
    Rational a = p.a;
    formula = [mk, a](int n) { return Rational(mk(Rational(-n - 1)) / power(a, n)); };
  } else if (th == "krawtchouk") {
    spec = Krawtchouk{p.a, p.N};
    Polynomial kk = kraw_p(p.a, -p.N, k);
    Rational a = p.a;
    formula = [kk, a](int n) { return Rational((n % 2 ? -1 : 1) * kk(Rational(-n - 1)) / power(1 + a, n)); };
  } else {
    Hahn h{p.alpha, p.c, p.N};
    spec = h;
    const Rational A = p.alpha + p.c - p.N;
    const int variant = th == "hahn1" ? 1 : 2;
    Polynomial hs = dual_hahn_poly(variant, p.alpha, p.c, p.N, k);
    formula = [=](int n) {
      Rational f = (n % 2 ? -1 : 1) * factorial(n) * hs(theta(h, n)) / pochhammer(A, 2 * n);
      if (variant == 1) return Rational(f * pochhammer(p.N - n, n) * pochhammer(p.alpha - p.N + 1, n));
      return Rational(f * pochhammer(p.alpha + p.c, n) * pochhammer(p.alpha + 1 - p.N, n));
    };
  }
  auto fam = make_family(spec);
  IpReport rep{kind, {}};
  const Rational base = rho.pair(1), f0 = formula(0);
  if (base == 0 || f0 == 0) throw HypothesisError(kind, "<rho,1>", 0, kind + ": zero normalization");
  for (int n = 0; n <= nmax; ++n) rep.rows.push_back({n, rho.pair(fam->p(n)) / base, formula(n) / f0});
  return rep;
}

} // namespace krall
