#include "krall/moments.hpp"

namespace krall {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

MomentFunctional::MomentFunctional(const FamilySpec& base) : family_(make_family(base)) {}
MomentFunctional::MomentFunctional(FamilyPtr base) : family_(std::move(base)) {}
MomentFunctional::MomentFunctional(DiscreteMeasure base) : discrete_(std::move(base)) {}
MomentFunctional::MomentFunctional(RawMoments base) : raw_(std::move(base)) {}

MomentFunctional MomentFunctional::transformed(const Transform& t) const {
  MomentFunctional F = *this;
  F.transforms_.push_back(t);
  return F;
}

std::optional<FamilySpec> MomentFunctional::base_family() const {
  if (family_) return family_->spec();
  return std::nullopt;
}

Rational MomentFunctional::base_pair(const Polynomial& p) const {
  if (p.is_zero()) return 0;
  if (family_) {
    // <rho, p_m> = 0 for m >= 1 and <rho, p_0> = 1, with p_0 = 1 for every family.
    return family_->expand(p)[0];
  }
  if (discrete_) {
    Rational s = 0;
    for (const auto& [x0, m] : discrete_->atoms) s += m * p(x0);
    return s;
  }
  if (p.degree() >= static_cast<int>(raw_->mu.size()))
    throw InvalidArgument("raw moment sequence too short for degree " + std::to_string(p.degree()));
  Rational s = 0;
  for (int i = 0; i <= p.degree(); ++i) s += p.coeff(i) * raw_->mu[i];
  return s;
}

Rational MomentFunctional::pair(const Polynomial& p) const {
  // Peel transforms from the outermost inwards, rewriting the integrand.
  Polynomial integrand = p;
  Rational extra = 0;
  for (auto it = transforms_.rbegin(); it != transforms_.rend(); ++it) {
    std::visit(overloaded{
                   [&](const ChristoffelBy& t) { integrand = t.r * integrand; },
                   [&](const ShiftBy& t) { integrand = shift_arg(integrand, -t.lambda); },
                   [&](const AddDeltaScaled& t) { extra += t.mass * integrand(t.location); },
               },
               *it);
  }
  return base_pair(integrand) + extra;
}

std::vector<Rational> MomentFunctional::moments(int count) const {
  std::vector<Rational> mu;
  for (int i = 0; i < count; ++i) mu.push_back(pair(Polynomial::monomial(i)));
  return mu;
}

std::string MomentFunctional::anchor() const {
  if (family_) return "<rho_" + describe(family_->spec()) + ", 1>";
  return "1";
}

nlohmann::json MomentFunctional::to_json() const {
  nlohmann::json base;
  if (family_) {
    base = family_to_json(family_->spec());
  } else if (discrete_) {
    base = {{"family", "discrete"}, {"atoms", nlohmann::json::array()}};
    for (const auto& [x0, m] : discrete_->atoms)
      base["atoms"].push_back({{"at", to_fraction(x0)}, {"mass", to_fraction(m)}});
  } else {
    base = {{"family", "moments"}, {"mu", nlohmann::json::array()}};
    for (const auto& m : raw_->mu) base["mu"].push_back(to_fraction(m));
  }
  nlohmann::json ts = nlohmann::json::array();
  for (const auto& t : transforms_) {
    std::visit(overloaded{
                   [&](const ChristoffelBy& c) { ts.push_back({{"christoffel", polynomial_to_json(c.r)}}); },
                   [&](const ShiftBy& s) { ts.push_back({{"shift", to_fraction(s.lambda)}}); },
                   [&](const AddDeltaScaled& d) {
                     ts.push_back({{"delta", {{"at", to_fraction(d.location)}, {"mass", to_fraction(d.mass)}}}});
                   },
               },
               t);
  }
  return {{"base", base}, {"anchor", anchor()}, {"transforms", ts}};
}

MomentFunctional MomentFunctional::from_json(const nlohmann::json& j) {
  try {
    const auto& b = j.at("base");
    const std::string kind = b.at("family").get<std::string>();
    std::optional<MomentFunctional> F;
    if (kind == "discrete") {
      DiscreteMeasure d;
      for (const auto& a : b.at("atoms"))
        d.atoms.emplace_back(rational_from_json(a.at("at")), rational_from_json(a.at("mass")));
      F.emplace(std::move(d));
    } else if (kind == "moments") {
      RawMoments r;
      for (const auto& m : b.at("mu")) r.mu.push_back(rational_from_json(m));
      F.emplace(std::move(r));
    } else {
      F.emplace(family_from_json(b));
    }
    for (const auto& t : j.at("transforms")) {
      if (t.contains("christoffel"))
        F = F->transformed(ChristoffelBy{polynomial_from_json(t.at("christoffel"))});
      else if (t.contains("shift"))
        F = F->transformed(ShiftBy{rational_from_json(t.at("shift"))});
      else if (t.contains("delta"))
        F = F->transformed(
            AddDeltaScaled{rational_from_json(t.at("delta").at("at")), rational_from_json(t.at("delta").at("mass"))});
      else
        throw InvalidArgument("unknown transform in measure JSON");
    }
    return *F;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed measure JSON: ") + e.what());
  }
}

MomentFunctional transform(const MomentFunctional& F, const Transform& t) { return F.transformed(t); }

Rational pairing(const MomentFunctional& F, const Polynomial& p) { return F.pair(p); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational hankel_det(const std::vector<Rational>& mu, int n) {
  if (static_cast<int>(mu.size()) < 2 * n + 1) throw InvalidArgument("not enough moments for Theta_n");
  Matrix h(n + 1, std::vector<Rational>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) h[i][j] = mu[i + j];
  return determinant(std::move(h));
}

std::vector<Polynomial> orthoseq(const std::vector<Rational>& mu, int nmax) {
  for (int n = 0; n <= nmax; ++n)
    if (hankel_det(mu, n) == 0)
      throw DegeneracyError("Theta_" + std::to_string(n) + " = 0: no orthogonal polynomial sequence at level " +
                            std::to_string(n));
  std::vector<Polynomial> out{Polynomial(1)};
  for (int n = 1; n <= nmax; ++n) {
    // sum_j mu_{i+j} c_j = -mu_{i+n}, i < n
    Matrix a(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = mu[i + j];
      a[i][n] = -mu[i + n];
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (a[piv][c] == 0) ++piv; // Theta_{n-1} != 0 guarantees a pivot
      std::swap(a[piv], a[c]);
      for (int r = 0; r < n; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c] / a[c][c];
        for (int k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
      }
    }
    std::vector<Rational> coeffs(n + 1);
    for (int i = 0; i < n; ++i) coeffs[i] = a[i][n] / a[i][i];
    coeffs[n] = 1;
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

std::vector<Polynomial> orthoseq(const MomentFunctional& F, int nmax) { return orthoseq(F.moments(2 * nmax + 1), nmax); }

GramReport gram_check(const MomentFunctional& F, const std::vector<Polynomial>& polys) {
  GramReport rep;
  rep.size = static_cast<int>(polys.size());
  for (int i = 0; i < rep.size; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rational v = F.pair(polys[i] * polys[j]);
      if (i == j) {
        rep.diagonal.push_back(v);
        if (v == 0) rep.zero_diagonal.push_back(i);
      } else if (v != 0) {
        rep.off_diagonal_failures.push_back({i, j, v});
      }
    }
  }
  return rep;
}

CasoratiValue casorati(const Rational& a, int k, int n) {
  if (k < 1 || n < 0) throw InvalidArgument("casorati needs k >= 1 and n >= 0");
  const FamilySpec ch = Charlier{a};
  Matrix m(k, std::vector<Rational>(k));
  for (int j = 1; j <= k; ++j) {
    Polynomial c = classical_poly(ch, n + j - 1);
    for (int i = 1; i <= k; ++i) m[i - 1][j - 1] = c(i);
  }
  Rational f = ((static_cast<long>(k) * n) % 2 ? -1 : 1) * power(a, static_cast<long>(n - 1) * k);
  for (int j = 1; j <= k; ++j) f *= factorial(j) / factorial(n + j - 1);
  f *= classical_poly(Charlier{-a}, k)(Rational(-n));
  return {determinant(std::move(m)), f};
}

Polynomial occ_Q(const Rational& alpha, const Polynomial& P2) {
  const int k = P2.degree();
  if (k < 0) throw InvalidArgument("occ: P2 must be nonzero");
  if (is_integer(alpha) && alpha <= k) throw InvalidArgument("occ: alpha must avoid k, k-1, ...");
  const Polynomial Pm = affine_arg(P2, -1, 0);
  const Rational P21 = P2(1);
  Polynomial target = P21 != 0 ? Pm * (1 / P21) - Polynomial(1) : Pm - Polynomial(1);
  auto w = expand_graded(target, [](int j) { return binom_of(Polynomial{Rational(j), Rational(1)}, j); });
  w.resize(k + 1);
  Polynomial Q;
  for (int j = P21 != 0 ? 1 : 0; j <= k; ++j)
    if (w[j] != 0) Q += Polynomial::monomial(k - j, pochhammer(alpha - j, j) * w[j]);
  return Q;
}

Rational occ_form(const Rational& alpha, const Polynomial& P2, const Polynomial& f, const Polynomial& g) {
  const int k = P2.degree();
  const Polynomial Q = occ_Q(alpha, P2);
  const MomentFunctional mu1(Laguerre{alpha - 1});
  const MomentFunctional mu2(Laguerre{alpha - k - 1});
  return pochhammer(alpha - k, k) * mu1.pair(f * g) + g(0) * mu2.pair(f * Q);
}

} // namespace krall
