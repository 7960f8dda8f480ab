// krall: command-line verification harness.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 hypothesis or degeneracy.

#include "krall/krall.hpp"
#include "krall/named.hpp"
#include "krall/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>

using namespace krall;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string family, theorem, kind;
  int k = 1;
  int nmax = 10;
  std::map<std::string, std::string> raw; // a, c, N, alpha, beta, K, M as given
  bool ortho = false, band = false, as_json = false, timing = false;

  bool has(const std::string& name) const { return raw.count(name) > 0; }

  Rational get(const std::string& name) const {
    auto it = raw.find(name);
    if (it == raw.end()) throw UsageError("missing --" + name);
    try {
      return parse_rational(it->second);
    } catch (const InvalidArgument& e) {
      throw UsageError("--" + name + ": " + e.what());
    }
  }

  std::optional<Rational> opt(const std::string& name) const {
    if (!has(name)) return std::nullopt;
    return get(name);
  }

  NamedParams named_params() const {
    NamedParams p;
    p.k = k;
    for (const char* n : {"a", "c", "N", "alpha", "beta"})
      if (has(n)) {
        Rational v = get(n);
        std::string s = n;
        if (s == "a") p.a = v;
        if (s == "c") p.c = v;
        if (s == "N") p.N = v;
        if (s == "alpha") p.alpha = v;
        if (s == "beta") p.beta = v;
      }
    p.K = opt("K");
    p.M = opt("M");
    return p;
  }

  FamilySpec family_spec() const {
    if (family == "charlier") return Charlier{get("a")};
    if (family == "meixner") return Meixner{get("a"), get("c")};
    if (family == "krawtchouk") return Krawtchouk{get("a"), get("N")};
    if (family == "hahn") return Hahn{get("alpha"), get("c"), get("N")};
    if (family == "laguerre") return Laguerre{get("alpha")};
    if (family == "jacobi") return Jacobi{get("alpha"), get("beta")};
    throw UsageError("unknown family '" + family + "'");
  }

  std::map<std::string, std::string> params_for_report() const {
    std::map<std::string, std::string> out;
    for (const auto& [name, v] : raw) out[name] = to_fraction(get(name));
    return out;
  }
};

json poly_json(const Polynomial& p) { return polynomial_to_json(p); }

json genre_json(const Genre& g) { return {{"s", g.s}, {"r", g.r}, {"order", g.order}}; }

void require_theorem(const std::string& th) {
  for (const auto& id : theorem_ids())
    if (id == th) return;
  throw UsageError("unknown theorem '" + th + "'");
}

VerificationReport run_verify_dops(const Flags& f) {
  VerificationReport r;
  r.command = "verify-dops";
  r.theorem = f.family;
  const FamilySpec spec = f.family_spec();
  check_admissible(spec);
  json ops = json::array();
  for (const auto& d : catalog(spec)) {
    DopReport rep = verify_dop(d, f.nmax);
    json detail = json::array();
    for (const auto& fl : rep.failures)
      detail.push_back({{"n", fl.n}, {"series", poly_json(fl.series)}, {"closed", poly_json(fl.closed)}});
    r.add(d.label, rep.ok(), rep.ok() ? json("n <= " + std::to_string(f.nmax)) : detail);
    ops.push_back({{"label", d.label}, {"closed_form", to_json(d.closed_form)}});
  }
  r.data["operators"] = ops;
  return r;
}

Polynomial band_multiplier(const std::string& th, int k) {
  const Polynomial x = Polynomial::x();
  if (th == "laguerre") return power(x, k + 1);
  if (th == "jacobi") return power(x + Polynomial(1), k + 1);
  Polynomial m = 1;
  for (int i = 1; i <= k + 1; ++i) m *= x + Polynomial(i);
  return m;
}

VerificationReport run_krall(const Flags& f) {
  require_theorem(f.theorem);
  VerificationReport r;
  r.command = "krall";
  r.theorem = f.theorem;
  NamedConstruction nc = named(f.theorem, f.named_params(), f.nmax);
  const KrallConstruction& kc = nc.kc;
  r.notes = kc.notes;
  r.data["family"] = family_to_json(kc.family->spec());
  r.data["P2"] = poly_json(kc.P2);
  if (kc.P1) r.data["P1"] = poly_json(*kc.P1);

  if (kc.Dq) {
    EigenReport er = verify_eigen(kc, f.nmax);
    json detail = json::array();
    for (const auto& fl : er.failures)
      detail.push_back({{"n", fl.n}, {"lhs", poly_json(fl.lhs)}, {"rhs", poly_json(fl.rhs)}});
    r.add("eigen", er.failures.empty(), er.failures.empty() ? json("n <= " + std::to_string(f.nmax)) : detail);
    if (er.genre) {
      r.data["genre"] = genre_json(*er.genre);
      if (er.expected_genre) r.add("genre", er.genre_ok(), genre_json(*er.expected_genre));
    } else {
      r.data["order"] = kc.Dq->differential().order();
    }
  } else {
    r.notes.push_back("eigen: n/a (no finite-order operator for these parameters)");
  }

  if (f.ortho) {
    std::vector<Polynomial> qs;
    for (int n = 0; n <= f.nmax; ++n) qs.push_back(kc.q(n));
    GramReport g = gram_check(nc.measure, qs);
    json detail = json::object();
    json off = json::array();
    for (const auto& e : g.off_diagonal_failures)
      off.push_back({{"i", e.i}, {"j", e.j}, {"value", to_fraction(e.value)}});
    detail["off_diagonal"] = off;
    detail["zero_diagonal"] = g.zero_diagonal;
    json diag = json::array();
    for (const auto& v : g.diagonal) diag.push_back(to_fraction(v));
    r.data["gram_diagonal"] = diag;
    r.data["measure"] = nc.measure.to_json();
    r.add("orthogonality", g.ok(), g.ok() ? json("q_0..q_" + std::to_string(f.nmax)) : detail);
  }

  if (f.band && kc.P2.is_zero()) {
    r.notes.push_back("band: n/a (no P2 for these parameters)");
  } else if (f.band) {
    const int k = kc.P2.degree();
    const Polynomial m = band_multiplier(f.theorem, k);
    BandReport b = band_profile(kc, m, k + 1, f.nmax);
    json band{{"multiplier", poly_json(m)}, {"lo", b.lo}, {"hi", b.hi}, {"nmin", b.nmin}, {"nmax", b.nmax}};
    r.data["band"] = band;
    if (f.theorem == "laguerre" || f.theorem == "jacobi")
      r.add("band", b.within(-k - 1, k + 1), "[" + std::to_string(-k - 1) + ", " + std::to_string(k + 1) + "]");
    else
      r.notes.push_back("band reported only: [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "]");
  }
  return r;
}

VerificationReport run_casorati(const Flags& f) {
  VerificationReport r;
  r.command = "casorati";
  const Rational a = f.get("a");
  if (f.k < 1) throw UsageError("--k must be >= 1");
  json rows = json::array();
  bool ok = true;
  for (int n = 0; n <= f.nmax; ++n) {
    CasoratiValue v = casorati(a, f.k, n);
    ok = ok && v.det == v.formula;
    rows.push_back({{"n", n}, {"det", to_fraction(v.det)}, {"formula", to_fraction(v.formula)}});
  }
  r.data["rows"] = rows;
  r.add("det == formula", ok, "n <= " + std::to_string(f.nmax));
  return r;
}

VerificationReport run_ip_lemma(const Flags& f) {
  VerificationReport r;
  r.command = "ip-lemma";
  r.theorem = f.kind;
  bool known = false;
  for (const auto& id : ip_lemma_ids()) known = known || id == f.kind;
  if (!known) throw UsageError("unknown lemma '" + f.kind + "'");
  IpReport ip = ip_lemma_check(f.kind, f.named_params(), f.nmax);
  json rows = json::array();
  for (const auto& row : ip.rows)
    rows.push_back({{"n", row.n}, {"lhs", to_fraction(row.lhs)}, {"rhs", to_fraction(row.rhs)}});
  r.data["rows"] = rows;
  r.add("ratio identity", ip.ok(), "n <= " + std::to_string(f.nmax));
  return r;
}

VerificationReport run_table(const Flags& f) {
  require_theorem(f.theorem);
  VerificationReport r;
  r.command = "table";
  r.theorem = f.theorem;
  NamedConstruction nc = named(f.theorem, f.named_params(), f.nmax);
  r.notes = nc.kc.notes;
  json rows = json::array();
  for (int n = 0; n <= f.nmax; ++n) {
    json row{{"n", n}, {"q", poly_json(nc.kc.q(n))}};
    if (n >= 1) row["gamma"] = to_fraction(nc.kc.gamma(n));
    if (n >= 1) row["beta"] = to_fraction(nc.kc.beta(n));
    if (nc.kc.Dq) row["lambda"] = to_fraction(nc.kc.lambda(n));
    rows.push_back(row);
  }
  r.data["rows"] = rows;
  return r;
}

VerificationReport run_dump_operator(const Flags& f) {
  require_theorem(f.theorem);
  VerificationReport r;
  r.command = "dump-operator";
  r.theorem = f.theorem;
  NamedConstruction nc = named(f.theorem, f.named_params(), f.nmax);
  if (!nc.kc.Dq) throw UsageError(f.theorem + ": no finite-order operator for these parameters");
  r.data["operator"] = to_json(*nc.kc.Dq);
  return r;
}

std::string cell(const json& row, const char* key) {
  if (!row.contains(key)) return "";
  const json& v = row.at(key);
  if (v.is_string()) return to_display(parse_rational(v.get<std::string>()));
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  if (v.is_array()) return to_string(polynomial_from_json(v));
  return v.dump();
}

void print_text(const VerificationReport& r) {
  std::cout << to_text(r);
  if (r.command == "table") {
    for (const auto& row : r.data.at("rows"))
      std::cout << "  n=" << cell(row, "n") << "  beta=" << cell(row, "beta") << "  gamma=" << cell(row, "gamma")
                << "  lambda=" << cell(row, "lambda") << "  q=" << cell(row, "q") << "\n";
  } else if (r.command == "casorati" || r.command == "ip-lemma") {
    const char* lhs = r.command == "casorati" ? "det" : "lhs";
    const char* rhs = r.command == "casorati" ? "formula" : "rhs";
    for (const auto& row : r.data.at("rows"))
      std::cout << "  n=" << cell(row, "n") << "  " << lhs << "=" << cell(row, lhs) << "  " << rhs << "="
                << cell(row, rhs) << "\n";
  } else if (r.command == "krall" && r.data.contains("genre")) {
    const auto& g = r.data.at("genre");
    std::cout << "  operator order " << g.at("order") << ", genre (" << g.at("s") << ", " << g.at("r") << ")\n";
  } else if (r.command == "krall" && r.data.contains("order")) {
    std::cout << "  operator order " << r.data.at("order") << "\n";
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Krall-type polynomial constructions"};
  app.require_subcommand(1, 1);
  Flags f;

  auto add_params = [&](CLI::App* sub) {
    for (const char* name : {"a", "c", "N", "alpha", "beta", "K", "M"}) {
      std::string n = name;
      sub->add_option_function<std::string>("--" + n, [&f, n](const std::string& v) { f.raw[n] = v; },
                                            "rational parameter " + n + " (p or p/q)");
    }
    sub->add_option("--k", f.k, "degree parameter k")->check(CLI::NonNegativeNumber);
    sub->add_option("--nmax", f.nmax, "largest n checked (default 10)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", f.as_json, "emit the JSON report");
    sub->add_flag("--timing", f.timing, "record wall-clock time in the report");
  };

  auto* vd = app.add_subcommand("verify-dops", "check every D-operator of a family: series against closed form");
  vd->add_option("--family", f.family, "charlier, meixner, krawtchouk, hahn, laguerre or jacobi")->required();
  add_params(vd);

  auto* kr = app.add_subcommand("krall", "build a named construction and run its checks");
  kr->add_option("--theorem", f.theorem, "charlier, meixner1, meixner2, krawtchouk, hahn1, hahn2, laguerre, jacobi")
      ->required();
  kr->add_flag("--ortho", f.ortho, "check orthogonality against the target measure");
  kr->add_flag("--band", f.band, "expand the band multiplier times q_n in the q basis");
  add_params(kr);

  auto* cs = app.add_subcommand("casorati", "compare the Casorati determinant with its closed form");
  add_params(cs);

  auto* ip = app.add_subcommand("ip-lemma", "check an inner-product lemma as a ratio identity");
  ip->add_option("--kind", f.kind, "chxx, lme1x, meixner2, krawtchouk, hahn1 or hahn2")->required();
  add_params(ip);

  auto* tb = app.add_subcommand("table", "print beta_n, gamma_n, lambda_n and q_n");
  tb->add_option("--theorem", f.theorem, "named construction")->required();
  add_params(tb);

  auto* dop = app.add_subcommand("dump-operator", "print the operator of a named construction as JSON");
  dop->add_option("--theorem", f.theorem, "named construction")->required();
  add_params(dop);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  try {
    if (*vd) r = run_verify_dops(f);
    else if (*kr) r = run_krall(f);
    else if (*cs) r = run_casorati(f);
    else if (*ip) r = run_ip_lemma(f);
    else if (*tb) r = run_table(f);
    else r = run_dump_operator(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis violated: " << e.what() << " (theorem " << e.theorem() << ", parameter "
              << e.parameter() << ", n = " << e.n() << ")\n";
    return 3;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate parameters: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  r.params = f.params_for_report();
  if (r.command != "verify-dops") r.params["k"] = std::to_string(f.k) + "/1";
  r.nmax = f.nmax;
  if (f.timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (r.command == "dump-operator" && !f.as_json) {
    std::cout << r.data.at("operator").dump(2) << "\n";
    return 0;
  }
  if (f.as_json) std::cout << to_json(r).dump(2) << "\n";
  else print_text(r);
  return r.ok() ? 0 : 1;
}
