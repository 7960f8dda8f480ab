#pragma once

#include "krall/opalg.hpp"

#include <deque>
#include <memory>
#include <shared_mutex>
#include <string>
#include <variant>
#include <vector>

namespace krall {

struct Charlier {
  Rational a;
};
struct Meixner {
  Rational a, c;
};
struct Krawtchouk {
  Rational a, N;
};
// Monic Hahn polynomials.
struct Hahn {
  Rational alpha, c, N;
};
struct Laguerre {
  Rational alpha;
};
struct Jacobi {
  Rational alpha, beta;
};

using FamilySpec = std::variant<Charlier, Meixner, Krawtchouk, Hahn, Laguerre, Jacobi>;

std::string family_name(const FamilySpec& spec);
// Human-readable, e.g. "meixner(a=1/2, c=7/2)".
std::string describe(const FamilySpec& spec);
nlohmann::json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

// Throws InvalidArgument for excluded parameters.
void check_admissible(const FamilySpec& spec);
OperatorKind family_kind(const FamilySpec& spec);

// The defining explicit sum. Throws DegeneracyError on a vanishing denominator.
Polynomial classical_poly(const FamilySpec& spec, int n);
// Independent generator: solves (D - theta_n) p = 0 on monomials with the leading
// coefficient taken from the explicit sum.
Polynomial eigen_solve_poly(const FamilySpec& spec, int n);

Rational theta(const FamilySpec& spec, int n);
// sigma_n for the quadratic-spectrum families (Hahn, Jacobi); throws otherwise.
Rational sigma(const FamilySpec& spec, int n);
bool has_quadratic_spectrum(const FamilySpec& spec);
Operator second_order_op(const FamilySpec& spec);

// x p_n = a p_{n+1} + b p_n + c p_{n-1}
struct Ttr {
  Rational a, b, c;
  friend bool operator==(const Ttr&, const Ttr&) = default;
};
// Printed formulas for Charlier, Meixner and Hahn; basis expansion for the rest.
Ttr ttr_coeffs(const FamilySpec& spec, int n);
Ttr ttr_by_expansion(const FamilySpec& spec, int n);

// A family with a thread-safe memo of p_n.
class Family {
public:
  explicit Family(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }
  OperatorKind kind() const { return op_.kind(); }
  const Polynomial& p(int n) const;
  Rational theta(int n) const { return krall::theta(spec_, n); }
  const Operator& op() const { return op_; }
  // Coefficients of q in the basis p_0, p_1, ...
  std::vector<Rational> expand(const Polynomial& q) const;

private:
  FamilySpec spec_;
  Operator op_;
  mutable std::shared_mutex mu_;
  mutable std::deque<Polynomial> memo_;
};

using FamilyPtr = std::shared_ptr<const Family>;
FamilyPtr make_family(const FamilySpec& spec);

} // namespace krall
