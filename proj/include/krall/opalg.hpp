#pragma once

#include "krall/polynomial.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace krall {

// sum_l f_l(x) Sh_l with Sh_l p(x) = p(x+l). Only nonzero f_l are stored.
class DifferenceOperator {
public:
  DifferenceOperator() = default;
  explicit DifferenceOperator(std::map<int, Polynomial> terms);

  static DifferenceOperator identity();
  static DifferenceOperator shift(int l, const Polynomial& f = 1);
  static DifferenceOperator forward();  // Delta = Sh_1 - Sh_0
  static DifferenceOperator backward(); // nabla = Sh_0 - Sh_{-1}

  const std::map<int, Polynomial>& terms() const { return t_; }
  Polynomial coeff(int l) const;
  bool is_zero() const { return t_.empty(); }

  Polynomial apply(const Polynomial& p) const;
  DifferenceOperator compose(const DifferenceOperator& o) const;

  DifferenceOperator& operator+=(const DifferenceOperator& o);
  DifferenceOperator& operator*=(const Rational& r);
  friend bool operator==(const DifferenceOperator&, const DifferenceOperator&) = default;

private:
  void trim();
  std::map<int, Polynomial> t_;
};

// sum_j f_j(x) (d/dx)^j.
class DifferentialOperator {
public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<Polynomial> terms);

  static DifferentialOperator identity();
  static DifferentialOperator d(int order = 1, const Polynomial& f = 1);

  const std::vector<Polynomial>& terms() const { return f_; }
  Polynomial coeff(int j) const;
  int order() const { return static_cast<int>(f_.size()) - 1; }
  bool is_zero() const { return f_.empty(); }
  // deg f_j <= j for every j.
  bool in_algebra() const;

  Polynomial apply(const Polynomial& p) const;
  DifferentialOperator compose(const DifferentialOperator& o) const;

  DifferentialOperator& operator+=(const DifferentialOperator& o);
  DifferentialOperator& operator*=(const Rational& r);
  friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

private:
  void trim();
  std::vector<Polynomial> f_;
};

enum class OperatorKind { difference, differential };

class Operator {
public:
  Operator() = default;
  Operator(DifferenceOperator d) : v_(std::move(d)) {}
  Operator(DifferentialOperator d) : v_(std::move(d)) {}

  static Operator identity(OperatorKind kind);
  static Operator zero(OperatorKind kind);

  OperatorKind kind() const;
  bool is_zero() const;
  const DifferenceOperator& difference() const;
  const DifferentialOperator& differential() const;

  Polynomial apply(const Polynomial& p) const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(const Rational& r);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Rational& r, Operator a) { return a *= r; }
  friend bool operator==(const Operator&, const Operator&) = default;

private:
  std::variant<DifferenceOperator, DifferentialOperator> v_;
};

// (a ∘ b)(p) = a(b(p)); throws InvalidArgument on kind mismatch.
Operator compose(const Operator& a, const Operator& b);
Operator op_linear(const std::vector<std::pair<Rational, Operator>>& ops);
// P(D) = sum_j a_j D^j, D^0 = identity.
Operator poly_of_op(const Polynomial& P, const Operator& D);

struct Genre {
  int s;
  int r;
  int order;
  friend bool operator==(const Genre&, const Genre&) = default;
};
// Throws InvalidArgument on the zero operator.
Genre genre_order(const DifferenceOperator& D);

std::string to_string(const Operator& D);

nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Operator& D);
Operator operator_from_json(const nlohmann::json& j);

} // namespace krall
