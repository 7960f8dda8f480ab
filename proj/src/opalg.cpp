#include "krall/opalg.hpp"

#include <sstream>

namespace krall {

// ---- difference operators

DifferenceOperator::DifferenceOperator(std::map<int, Polynomial> terms) : t_(std::move(terms)) { trim(); }

void DifferenceOperator::trim() {
  for (auto it = t_.begin(); it != t_.end();) {
    if (it->second.is_zero())
      it = t_.erase(it);
    else
      ++it;
  }
}

DifferenceOperator DifferenceOperator::identity() { return shift(0); }

DifferenceOperator DifferenceOperator::shift(int l, const Polynomial& f) {
  return DifferenceOperator({{l, f}});
}

DifferenceOperator DifferenceOperator::forward() {
  return DifferenceOperator({{1, Polynomial(1)}, {0, Polynomial(-1)}});
}

DifferenceOperator DifferenceOperator::backward() {
  return DifferenceOperator({{0, Polynomial(1)}, {-1, Polynomial(-1)}});
}

Polynomial DifferenceOperator::coeff(int l) const {
  auto it = t_.find(l);
  return it == t_.end() ? Polynomial() : it->second;
}

Polynomial DifferenceOperator::apply(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [l, f] : t_) r += f * shift_arg(p, l);
  return r;
}

DifferenceOperator DifferenceOperator::compose(const DifferenceOperator& o) const {
  // f Sh_a ∘ g Sh_b = f(x) g(x+a) Sh_{a+b}
  std::map<int, Polynomial> out;
  for (const auto& [a, f] : t_)
    for (const auto& [b, g] : o.t_) out[a + b] += f * shift_arg(g, a);
  return DifferenceOperator(std::move(out));
}

DifferenceOperator& DifferenceOperator::operator+=(const DifferenceOperator& o) {
  for (const auto& [l, f] : o.t_) t_[l] += f;
  trim();
  return *this;
}

DifferenceOperator& DifferenceOperator::operator*=(const Rational& r) {
  for (auto& [l, f] : t_) f *= r;
  trim();
  return *this;
}

Genre genre_order(const DifferenceOperator& D) {
  if (D.is_zero()) throw InvalidArgument("genre of the zero operator is undefined");
  int s = D.terms().begin()->first;
  int r = D.terms().rbegin()->first;
  return {s, r, r - s};
}

// ---- differential operators

DifferentialOperator::DifferentialOperator(std::vector<Polynomial> terms) : f_(std::move(terms)) { trim(); }

void DifferentialOperator::trim() {
  while (!f_.empty() && f_.back().is_zero()) f_.pop_back();
}

DifferentialOperator DifferentialOperator::identity() { return d(0); }

DifferentialOperator DifferentialOperator::d(int order, const Polynomial& f) {
  std::vector<Polynomial> v(order + 1);
  v[order] = f;
  return DifferentialOperator(std::move(v));
}

Polynomial DifferentialOperator::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(f_.size())) return {};
  return f_[j];
}

bool DifferentialOperator::in_algebra() const {
  for (std::size_t j = 0; j < f_.size(); ++j)
    if (f_[j].degree() > static_cast<int>(j)) return false;
  return true;
}

Polynomial DifferentialOperator::apply(const Polynomial& p) const {
  Polynomial r, dp = p;
  for (std::size_t j = 0; j < f_.size() && !dp.is_zero(); ++j) {
    if (!f_[j].is_zero()) r += f_[j] * dp;
    dp = derivative(dp);
  }
  return r;
}

DifferentialOperator DifferentialOperator::compose(const DifferentialOperator& o) const {
  // (f D^i)(g D^j) = f sum_m C(i,m) g^(m) D^(i-m+j)
  if (f_.empty() || o.f_.empty()) return {};
  std::vector<Polynomial> out(f_.size() + o.f_.size() - 1);
  for (std::size_t j = 0; j < o.f_.size(); ++j) {
    if (o.f_[j].is_zero()) continue;
    std::vector<Polynomial> dg{o.f_[j]};
    for (std::size_t i = 0; i < f_.size(); ++i) {
      if (f_[i].is_zero()) continue;
      while (dg.size() <= i) dg.push_back(derivative(dg.back()));
      mpz_class binom = 1;
      for (std::size_t m = 0; m <= i; ++m) {
        if (m > 0) binom = binom * static_cast<unsigned long>(i - m + 1) / static_cast<unsigned long>(m);
        if (!dg[m].is_zero()) out[i - m + j] += f_[i] * dg[m] * Rational(binom);
      }
    }
  }
  return DifferentialOperator(std::move(out));
}

DifferentialOperator& DifferentialOperator::operator+=(const DifferentialOperator& o) {
  if (o.f_.size() > f_.size()) f_.resize(o.f_.size());
  for (std::size_t j = 0; j < o.f_.size(); ++j) f_[j] += o.f_[j];
  trim();
  return *this;
}

DifferentialOperator& DifferentialOperator::operator*=(const Rational& r) {
  for (auto& f : f_) f *= r;
  trim();
  return *this;
}

// ---- Operator

Operator Operator::identity(OperatorKind kind) {
  if (kind == OperatorKind::difference) return DifferenceOperator::identity();
  return DifferentialOperator::identity();
}

Operator Operator::zero(OperatorKind kind) {
  if (kind == OperatorKind::difference) return DifferenceOperator();
  return DifferentialOperator();
}

OperatorKind Operator::kind() const {
  return v_.index() == 0 ? OperatorKind::difference : OperatorKind::differential;
}

bool Operator::is_zero() const {
  return std::visit([](const auto& d) { return d.is_zero(); }, v_);
}

const DifferenceOperator& Operator::difference() const {
  if (kind() != OperatorKind::difference) throw InvalidArgument("not a difference operator");
  return std::get<DifferenceOperator>(v_);
}

const DifferentialOperator& Operator::differential() const {
  if (kind() != OperatorKind::differential) throw InvalidArgument("not a differential operator");
  return std::get<DifferentialOperator>(v_);
}

Polynomial Operator::apply(const Polynomial& p) const {
  return std::visit([&](const auto& d) { return d.apply(p); }, v_);
}

Operator& Operator::operator+=(const Operator& o) {
  if (kind() != o.kind()) throw InvalidArgument("operator kind mismatch");
  if (kind() == OperatorKind::difference)
    std::get<DifferenceOperator>(v_) += o.difference();
  else
    std::get<DifferentialOperator>(v_) += o.differential();
  return *this;
}

Operator& Operator::operator-=(const Operator& o) { return *this += Rational(-1) * o; }

Operator& Operator::operator*=(const Rational& r) {
  std::visit([&](auto& d) { d *= r; }, v_);
  return *this;
}

Operator compose(const Operator& a, const Operator& b) {
  if (a.kind() != b.kind()) throw InvalidArgument("cannot compose a difference and a differential operator");
  if (a.kind() == OperatorKind::difference) return a.difference().compose(b.difference());
  return a.differential().compose(b.differential());
}

Operator op_linear(const std::vector<std::pair<Rational, Operator>>& ops) {
  if (ops.empty()) return {};
  Operator r = Operator::zero(ops.front().second.kind());
  for (const auto& [c, D] : ops) r += c * D;
  return r;
}

Operator poly_of_op(const Polynomial& P, const Operator& D) {
  // Horner: a_k, then D∘acc + a_j.
  Operator id = Operator::identity(D.kind());
  Operator acc = Operator::zero(D.kind());
  for (int j = P.degree(); j >= 0; --j) {
    acc = compose(D, acc);
    acc += P.coeff(j) * id;
  }
  return acc;
}

std::string to_string(const Operator& D) {
  std::ostringstream os;
  bool first = true;
  if (D.kind() == OperatorKind::difference) {
    for (const auto& [l, f] : D.difference().terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(f) << ")*Sh[" << l << "]";
    }
  } else {
    const auto& t = D.differential().terms();
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (t[j].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(t[j]) << ")*d^" << j;
    }
  }
  return first ? "0" : os.str();
}

// ---- JSON

nlohmann::json rational_to_json(const Rational& r) { return to_fraction(r); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw InvalidArgument("rational must be a \"p/q\" string or an integer");
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(rational_to_json(c));
  return a;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("polynomial must be a coefficient array");
  std::vector<Rational> v;
  for (const auto& c : j) v.push_back(rational_from_json(c));
  return Polynomial(std::move(v));
}

nlohmann::json to_json(const Operator& D) {
  nlohmann::json terms = nlohmann::json::array();
  if (D.kind() == OperatorKind::difference) {
    for (const auto& [l, f] : D.difference().terms())
      terms.push_back({{"shift", l}, {"coeffs", polynomial_to_json(f)}});
    return {{"kind", "difference"}, {"terms", terms}};
  }
  const auto& t = D.differential().terms();
  for (std::size_t j = 0; j < t.size(); ++j)
    if (!t[j].is_zero()) terms.push_back({{"order", j}, {"coeffs", polynomial_to_json(t[j])}});
  return {{"kind", "differential"}, {"terms", terms}};
}

Operator operator_from_json(const nlohmann::json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "difference") {
      std::map<int, Polynomial> m;
      for (const auto& t : j.at("terms")) m[t.at("shift").get<int>()] += polynomial_from_json(t.at("coeffs"));
      return DifferenceOperator(std::move(m));
    }
    if (kind == "differential") {
      std::vector<Polynomial> v;
      for (const auto& t : j.at("terms")) {
        int o = t.at("order").get<int>();
        if (o < 0) throw InvalidArgument("negative derivative order");
        if (static_cast<int>(v.size()) <= o) v.resize(o + 1);
        v[o] += polynomial_from_json(t.at("coeffs"));
      }
      return DifferentialOperator(std::move(v));
    }
    throw InvalidArgument("unknown operator kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed operator JSON: ") + e.what());
  }
}

} // namespace krall
