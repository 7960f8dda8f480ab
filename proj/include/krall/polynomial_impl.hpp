#pragma once

namespace krall {

template <class Basis>
std::vector<Rational> expand_graded(const Polynomial& p, Basis&& basis) {
  std::vector<Rational> out(p.degree() + 1);
  Polynomial rem = p;
  for (int m = p.degree(); m >= 0; --m) {
    const Polynomial& b = basis(m);
    if (b.degree() != m) throw DegeneracyError("basis element " + std::to_string(m) + " has wrong degree");
    Rational cm = rem.coeff(m) / b.leading();
    if (cm != 0) {
      out[m] = cm;
      rem -= b * cm;
    }
  }
  if (!rem.is_zero()) throw DegeneracyError("basis expansion left a remainder");
  return out;
}

} // namespace krall
