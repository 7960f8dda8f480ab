#pragma once

#include "krall/families.hpp"

#include <functional>
#include <string>
#include <vector>

namespace krall {

enum class DopKind { type1, type2 };

using Sequence = std::function<Rational(int)>;
using Basis = std::function<Polynomial(int)>;

struct DOperatorSpec {
  DopKind kind = DopKind::type1;
  Sequence eps;
  Sequence sigma; // type 2 only
  Operator closed_form;
  FamilySpec family;
  std::string label;
};

// The D-operator for (eps, -sigma): closed form negated. Type 2 only.
DOperatorSpec negated(const DOperatorSpec& d);

// Series definition applied to p_n; basis(m) supplies p_m.
Polynomial dop_series_apply(const DOperatorSpec& d, int n, const Basis& basis);
Polynomial dop_series_apply(const DOperatorSpec& d, int n);

std::vector<DOperatorSpec> catalog(const FamilySpec& spec);
// Catalog entry by 1-based index, as numbered in the lemmas.
DOperatorSpec catalog_entry(const FamilySpec& spec, int index);

struct DopFailure {
  int n;
  Polynomial series;
  Polynomial closed;
};

struct DopReport {
  std::string label;
  int nmax = 0;
  std::vector<DopFailure> failures;
  bool ok() const { return failures.empty(); }
};

DopReport verify_dop(const DOperatorSpec& d, int nmax, const Basis& basis);
DopReport verify_dop(const DOperatorSpec& d, int nmax);

} // namespace krall
