#pragma once

#include <string>
#include <vector>

#include "k3/fields.hpp"
#include "k3/multipoly.hpp"

namespace k3 {

using SymPoly = MultiPoly<NumberField>;
using SymFrac = MultiFrac<NumberField>;
using SymContext = QuotientContext<NumberField>;

inline SymPoly sym_var(const Ring& r, std::string_view name) { return SymPoly::variable(r, name); }
inline SymPoly sym_const(const Ring& r, const NumberField& c) { return SymPoly::constant(r, c); }
inline SymFrac sym_frac(const Ring& r, const NumberField& c) { return SymFrac(sym_const(r, c)); }
inline SymFrac sym_frac_var(const Ring& r, std::string_view name) { return SymFrac(sym_var(r, name)); }

// Identity images for every variable of `r`, with optional overrides.
std::vector<SymFrac> identity_images(const Ring& r);
void set_image(std::vector<SymFrac>& images, const Ring& r, std::string_view name, SymFrac value);

// Lifting univariate scalar towers into a ring; polynomial variables must be
// ring variables.
SymFrac to_sym(const Ring& r, const Rational& c);
SymFrac to_sym(const Ring& r, const NumberField& c);

template <class F>
SymFrac to_sym(const Ring& r, const Poly<F>& p) {
  SymFrac acc = sym_frac(r, NumberField());
  if (p.is_zero()) return acc;
  if (p.is_constant()) return to_sym(r, p.coeff(0));
  SymFrac x = sym_frac_var(r, p.var());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + to_sym(r, *it);
  return acc;
}

template <class F>
SymFrac to_sym(const Ring& r, const RatFunc<F>& f) {
  return to_sym(r, f.num()) / to_sym(r, f.den());
}

// Zero test in the free ring (no relations).
bool sym_is_zero(const SymFrac& f);

}  // namespace k3
