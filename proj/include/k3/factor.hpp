#pragma once

#include <vector>

#include "k3/fields.hpp"
#include "k3/poly.hpp"

namespace k3 {

template <class F>
struct Factor {
  Poly<F> factor;  // monic
  unsigned multiplicity = 0;
  bool irreducible = false;  // certified; false means "not split further"
};

template <class F>
struct Factorization {
  F constant;
  std::vector<Factor<F>> factors;
};

// Squarefree decomposition refined by rational roots and by the quadratic
// discriminant test. Factors of degree <= 3 with no rational root are certified.
Factorization<Rational> factor_over_q(const Poly<Rational>& p);

// Over Q(alpha): squarefree parts, with quadratics split when the
// discriminant is a square in Q(alpha).
Factorization<QFunc> factor_over_qfunc(const Poly<QFunc>& p);

// Rational roots of a nonzero polynomial, each listed once.
std::vector<Rational> rational_roots(const Poly<Rational>& p);

}  // namespace k3
