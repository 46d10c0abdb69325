#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3/report.hpp"
#include "k3/symbolic.hpp"

namespace k3 {

// Affine plane curve: equation = 0, with the function field given by a
// single rewrite relation on the fiber coordinate.
struct CurveModel {
  std::string name;
  SymContext ctx;
  SymPoly equation;
  std::string base;   // e.g. "rho"
  std::string fiber;  // e.g. "tau", carries the relation
};

CurveModel make_curve(std::string name, const Ring& ring, std::string base, std::string fiber, unsigned exponent,
                      const SymPoly& rhs);

// Coordinates of the target, as functions on the source. Variables of the
// target ring not listed in `images` (parameters) map to themselves.
struct CurveMap {
  std::string name;
  const CurveModel* source = nullptr;
  const CurveModel* target = nullptr;
  std::map<std::string, SymFrac> images;
};

SymFrac pullback(const SymPoly& p, const Ring& from, const std::map<std::string, SymFrac>& images, const Ring& to);
SymFrac pullback(const SymFrac& p, const Ring& from, const std::map<std::string, SymFrac>& images, const Ring& to);

VerificationReport verify_map(const CurveMap& m);

// m o m == identity, coordinate by coordinate.
VerificationReport verify_involution(const CurveMap& m);

// Smallest k <= max_order with m^k = identity, or 0.
int map_order(const CurveMap& m, int max_order = 12);
CurveMap compose(const CurveMap& outer, const CurveMap& inner);

// Named models and maps.
struct NamedCurves {
  Ring ring_b;   // rho, tau, beta
  Ring ring_e;   // u, v, beta
  Ring ring_ep;  // x, y
  Ring ring_e1;  // z1, w1
  CurveModel b_beta;    // tau^2 = rho(rho^4 + 2 beta^4 rho^2 + 1)
  CurveModel e_beta;    // v^2 = u(u^2 + 4u + 2(1 + beta^4))
  CurveModel e_prime;   // y^2 = x^3 - x
  CurveModel e_quartic; // w1^4 = z1^2 - 1
};

const NamedCurves& named_curves();

CurveMap quotient_map_f();          // B_beta -> E_beta
CurveMap involution_iota();         // (rho^-1, tau rho^-3)
CurveMap involution_iota_prime();   // (-rho, i tau), over Q(i)
CurveMap e_prime_to_e();            // (y/(sqrt2 x), (x + 1/x)/2), over Q(zeta8)
CurveMap e_prime_automorphism();    // (1/x, i y/x^2)
CurveMap e_order4();                // w1 -> i w1 on E
CurveMap e_prime_reflection();      // (x, -y)
CurveMap e_prime_to_e_beta_79();    // beta^4 = 7/9 : u = 4/3 x - 4/3, v = 8 sqrt3/9 y
CurveModel e_beta_at(const Rational& beta4);

// Exact j of y^2 = c3 x^3 + c2 x^2 + c1 x + c0.
template <class K>
K j_invariant_cubic(const K& c3, const K& c2, const K& c1, const K& c0) {
  if (c3.is_zero()) fail(ErrorCode::kDomain, "j_invariant needs a cubic");
  K a2 = c2, a4 = c1 * c3, a6 = c0 * c3 * c3;
  K b2 = K(4) * a2, b4 = K(2) * a4, b6 = K(4) * a6, b8 = K(4) * a2 * a6 - a4 * a4;
  K c4 = b2 * b2 - K(24) * b4;
  K disc = -b2 * b2 * b8 - K(8) * b4 * b4 * b4 - K(27) * b6 * b6 + K(9) * b2 * b4 * b6;
  if (disc.is_zero()) fail(ErrorCode::kDomain, "singular model (discriminant 0)");
  return c4 * c4 * c4 / disc;
}

template <class K>
K j_invariant(const Poly<K>& cubic) {
  if (cubic.degree() != 3) fail(ErrorCode::kDomain, "j_invariant needs a cubic right-hand side, got degree " + std::to_string(cubic.degree()));
  return j_invariant_cubic(cubic.coeff(3), cubic.coeff(2), cubic.coeff(1), cubic.coeff(0));
}

// v^2 = u^3 + A u over a field K.
template <class K>
struct EcPoint {
  bool infinity = false;
  K u, v;

  static EcPoint zero() { return {true, K(), K()}; }
  friend bool operator==(const EcPoint& a, const EcPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.u == b.u && a.v == b.v;
  }
};

template <class K>
bool ec_on_curve(const EcPoint<K>& p, const K& a) {
  return p.infinity || (p.v * p.v - p.u * p.u * p.u - a * p.u).is_zero();
}

template <class K>
EcPoint<K> ec_neg(const EcPoint<K>& p) {
  return p.infinity ? p : EcPoint<K>{false, p.u, -p.v};
}

template <class K>
EcPoint<K> ec_add(const EcPoint<K>& p, const EcPoint<K>& q, const K& a) {
  if (p.infinity) return q;
  if (q.infinity) return p;
  K slope;
  if ((p.u - q.u).is_zero()) {
    if ((p.v + q.v).is_zero()) return EcPoint<K>::zero();
    slope = (K(3) * p.u * p.u + a) / (K(2) * p.v);
  } else {
    slope = (q.v - p.v) / (q.u - p.u);
  }
  K u3 = slope * slope - p.u - q.u;
  K v3 = slope * (p.u - u3) - p.v;
  return {false, u3, v3};
}

template <class K>
EcPoint<K> ec_mul(long n, const EcPoint<K>& p, const K& a) {
  EcPoint<K> acc = EcPoint<K>::zero(), base = n < 0 ? ec_neg(p) : p;
  for (unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : n; k != 0; k >>= 1) {
    if (k & 1) acc = ec_add(acc, base, a);
    base = ec_add(base, base, a);
  }
  return acc;
}

template <class F>
int hyperelliptic_genus(const Poly<F>& h) {
  if (h.degree() < 1) fail(ErrorCode::kDomain, "hyperelliptic_genus needs a nonconstant polynomial");
  if (!is_squarefree(h)) fail(ErrorCode::kDomain, "singular model: " + h.to_string() + " is not squarefree");
  return (h.degree() - 1) / 2;
}

// m^*(du/v) = (c0 + c1 base) dbase/fiber on a source with fiber^2 = h(base).
struct DifferentialCoords {
  NumberField c0, c1;
  VerificationReport check;
};

DifferentialCoords pullback_differential(const CurveMap& m, const std::string& target_base = "u",
                                         const std::string& target_fiber = "v");

// d/dvar of a fraction in the free ring.
SymFrac frac_derivative(const SymFrac& f, std::size_t var);

}  // namespace k3
