#pragma once

#include <array>
#include <string>

#include "k3/numeric.hpp"
#include "k3/poly.hpp"

namespace k3 {

struct PeriodRatio {
  Complex tau;       // reduced to the standard fundamental domain
  Complex tau_raw;   // omega2 / omega1 straight from the AGM, flipped to Im > 0
  Real error_bound;  // |tau(p) - tau(p + 32)|, floored at 2^-p
  int precision = 0;
};

// y^2 = (x - e1)(x - e2)(x - e3).
PeriodRatio period_ratio_numeric(const std::array<Complex, 3>& e, int precision_bits);
PeriodRatio period_ratio_cubic(const Poly<Rational>& cubic, int precision_bits);

std::array<Complex, 3> cubic_roots(const Poly<Rational>& cubic, int precision_bits);

// Roots with e1 - e3 = theta3^4, e1 - e2 = theta4^4, e2 - e3 = theta2^4
// (a curve with period ratio tau).
std::array<Complex, 3> roots_for_tau(const Complex& tau, int precision_bits);

Complex reduce_to_fundamental_domain(const Complex& tau);
Complex j_from_tau(const Complex& tau);

enum class CmVerdict { kIsogenousToE, kNotDetected, kInconclusive };

struct CmResult {
  CmVerdict verdict = CmVerdict::kNotDetected;
  int conductor = 0;
  long a = 0, b = 0, c = 0;  // a tau^2 + b tau + c = 0 when found
  long discriminant = 0;
  std::string note;
};

std::string cm_verdict_name(CmVerdict v);

// Integral quadratic relation search on the reduced tau. `error` is the
// uncertainty of tau; results within the margin are never false positives.
CmResult cm_isogeny_check(const Complex& tau, int max_conductor, const Real& error);

Complex complex_from(const Rational& re, const Rational& im, int precision_bits);

}  // namespace k3
