#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/factor.hpp"
#include "k3/report.hpp"
#include "k3/symbolic.hpp"

namespace k3 {

// f(lambda) of y^2 = x^3 - f x, coefficients in Q(param) (constants for a
// concrete parameter).
using FPoly = Poly<QFunc>;

struct WeierstrassFibration {
  FPoly f;
  std::string base = "lambda";
  std::string param;  // "alpha", "beta" or empty
};

// f for the pencil fibration: lambda^3 (lambda^2 + 2 lambda + alpha)^2.
FPoly pencil_f(const QFunc& alpha);

struct TwistRecord {
  FPoly removed;  // f = reduced * removed
  FPoly root;     // removed = root^4
};

struct TwistResult {
  FPoly reduced;
  TwistRecord twist;
};

TwistResult twist_minimize(const FPoly& f);

enum class FiberType { kIII, kI0Star, kIIIStar };
std::string fiber_type_name(FiberType t);

struct KodairaFiber {
  std::optional<FPoly> location;  // nullopt means infinity
  int places = 1;                 // geometric fibers (degree of the location)
  int k = 0;
  FiberType type = FiberType::kIII;
  int euler = 0;
  int components = 0;

  std::string location_string() const { return location ? location->to_string() : "inf"; }
};

struct FiberConfiguration {
  std::vector<KodairaFiber> fibers;
  int total_euler = 0;
  int k_infinity = 0;
  FPoly f;
};

FiberConfiguration classify_fibers(const FPoly& f);

int shioda_tate_bound(const FiberConfiguration& cfg, int mw_rank);
int parity_refine(int bound);

// v^2 = u^3 - 4 beta u from z1^2 = beta w^4 + 1, each coordinate change
// verified; then twisted to a polynomial f.
struct WeierstrassReduction {
  VerificationReport chain;
  RatFunc<QFunc> four_beta;        // coefficient 4 beta in lambda over Q(alpha)
  RatFunc<QFunc> twist_multiplier; // c with (u, v) -> (c^2 u, c^3 v)
  FPoly f;
  bool matches_pencil = false;     // beta = (1/4 lambda q^2)^-1 for the pencil
};

RatFunc<QFunc> pencil_beta(const QFunc& alpha);                // 4 / (lambda q^2)
RatFunc<QFunc> squared_beta(const QFunc& alpha);               // (1/4 lambda q)^-2
WeierstrassReduction weierstrass_reduce(const RatFunc<QFunc>& beta, const QFunc& alpha);

// The generic chain, with beta a free symbol.
VerificationReport weierstrass_chain_generic();

enum class DegenerationKind { kAtInfinity, kAtZero };

struct DegenerationModel {
  DegenerationKind kind;
  WeierstrassFibration fibration;  // coefficients in Q(beta)
  VerificationReport chain;
  FPoly at_zero;                   // beta = 0 specialization
};

DegenerationModel degeneration_model(DegenerationKind kind);

// (u, v, lambda) -> (cu u, cv v, cl lambda) acting on omega = dlambda ^ du / v.
struct MonomialAutomorphism {
  NumberField cu, cv, cl;
};

struct FormScaling {
  NumberField scalar;
  int order = 0;  // 0 when not a root of unity of order <= 48
  VerificationReport preserved;
};

FormScaling form_scaling_order(const MonomialAutomorphism& a, const Poly<Rational>& f);

// phi of the beta = 0 model at infinity, over Q(zeta8).
MonomialAutomorphism phi_automorphism();

}  // namespace k3
