#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/curves.hpp"
#include "k3/factor.hpp"
#include "k3/quartic.hpp"

namespace k3 {

// Upsilon: B_alpha x E -> Y_alpha, (rho, tau, z1, w1) -> (1 : rho^2 : z : w)
// with w = tau w1 / (1 + i), (1 + i)^2 = 2i.
struct CoverCheck {
  VerificationReport report;
  std::optional<int> sign;  // s with w^4 = s C_alpha(x, y, z)
};

CoverCheck verify_cover_map(std::optional<Rational> alpha);
// Same check with w = tau w1 (no square root of 2i).
CoverCheck verify_cover_map_without_root(std::optional<Rational> alpha);

struct Parametrization {
  Poly<Rational> x, y, z;  // in r

  static Parametrization make(Poly<Rational> x, Poly<Rational> y, Poly<Rational> z);
  static Parametrization psi();   // x = 49(r-1)^2, ...
  static Parametrization zeta();  // x = 49(r-9)^2, ...
  int degree() const;
};

// r -> (a r + b)/(c r + d), denominators cleared and common factors removed.
Parametrization reparametrize(const Parametrization& p, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d);

Poly<Rational> compose_form(const SymPoly& form, const Parametrization& p);

enum class SplitVerdict { kSplits, kDoesNotSplit, kContainedInBranch };
std::string split_verdict_name(SplitVerdict v);

struct FourthPowerReport {
  SplitVerdict verdict = SplitVerdict::kDoesNotSplit;
  Poly<Rational> composed;
  Factorization<Rational> factors;
  bool constant_fourth_power_in_q = false;
  bool degree_divisible_by_4 = false;
  // conic, L, M composed with P, when the quartic family is known
  std::vector<Poly<Rational>> components;
};

FourthPowerReport fourth_power_test(const SymPoly& form, const Parametrization& p);
FourthPowerReport fourth_power_test(const QuarticFamily& fam, const Parametrization& p);

// Coefficients in Q(t)(I), t^4 = 7, I^2 = -1; functions of r or lambda.
using Tower = NumberFieldTower;
using TFunc = RatFunc<Tower>;
using TPoint = EcPoint<TFunc>;

struct SectionPair {
  TPoint p1, p2;    // on v^2 = u^3 + a u, a = -lambda^3 q^2 as a function of r
  TFunc a;
  TFunc lambda;     // y/x
  Tower fourth_root;  // c^{1/4} with -C o P = c g^4
  int root_choice = 0;
  VerificationReport checks;
};

SectionPair lift_two_section(const Parametrization& p, const Rational& alpha, int root_choice);

struct LambdaSection {
  TPoint point;  // functions of lambda
  TFunc a;       // -lambda^3 q^2
  Rational kappa;  // lambda = kappa r^2
  VerificationReport checks;
};

LambdaSection sum_sections(const SectionPair& pair);

// u = (27+7l)^2 (81+98l+49l^2) / (2^4 7^{7/2}),
// v = (81-7l)(27+7l)(81+98l+49l^2)^2 / (2^6 7^{21/4}).
TPoint golden_section();
VerificationReport compare_golden(const LambdaSection& s);
// Back through z1 = 2u^3/v^2 - 1 to the plane: the image is the curve zeta.
VerificationReport section_to_zeta_check(const LambdaSection& s, const Rational& alpha);
VerificationReport non_torsion_evidence(const LambdaSection& s, int max_multiple = 4);

Tower tower_const(const Rational& q);
Tower tower_t();
Tower tower_i();

}  // namespace k3
