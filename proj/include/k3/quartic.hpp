#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k3/report.hpp"
#include "k3/symbolic.hpp"

namespace k3 {

// alpha in Q or the distinguished value infinity.
struct AlphaValue {
  bool infinite = false;
  Rational value;

  static AlphaValue parse(std::string_view text);  // "p/q" or "inf"
  std::string to_string() const { return infinite ? "inf" : value.to_string(); }
};

// C_alpha = (y^2 - xz) * y * (alpha x + 2y + z). A missing alpha means a free
// parameter, carried as the ring variable "alpha".
struct QuarticFamily {
  std::optional<Rational> alpha;
  Ring ring;  // x, y, z [, alpha]
  SymPoly conic;
  SymPoly line_l;
  SymPoly line_m;
  SymPoly equation;
};

QuarticFamily build_quartic(std::optional<Rational> alpha);

struct ProjPoint {
  std::array<QFunc, 3> coords;
  std::string label;
};

struct NodeList {
  QFunc alpha;                      // constant or the variable alpha
  std::vector<ProjPoint> points;    // Q∩L and L∩M, always rational
  Poly<QFunc> qm_polynomial;        // t^2 + 2t + alpha, points (1:t:t^2)
  QFunc qm_discriminant;            // 4(1 - alpha)
  std::vector<ProjPoint> qm_points; // explicit when the roots are rational
  bool qm_rational = false;
  int distinct_loci = 0;
  bool degenerate = false;
  std::vector<std::string> coincidences;
};

NodeList singular_points(const QFunc& alpha);
NodeList singular_points(const Rational& alpha);
NodeList singular_points_symbolic();

struct Stability {
  bool stable = true;
  std::string reason;  // empty, "tacnode", "triple point", "tangent at p1"
};

Stability stability(const AlphaValue& alpha);

// Multiplicity of the plane curve F = 0 at a point with coordinates in a
// number field (F over Q).
int point_multiplicity(const SymPoly& f, const std::array<NumberField, 3>& p);

// For each node of a stable member: the two branches through it have distinct
// tangent lines. Points of Q∩M are handled in Q(t)/(t^2+2t+alpha) when
// irreducible.
VerificationReport ordinary_double_points(const Rational& alpha);

// lambda(z - lambda^2)(z + 2 lambda + alpha) = 1/4 lambda q^2 (z1^2 - 1) under
// z = c (a - b) z1 + (a + b)/2; c = 1/2 is the correct coefficient.
VerificationReport pencil_substitution_check(std::optional<Rational> alpha, const Rational& c = Rational(1, 2));

}  // namespace k3
