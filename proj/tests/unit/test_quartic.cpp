#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/quartic.hpp"

using namespace k3;

namespace {

NumberField nf(long n, long d = 1) { return NumberField(Rational(n, d)); }

std::vector<Rational> stable_panel() {
  std::vector<Rational> out{Rational(81, 49), Rational(5), Rational(-1), Rational(2), Rational(1, 2), Rational(-7, 3)};
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  while (out.size() < 50) {
    Rational a(num(rng), den(rng));
    if (a.is_zero() || a == Rational(1)) continue;
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("quartic at alpha = 81/49") {
  auto fam = build_quartic(Rational(81, 49));
  CHECK(fam.equation.is_homogeneous());
  CHECK(fam.equation.total_degree() == 4);
  CHECK(point_multiplicity(fam.equation, {nf(1), nf(0), nf(0)}) == 2);
  CHECK(fam.equation.specialize(0, nf(1)).specialize(1, nf(0)).specialize(2, nf(0)).is_zero());
}

TEST_CASE("quartic is divisible by y and by the conic") {
  for (auto a : {std::optional<Rational>(), std::optional<Rational>(Rational(81, 49))}) {
    auto fam = build_quartic(a);
    for (const auto& [e, c] : fam.equation.terms()) CHECK(e[1] >= 1);
    auto img = identity_images(fam.ring);
    set_image(img, fam.ring, "z", sym_frac_var(fam.ring, "y") * sym_frac_var(fam.ring, "y") / sym_frac_var(fam.ring, "x"));
    CHECK(sym_is_zero(substitute(fam.equation, img)));
  }
}

TEST_CASE("alpha = 0 has a triple point at (1:0:0)") {
  auto fam = build_quartic(Rational(0));
  CHECK(point_multiplicity(fam.equation, {nf(1), nf(0), nf(0)}) == 3);
  auto nodes = singular_points(Rational(0));
  CHECK(nodes.degenerate);
  CHECK(stability({false, Rational(0)}).reason == "triple point");
}

TEST_CASE("singular points, symbolic alpha") {
  auto nodes = singular_points_symbolic();
  CHECK(nodes.distinct_loci == 5);
  CHECK(!nodes.degenerate);
  CHECK(nodes.qm_discriminant == QFunc(4) - QFunc(4) * QFunc::variable("alpha"));
  CHECK(nodes.points.size() == 3);
}

TEST_CASE("alpha = 1: tangency at (1:-1:1)") {
  auto nodes = singular_points(Rational(1));
  REQUIRE(nodes.qm_points.size() == 1);
  CHECK(nodes.qm_points[0].coords[1] == QFunc(-1));
  CHECK(nodes.qm_points[0].coords[2] == QFunc(1));
  CHECK(nodes.degenerate);
  CHECK(nodes.distinct_loci == 4);
}

TEST_CASE("stability classification") {
  CHECK(stability(AlphaValue::parse("81/49")).stable);
  CHECK(stability(AlphaValue::parse("1")).reason == "tacnode");
  CHECK(stability(AlphaValue::parse("inf")).reason == "tangent at p1");
  CHECK(stability(AlphaValue::parse("5")).stable);
}

TEST_CASE("stable members have five ordinary nodes") {
  for (const auto& a : stable_panel()) {
    CAPTURE(a.to_string());
    auto nodes = singular_points(a);
    CHECK(nodes.distinct_loci == 5);
    auto rep = ordinary_double_points(a);
    CHECK(rep.passed());
    CHECK(rep.checks.size() >= 4);
    CHECK(stability({false, a}).stable == !nodes.degenerate);
  }
  for (long a : {0L, 1L}) CHECK(stability({false, Rational(a)}).stable == !singular_points(Rational(a)).degenerate);
}

TEST_CASE("pencil substitution identity") {
  CHECK(pencil_substitution_check(std::nullopt).passed());
  CHECK(pencil_substitution_check(Rational(81, 49)).passed());
  auto bad = pencil_substitution_check(std::nullopt, Rational(1, 3));
  CHECK(!bad.passed());
  CHECK(bad.checks[0].witness.find("residual") == 0);
  CHECK(bad.checks[0].witness != "residual 0");
}
