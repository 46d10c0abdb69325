#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/covers.hpp"

using namespace k3;

namespace {

using QP = Poly<Rational>;

QP qp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QP("r", v);
}

std::map<std::string, int> profile(const FourthPowerReport& rep) {
  std::map<std::string, int> out;
  for (const auto& f : rep.factors.factors) out[f.factor.to_string()] = f.multiplicity;
  return out;
}

bool rescaled(const QP& a, const QP& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading() == b * a.leading();
}

}  // namespace

TEST_CASE("Upsilon lands on the quartic") {
  auto sym = verify_cover_map(std::nullopt);
  CHECK(sym.report.passed());
  REQUIRE(sym.sign);
  CHECK(*sym.sign == 1);
  for (Rational a : {Rational(81, 49), Rational(2), Rational(-3), Rational(5, 7), Rational(7, 3)}) {
    auto c = verify_cover_map(a);
    CHECK(c.report.passed());
    CHECK(c.sign == sym.sign);
  }
}

TEST_CASE("Upsilon without the square root of 2i fails") {
  auto c = verify_cover_map_without_root(Rational(81, 49));
  CHECK(!c.report.passed());
  CHECK(!c.sign);
  CHECK(!verify_cover_map_without_root(std::nullopt).report.passed());
}

TEST_CASE("psi splits") {
  auto rep = fourth_power_test(build_quartic(Rational(81, 49)), Parametrization::psi());
  CHECK(rep.verdict == SplitVerdict::kSplits);
  std::map<std::string, int> want{{"r", 4}, {"r - 1", 4}, {"r^2 + (-2/3)*r + 1", 4}};
  CHECK(profile(rep) == want);
  CHECK(rep.factors.constant == Rational(-36006768));
  CHECK(!rep.constant_fourth_power_in_q);
  CHECK(rep.degree_divisible_by_4);
  REQUIRE(rep.components.size() == 3);
  QP r = qp({0, 1}), rm1 = qp({-1, 1}), s = qp({3, -2, 3});
  CHECK(rep.components[0] == qp({-2352}) * r * r * rm1 * rm1 * s);
  CHECK(rep.components[1] == qp({63}) * r * r * rm1 * rm1);
  CHECK(rep.components[2] == qp({3}) * s * s * s);
}

TEST_CASE("zeta splits") {
  auto rep = fourth_power_test(build_quartic(Rational(81, 49)), Parametrization::zeta());
  CHECK(rep.verdict == SplitVerdict::kSplits);
  std::map<std::string, int> want{{"r", 4}, {"r - 9", 4}, {"r + 3", 4}};
  CHECK(profile(rep) == want);
  QP r = qp({0, 1}), rm9 = qp({-9, 1}), rp3 = qp({3, 1});
  REQUIRE(rep.components.size() == 3);
  CHECK(rep.components[0] == qp({-112896}) * r * r * r * rm9 * rm9);
  CHECK(rep.components[1] == qp({63}) * r * rm9 * rm9);
  CHECK(rep.components[2] == qp({81}) * rp3 * rp3 * rp3 * rp3);
}

TEST_CASE("splitting depends on alpha") {
  auto rep = fourth_power_test(build_quartic(Rational(2)), Parametrization::psi());
  CHECK(rep.verdict == SplitVerdict::kDoesNotSplit);
}

TEST_CASE("curves inside the branch locus") {
  auto line = Parametrization::make(qp({1}), qp({0}), qp({0, 1}));
  CHECK(fourth_power_test(build_quartic(Rational(81, 49)), line).verdict == SplitVerdict::kContainedInBranch);
  auto conic = Parametrization::make(qp({1}), qp({0, 1}), qp({0, 0, 1}));
  CHECK(fourth_power_test(build_quartic(Rational(3)), conic).verdict == SplitVerdict::kContainedInBranch);
}

TEST_CASE("parametrization preconditions") {
  CHECK_THROWS_AS(Parametrization::make(qp({1}), qp({2}), qp({3})), Error);
  CHECK_THROWS_AS(Parametrization::make(qp({0, 1}), qp({0, 0, 1}), qp({0, 2})), Error);
  CHECK_THROWS_AS(reparametrize(Parametrization::psi(), Rational(1), Rational(2), Rational(2), Rational(4)), Error);
  CHECK_THROWS_AS(lift_two_section(Parametrization::psi(), Rational(2), 0), Error);
  CHECK_THROWS_AS(lift_two_section(Parametrization::psi(), Rational(81, 49), 4), Error);
}

TEST_CASE("generic quartic against generic lines") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-9, 9);
  Ring ring({"x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    SymPoly f = sym_const(ring, NumberField(0));
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) {
        SymPoly m = sym_const(ring, NumberField(d(rng)));
        m = m * pow(sym_var(ring, "x"), a) * pow(sym_var(ring, "y"), b) * pow(sym_var(ring, "z"), 4 - a - b);
        f = f + m;
      }
    }
    f = f + pow(sym_var(ring, "x"), 4) * sym_const(ring, NumberField(1)) + pow(sym_var(ring, "z"), 3) * sym_var(ring, "y");
    auto line = Parametrization::make(qp({d(rng), 1}), qp({d(rng), d(rng) | 1}), qp({1, d(rng)}));
    auto rep = fourth_power_test(f, line);
    if (rep.verdict == SplitVerdict::kContainedInBranch) continue;
    bool has_simple = false;
    for (const auto& fac : rep.factors.factors) has_simple = has_simple || fac.multiplicity % 4 != 0;
    CHECK(rep.verdict == (has_simple ? SplitVerdict::kDoesNotSplit : SplitVerdict::kSplits));
    CHECK(rep.verdict == SplitVerdict::kDoesNotSplit);
  }
}

TEST_CASE("property: splitting is invariant under reparametrization") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-7, 7);
  QuarticFamily fam = build_quartic(Rational(81, 49));
  int done = 0;
  while (done < 50) {
    Rational a(d(rng)), b(d(rng)), c(d(rng)), e(d(rng));
    if ((a * e - b * c).is_zero()) continue;
    for (const auto& base : {Parametrization::psi(), Parametrization::zeta()}) {
      auto p = reparametrize(base, a, b, c, e);
      auto rep = fourth_power_test(fam, p);
      CHECK(rep.verdict == SplitVerdict::kSplits);
      int total = 0;
      for (const auto& f : rep.factors.factors) total += f.factor.degree() * f.multiplicity;
      int at_infinity = 4 * p.degree() - total;
      CHECK(at_infinity % 4 == 0);
      CHECK(rep.degree_divisible_by_4);
    }
    ++done;
  }
}

TEST_CASE("reparametrization by the identity") {
  auto p = reparametrize(Parametrization::psi(), Rational(1), Rational(0), Rational(0), Rational(1));
  auto q = Parametrization::psi();
  CHECK(rescaled(p.x, q.x));
  CHECK(rescaled(p.y, q.y));
  CHECK(rescaled(p.z, q.z));
}

TEST_CASE("two sections over the pull-back") {
  auto pair = lift_two_section(Parametrization::psi(), Rational(81, 49), 2);
  CHECK(pair.checks.passed());
  CHECK(pair.lambda == TFunc(Poly<Tower>("r", {tower_const(Rational(0)), tower_const(Rational(0)), tower_const(Rational(9, 7))})));
  CHECK(pair.fourth_root * pair.fourth_root * pair.fourth_root * pair.fourth_root == tower_const(Rational(36006768)));
  CHECK(!(pair.p1.u == pair.p2.u));
}

TEST_CASE("root choices differ by w -> i w") {
  auto p0 = lift_two_section(Parametrization::psi(), Rational(81, 49), 0);
  TFunc i(Poly<Tower>::constant(tower_i(), "r"));
  for (int k = 1; k < 4; ++k) {
    auto pk = lift_two_section(Parametrization::psi(), Rational(81, 49), k);
    CHECK(pk.checks.passed());
    TFunc su = p0.p1.u, sv = p0.p1.v;
    for (int j = 0; j < k; ++j) {
      su = -su;
      sv = i * sv;
    }
    CHECK(pk.p1.u == su);
    CHECK(pk.p1.v == sv);
  }
}

TEST_CASE("the section in lambda") {
  auto s = sum_sections(lift_two_section(Parametrization::psi(), Rational(81, 49), 2));
  CHECK(s.checks.passed());
  CHECK(s.kappa == Rational(9, 7));
  CHECK(compare_golden(s).passed());
  CHECK(section_to_zeta_check(s, Rational(81, 49)).passed());
  CHECK(non_torsion_evidence(s).passed());
  TPoint g = golden_section();
  CHECK(ec_on_curve(g, s.a));
}

TEST_CASE("root choice 0 gives -v") {
  auto s = sum_sections(lift_two_section(Parametrization::psi(), Rational(81, 49), 0));
  auto rep = compare_golden(s);
  CHECK(rep.checks[0].pass);
  CHECK(!rep.checks[1].pass);
  CHECK(rep.checks[1].witness == "equals -v (other root choice)");
  CHECK(section_to_zeta_check(s, Rational(81, 49)).passed());
}

TEST_CASE("a corrupted section is caught") {
  auto s = sum_sections(lift_two_section(Parametrization::psi(), Rational(81, 49), 2));
  s.point.u = s.point.u + TFunc(Poly<Tower>::constant(tower_const(Rational(1)), "lambda"));
  CHECK(!ec_on_curve(s.point, s.a));
  CHECK(!compare_golden(s).passed());
  CHECK(!section_to_zeta_check(s, Rational(81, 49)).passed());
}
