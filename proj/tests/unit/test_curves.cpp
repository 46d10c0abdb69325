#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/curves.hpp"
#include "k3/fields.hpp"
#include "k3/periods.hpp"

using namespace k3;

namespace {

using QP = Poly<Rational>;
using Pt = EcPoint<Rational>;

QP cubic(long c0, long c1, long c2, long c3 = 1) { return QP("x", {Rational(c0), Rational(c1), Rational(c2), Rational(c3)}); }

Complex quad_point(const Rational& re, const Rational& im_sq, int bits) {
  Complex z = complex_from(re, Rational(0), bits);
  z.im = sqrt(Real(im_sq, bits));
  return z;
}

}  // namespace

TEST_CASE("quotient map f and its corruption") {
  CHECK(verify_map(quotient_map_f()).passed());
  CurveMap bad = quotient_map_f();
  const Ring& r = named_curves().ring_b;
  SymFrac c = sym_frac(r, NumberField(2)) * (sym_frac(r, NumberField(1)) + pow(sym_frac_var(r, "beta"), 4));
  bad.images["v"] = c * sym_frac_var(r, "tau");
  auto rep = verify_map(bad);
  CHECK(!rep.passed());
  CHECK(rep.checks[0].witness != "residual 0");
}

TEST_CASE("E' is isomorphic to E") {
  CHECK(verify_map(e_prime_to_e()).passed());
  CHECK(verify_map(e_prime_to_e_beta_79()).passed());
}

TEST_CASE("involutions and order-4 maps") {
  CHECK(verify_involution(involution_iota()).passed());
  auto ip = verify_involution(involution_iota_prime());
  CHECK(!ip.passed());
  CHECK(verify_map(involution_iota_prime()).passed());
  CHECK(map_order(involution_iota_prime()) == 4);
  CHECK(verify_involution(e_prime_reflection()).passed());
  CHECK(verify_map(e_prime_automorphism()).passed());
  CHECK(map_order(e_prime_automorphism()) == 4);
  CHECK(verify_map(e_order4()).passed());
  CHECK(map_order(e_order4()) == 4);
  CHECK(map_order(involution_iota()) == 2);
}

TEST_CASE("iota' squared is the hyperelliptic involution") {
  CurveMap sq = compose(involution_iota_prime(), involution_iota_prime());
  const auto& b = named_curves().b_beta;
  CHECK(b.ctx.equal(sq.images["tau"], -sym_frac_var(named_curves().ring_b, "tau")));
  CHECK(b.ctx.equal(sq.images["rho"], sym_frac_var(named_curves().ring_b, "rho")));
}

TEST_CASE("f composed with iota is f followed by negation") {
  CurveMap fi = compose(quotient_map_f(), involution_iota());
  CurveMap f = quotient_map_f();
  const auto& b = named_curves().b_beta;
  CHECK(b.ctx.equal(fi.images["u"], f.images["u"]));
  CHECK(b.ctx.equal(fi.images["v"], -f.images["v"]));
}

TEST_CASE("specializing beta keeps f valid") {
  const auto& pc = named_curves();
  for (long bv : {1L, 2L, -3L, 5L}) {
    CurveMap f = quotient_map_f();
    auto img = identity_images(pc.ring_b);
    set_image(img, pc.ring_b, "beta", sym_frac(pc.ring_b, NumberField(bv)));
    SymFrac pb = pullback(pc.e_beta.equation, pc.ring_e, f.images, pc.ring_b);
    SymFrac spec = substitute(pb, img);
    SymContext sctx(pc.ring_b);
    sctx.add_relation("tau", 2, pc.b_beta.ctx.relations()[0].replacement.specialize(pc.ring_b.index("beta"), NumberField(bv)));
    CHECK(sctx.reduce(spec.num).is_zero());
  }
}

TEST_CASE("j-invariants") {
  CHECK(j_invariant(cubic(0, -1, 0)) == Rational(1728));
  CHECK(j_invariant(cubic(-1, 0, 0)) == Rational(0));
  CHECK(j_invariant(QP("u", {Rational(0), Rational(32, 9), Rational(4), Rational(1)})) == Rational(1728));
  CHECK_THROWS_AS(j_invariant(cubic(0, 0, 0)), Error);
  QFunc b4 = QFunc::variable("b4");
  QFunc j = j_invariant_cubic(QFunc(1), QFunc(4), QFunc(2) * (QFunc(1) + b4), QFunc(0));
  CHECK(j(Rational(7, 9)) == Rational(1728));
  CHECK(!j.is_constant());
}

TEST_CASE("ec_add basics") {
  Rational a(-1);
  Pt p0{false, Rational(0), Rational(0)}, p1{false, Rational(1), Rational(0)}, pm{false, Rational(-1), Rational(0)};
  CHECK(ec_add(p0, p1, a) == pm);
  CHECK(ec_add(p0, Pt::zero(), a) == p0);
  CHECK(ec_add(p0, p0, a).infinity);
  Pt q{false, Rational(2), Rational(2)};
  Rational a2(-2);
  CHECK(ec_add(q, ec_neg(q), a2).infinity);
  CHECK(ec_on_curve(ec_add(q, q, a2), a2));
}

TEST_CASE("property: ec_add associativity and commutativity") {
  Rational a(-1);
  std::vector<Pt> tors{Pt::zero(), {false, Rational(0), Rational(0)}, {false, Rational(1), Rational(0)}, {false, Rational(-1), Rational(0)}};
  for (const auto& p : tors) {
    for (const auto& q : tors) {
      CHECK(ec_add(p, q, a) == ec_add(q, p, a));
      for (const auto& r : tors) CHECK(ec_add(ec_add(p, q, a), r, a) == ec_add(p, ec_add(q, r, a), a));
    }
  }
  Rational a2(-2);
  Pt g{false, Rational(2), Rational(2)};
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> k(-4, 4);
  for (int n = 0; n < 50; ++n) {
    Pt p = ec_add(ec_mul(k(rng), g, a2), tors[1], a2);
    Pt q = ec_mul(k(rng), g, a2);
    Pt r = ec_add(ec_mul(k(rng), g, a2), tors[1], a2);
    CHECK(ec_on_curve(p, a2));
    CHECK(ec_add(p, q, a2) == ec_add(q, p, a2));
    Pt lhs = ec_add(ec_add(p, q, a2), r, a2);
    CHECK(lhs == ec_add(p, ec_add(q, r, a2), a2));
    CHECK(ec_on_curve(lhs, a2));
  }
}

TEST_CASE("hyperelliptic genus") {
  QFunc al = QFunc::variable("alpha");
  Poly<QFunc> h("rho", {QFunc(0), al, QFunc(0), QFunc(2), QFunc(0), QFunc(1)});
  CHECK(hyperelliptic_genus(h) == 2);
  CHECK(hyperelliptic_genus(cubic(0, -1, 0)) == 1);
  QP h1("rho", {Rational(0), Rational(1), Rational(0), Rational(2), Rational(0), Rational(1)});
  CHECK_THROWS_AS(hyperelliptic_genus(h1), Error);
}

TEST_CASE("differential decomposition") {
  auto d1 = pullback_differential(quotient_map_f());
  auto d2 = pullback_differential(compose(quotient_map_f(), involution_iota_prime()));
  NumberField i = NumberField::generator(fields::gaussian());
  CHECK(d1.c0 == NumberField(-1));
  CHECK(d1.c1 == NumberField(-1));
  CHECK(d2.c0 == -i);
  CHECK(d2.c1 == i);
  NumberField det = d1.c0 * d2.c1 - d1.c1 * d2.c0;
  CHECK(det == NumberField(-2) * i);
  CurveMap id{"id", &named_curves().e_beta, &named_curves().e_beta, {}};
  auto d3 = pullback_differential(id);
  CHECK(d3.c0 == NumberField(1));
  CHECK(d3.c1.is_zero());
}

TEST_CASE("period ratio of y^2 = x^3 - x") {
  auto pr = period_ratio_cubic(cubic(0, -1, 0), 128);
  CHECK(abs(pr.tau - complex_from(Rational(0), Rational(1), 128)).to_double() < 1e-12);
  CHECK(pr.error_bound < Real::two_pow(8 - 128, 128));
  CHECK(std::abs(j_from_tau(pr.tau).re.to_double() - 1728) < 1e-20);
  CHECK_THROWS_AS(period_ratio_cubic(cubic(0, 0, 0), 128), Error);
  CHECK_THROWS_AS(period_ratio_cubic(cubic(0, -1, 0), 32), Error);
}

TEST_CASE("synthetic lattice Z + 2iZ") {
  Complex t = complex_from(Rational(0), Rational(2), 160);
  auto pr = period_ratio_numeric(roots_for_tau(t, 160), 128);
  CHECK(abs(pr.tau - complex_from(Rational(0), Rational(2), 128)).to_double() < 1e-30);
  auto cm = cm_isogeny_check(pr.tau, 10, pr.error_bound);
  CHECK(cm.verdict == CmVerdict::kIsogenousToE);
  CHECK(cm.conductor == 2);
}

TEST_CASE("E_beta at beta^4 = 7/9") {
  auto pr = period_ratio_cubic(QP("u", {Rational(0), Rational(32, 9), Rational(4), Rational(1)}), 128);
  CHECK(abs(pr.tau - complex_from(Rational(0), Rational(1), 128)).to_double() < 1e-12);
  CHECK(std::abs(j_from_tau(pr.tau).re.to_double() - 1728) < 1e-15);
  auto cm = cm_isogeny_check(pr.tau, 10, pr.error_bound);
  CHECK(cm.verdict == CmVerdict::kIsogenousToE);
  CHECK(cm.conductor == 1);
}

TEST_CASE("CM check on known points") {
  Real err = Real::two_pow(-120, 128);
  auto ti = cm_isogeny_check(complex_from(Rational(0), Rational(1), 128), 10, err);
  CHECK(ti.verdict == CmVerdict::kIsogenousToE);
  CHECK(ti.conductor == 1);
  auto rho = cm_isogeny_check(quad_point(Rational(1, 2), Rational(3, 4), 128), 10, err);
  CHECK(rho.verdict == CmVerdict::kNotDetected);
  CHECK(rho.discriminant == -3);
  auto loose = cm_isogeny_check(complex_from(Rational(0), Rational(1), 128), 10, Real(Rational(1, 1000), 128));
  CHECK(loose.verdict == CmVerdict::kInconclusive);
}

TEST_CASE("property: no false positives outside Q(i)") {
  Real err = Real::two_pow(-120, 160);
  for (long d : {3L, 7L, 8L, 11L, 12L, 15L, 19L, 20L, 23L, 24L, 27L, 28L, 35L, 40L, 43L, 51L, 52L, 67L, 88L, 163L}) {
    Rational re = d % 4 == 0 ? Rational(0) : Rational(1, 2);
    Rational im = d % 4 == 0 ? Rational(d / 4) : Rational(d, 4);
    auto r = cm_isogeny_check(quad_point(re, im, 160), 50, err);
    CAPTURE(d);
    CHECK(r.verdict != CmVerdict::kIsogenousToE);
  }
  for (long m : {1L, 2L, 3L, 4L, 5L}) {
    auto r = cm_isogeny_check(complex_from(Rational(0), Rational(m), 160), 10, err);
    CHECK(r.verdict == CmVerdict::kIsogenousToE);
    CHECK(r.conductor == m);
  }
}

TEST_CASE("property: synthetic period round trip") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> re(-2000, 2000), im(300, 2500);
  for (int n = 0; n < 50; ++n) {
    Complex t = complex_from(Rational(re(rng), 1000), Rational(im(rng), 1000), 192);
    auto e = roots_for_tau(t, 192);
    std::swap(e[n % 3], e[(n + 1) % 3]);
    auto pr = period_ratio_numeric(e, 128);
    Complex jt = j_from_tau(t), jp = j_from_tau(pr.tau);
    CHECK(abs(jt - jp).to_double() < 1e-20 * (1 + abs(jt).to_double()));
  }
}

TEST_CASE("property: AGM error shrinks with precision") {
  for (const auto& c : {cubic(0, -1, 0), cubic(0, -2, 0), cubic(-1, 0, 0), cubic(1, 1, 1)}) {
    for (int p : {64, 96, 128}) {
      auto lo = period_ratio_cubic(c, p);
      auto hi = period_ratio_cubic(c, 2 * p);
      CHECK(lo.error_bound < Real::two_pow(8 - p, p));
      CHECK(hi.error_bound * Real::two_pow(p / 2, 2 * p) <= lo.error_bound);
    }
  }
}
