#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/factor.hpp"
#include "k3/fields.hpp"
#include "k3/multipoly.hpp"
#include "k3/numeric.hpp"

using namespace k3;

namespace {

using QP = Poly<Rational>;
using MP = MultiPoly<Rational>;

QP qpoly(std::vector<long> c, const char* var = "x") {
  std::vector<Rational> v(c.begin(), c.end());
  return QP(var, v);
}

QP random_qpoly(std::mt19937& rng, int deg, const char* var = "x") {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(d(rng));
  if (c.back().is_zero()) c.back() = Rational(1);
  return QP(var, c);
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/-4").to_string() == "-3/2");
  CHECK(Rational::parse(" 0/7 ").to_string() == "0");
  CHECK(Rational::parse("81/49") == Rational(81, 49));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(rational_fourth_root(Rational(16, 81)) == Rational(2, 3));
  CHECK(!rational_sqrt(Rational(2)).has_value());
}

TEST_CASE("gaussian field arithmetic") {
  auto i = NumberField::generator(fields::gaussian());
  NumberField one(1);
  CHECK((one + i) * (one - i) == NumberField(2));
  CHECK((one + i).inverse() == (one - i) * NumberField(Rational(1, 2)));
  CHECK(((one + i) * (one + i).inverse()) == one);
  CHECK(i * i == NumberField(-1));
  CHECK(fields::conjugate(one + i) == one - i);
  CHECK(fields::imag_part(NumberField(3) + i * NumberField(5)) == NumberField(5));
  CHECK_THROWS_AS(NumberField() / NumberField(), Error);
}

TEST_CASE("fourth root of seven") {
  auto t = NumberField::generator(fields::fourth_root7());
  CHECK(t * t * t * t == NumberField(7));
  CHECK((t * t) * (t * t) == NumberField(7));
  CHECK(t.pow(-1) * t == NumberField(1));
}

TEST_CASE("zeta8 contains i and sqrt2") {
  auto i = fields::i_in_zeta8();
  auto s = fields::sqrt2_in_zeta8();
  CHECK(i * i == NumberField(-1));
  CHECK(s * s == NumberField(2));
  CHECK(fields::conjugate(s) == s);
  CHECK(fields::conjugate(i) == -i);
  auto z = NumberField::generator(fields::zeta8());
  CHECK(z.pow(8) == NumberField(1));
  CHECK(z.pow(4) == NumberField(-1));
}

TEST_CASE("reducible modulus yields a witness") {
  auto ctx = NumberField::make_context("u", qpoly({-1, 0, 1}, "u"));
  auto u = NumberField::generator(ctx);
  CHECK_THROWS_AS((u - NumberField(1)).inverse(), ReducibilityWitness);
}

TEST_CASE("tower Q(t)(I)") {
  auto base = fields::fourth_root7();
  auto ictx = fields::gaussian_over(base);
  auto I = AlgExt<NumberField>::generator(ictx);
  AlgExt<NumberField> t(NumberField::generator(base));
  CHECK(I * I == AlgExt<NumberField>(NumberField(-1)));
  auto w = t * (AlgExt<NumberField>(NumberField(1)) + I);
  CHECK(w.pow(4) == AlgExt<NumberField>(NumberField(-28)));
  CHECK(w * w.inverse() == AlgExt<NumberField>(NumberField(1)));
}

TEST_CASE("polynomial gcd") {
  QP r = QP::variable("r");
  QP one = QP::constant(1, "r");
  QP a = pow(r - one, 4) * pow(r, 4);
  QP b = pow(r - one, 2) * pow(r, 3);
  CHECK(gcd(a, b) == b.monic());
  CHECK(gcd(a * Rational(3), QP("r")) == a.monic());
  CHECK(gcd(QP("r"), QP("r")).is_zero());

  QFunc alpha = QFunc::variable("alpha");
  using AP = Poly<QFunc>;
  AP lam = AP::variable("lambda");
  AP q = lam * lam + lam * QFunc(2) + AP::constant(alpha, "lambda");
  CHECK(gcd(pow(lam, 3) * pow(q, 2), lam * lam) == lam * lam);
}

TEST_CASE("squarefree decomposition") {
  QFunc alpha = QFunc::variable("alpha");
  using AP = Poly<QFunc>;
  AP lam = AP::variable("lambda");
  AP q = lam * lam + lam * QFunc(2) + AP::constant(alpha, "lambda");
  auto d = squarefree_decompose(pow(lam, 3) * pow(q, 2));
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].factor == q);
  CHECK(d.factors[0].multiplicity == 2);
  CHECK(d.factors[1].factor == lam);
  CHECK(d.factors[1].multiplicity == 3);

  QP mu = QP::variable("mu");
  auto e = squarefree_decompose(pow(mu, 3) * pow(mu + QP::constant(2), 2));
  REQUIRE(e.factors.size() == 2);
  CHECK(e.factors[0].factor == mu + QP::constant(2));
  CHECK(e.factors[1].factor == mu);

  CHECK(squarefree_decompose(QP::constant(5)).factors.empty());
}

TEST_CASE("squarefree round trip on random products") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(1, 3), mult(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    QP p = QP::constant(Rational(trial % 5 + 1));
    for (int k = 0; k < 3; ++k) p = p * pow(random_qpoly(rng, deg(rng)), static_cast<unsigned>(mult(rng)));
    auto d = squarefree_decompose(p);
    CHECK(d.expand("x") == p);
    for (std::size_t a = 0; a < d.factors.size(); ++a) {
      CHECK(is_squarefree(d.factors[a].factor));
      CHECK(d.factors[a].factor.leading() == Rational(1));
      for (std::size_t b = a + 1; b < d.factors.size(); ++b) {
        CHECK(gcd(d.factors[a].factor, d.factors[b].factor).degree() == 0);
      }
    }
  }
}

TEST_CASE("gcd divides both inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    QP common = random_qpoly(rng, trial % 3);
    QP p = common * random_qpoly(rng, 2);
    QP q = common * random_qpoly(rng, 3);
    QP g = gcd(p, q);
    CHECK((p % g).is_zero());
    CHECK((q % g).is_zero());
    CHECK(g.degree() <= std::min(p.degree(), q.degree()));
    CHECK(g.degree() >= common.degree());
  }
}

TEST_CASE("factorization over Q") {
  QP r = QP::variable("r");
  QP p = pow(r - QP::constant(1, "r"), 4) * pow(r, 4) * pow(qpoly({3, -2, 3}, "r"), 4) * Rational(-444528);
  auto f = factor_over_q(p);
  CHECK(f.constant == Rational(-444528 * 81));
  REQUIRE(f.factors.size() == 3);
  for (const auto& x : f.factors) {
    CHECK(x.multiplicity == 4);
    CHECK(x.irreducible);
  }
  CHECK(f.factors[2].factor == qpoly({3, -2, 3}, "r").monic());
  CHECK(rational_roots(qpoly({-3, 5, -2})) == std::vector<Rational>{Rational(1), Rational(3, 2)});
}

TEST_CASE("quotient reduction examples") {
  Ring ring({"tau", "rho"});
  MP tau = MP::variable(ring, "tau"), rho = MP::variable(ring, "rho");
  MP h = rho * (pow(rho, 4) + MP::constant(ring, 2) * rho * rho + MP::constant(ring, 3));
  QuotientContext<Rational> ctx(ring);
  ctx.add_relation("tau", 2, h);
  CHECK(ctx.reduce(pow(tau, 3)) == h * tau);

  Ring e({"w1", "z1"});
  MP w1 = MP::variable(e, "w1"), z1 = MP::variable(e, "z1");
  QuotientContext<Rational> ce(e);
  ce.add_relation("w1", 4, z1 * z1 - MP::constant(e, 1));
  CHECK(ce.reduce(pow(w1, 5)) == (z1 * z1 - MP::constant(e, 1)) * w1);

  Ring ep({"y", "x"});
  MP y = MP::variable(ep, "y"), x = MP::variable(ep, "x");
  QuotientContext<Rational> cp(ep);
  cp.add_relation("y", 2, pow(x, 3) - x);
  CHECK(cp.reduce(y * y - pow(x, 3) + x).is_zero());
}

TEST_CASE("quotient context rejects bad systems") {
  Ring ring({"a", "b"});
  MP a = MP::variable(ring, "a"), b = MP::variable(ring, "b");
  QuotientContext<Rational> c1(ring);
  CHECK_THROWS_AS(c1.add_relation("a", 2, a + b), Error);
  QuotientContext<Rational> c2(ring);
  c2.add_relation("a", 2, b);
  CHECK_THROWS_AS(c2.add_relation("a", 3, b), Error);
  QuotientContext<Rational> c3(ring);
  c3.add_relation("a", 2, b);
  CHECK_THROWS_AS(c3.add_relation("b", 2, a), Error);
}

TEST_CASE("quotient reduce is idempotent and multiplicative") {
  Ring ring({"v", "w", "x"});
  MP v = MP::variable(ring, "v"), w = MP::variable(ring, "w"), x = MP::variable(ring, "x");
  QuotientContext<Rational> ctx(ring);
  ctx.add_relation("v", 2, w * x + MP::constant(ring, 1));
  ctx.add_relation("w", 3, x * x - MP::constant(ring, 2));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> e(0, 5), c(-4, 4);
  auto random_mp = [&] {
    MP p(ring);
    for (int k = 0; k < 4; ++k) {
      p += MP::monomial(ring, {static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng) % 3)},
                        Rational(c(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 60; ++trial) {
    MP a = random_mp(), b = random_mp();
    MP ra = ctx.reduce(a);
    CHECK(ctx.reduce(ra) == ra);
    CHECK(ra.degree_in(0) < 2);
    CHECK(ra.degree_in(1) < 3);
    CHECK(ctx.reduce(a * b) == ctx.reduce(ra * ctx.reduce(b)));
  }
}

TEST_CASE("fraction substitution") {
  Ring ring({"x", "y"});
  MP x = MP::variable(ring, "x"), y = MP::variable(ring, "y");
  MP p = x * x + y;
  MultiFrac<Rational> fx(y, x + MP::constant(ring, 1));
  MultiFrac<Rational> fy(x);
  auto s = substitute(p, {fx, fy});
  MultiFrac<Rational> expect = fx * fx + fy;
  QuotientContext<Rational> free(ring);
  CHECK(free.equal(s, expect));
}

TEST_CASE("MPFR wrapper basics") {
  Real two(2, 128);
  Real s = sqrt(two);
  Real err = abs(s * s - two);
  CHECK(err < Real::two_pow(-120, 128));
  Complex z(Real(-4, 128), Real(128));
  Complex r = sqrt(z);
  CHECK(abs(r.re) < Real::two_pow(-100, 128));
  CHECK(abs(r.im - two) < Real::two_pow(-100, 128));
  Real copy = s;
  CHECK(copy.precision() == 128);
}
