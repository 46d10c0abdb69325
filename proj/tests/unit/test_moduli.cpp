#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "k3/error.hpp"
#include "k3/moduli.hpp"

using namespace k3;

namespace {

using NF = NumberField;

NF gi(long re, long im) { return NF(re) + NF(im) * z8_i(); }

Mat2 random_sl2q(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  Mat2 m = Mat2::identity();
  for (int k = 0; k < 4; ++k) {
    NF t(Rational(num(rng), den(rng)));
    m = m * (k % 2 ? Mat2::of(NF(1), t, NF(0), NF(1)) : Mat2::of(NF(1), NF(0), t, NF(1)));
  }
  long r = num(rng);
  if (r == 0) r = 3;
  NF s(Rational(r, den(rng)));
  return m * Mat2::of(s, NF(0), NF(0), s.inverse());
}

Mat2 random_sl2z_word(std::mt19937& rng, const std::vector<Mat2>& gens) {
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> inv(0, 1);
  Mat2 m = Mat2::identity();
  for (int k = 0; k < 6; ++k) {
    const Mat2& g = gens[pick(rng)];
    m = m * (inv(rng) ? g.inverse() : g);
  }
  return m;
}

}  // namespace

TEST_CASE("identity is in every group") {
  for (Group g : {Group::kSL2Z, Group::kH0, Group::kH2, Group::kSU11, Group::kG0, Group::kGamma})
    CHECK(membership(Mat2::identity(), g).member);
}

TEST_CASE("L' is in Gamma but not in SU(1,1)") {
  const auto& mm = moduli_matrices();
  CHECK(membership(mm.l_prime, Group::kGamma).member);
  auto su = membership(mm.l_prime, Group::kSU11);
  CHECK(!su.member);
  CHECK(su.witness.find("det") == 0);
  CHECK(membership(mm.l, Group::kSU11).member);
  CHECK(!membership(mm.l, Group::kG0).member);
}

TEST_CASE("congruence witnesses") {
  auto r = membership(Mat2::ints(1, 1, 0, 1), Group::kH0);
  CHECK(membership(Mat2::ints(1, 1, 0, 1), Group::kSL2Z).member);
  CHECK(!r.member);
  CHECK(r.witness == "b + c = 1 is odd");
  CHECK(!membership(Mat2::ints(1, 0, 1, 1), Group::kH2).member);
  CHECK(!membership(Mat2::ints(2, 0, 0, 1), Group::kSL2Z).member);
  CHECK(!membership(Mat2::of(gi(1, 1), NF(0), NF(0), NF(1)), Group::kSL2Z).member);
  CHECK(parse_group("H2") == Group::kH2);
  CHECK_THROWS_AS(parse_group("H3"), Error);
}

TEST_CASE("entries outside Q(zeta8) are rejected") {
  NF t = NF::generator(fields::fourth_root7());
  CHECK_THROWS_AS(membership(Mat2::of(t, NF(0), NF(0), t.inverse()), Group::kSL2Z), Error);
}

TEST_CASE("Q(i) entries are accepted") {
  NF i = NF::generator(fields::gaussian());
  CHECK(membership(Mat2::of(-i, NF(0), NF(0), i), Group::kG0).member);
}

TEST_CASE("cayley formula agrees with K M K^-1") {
  for (const auto& g : moduli_matrices().g0_generators) CHECK(cayley(g) == cayley_product(g));
  CHECK(cayley(Mat2::identity()) == Mat2::identity());
  CHECK(cayley(moduli_matrices().l) == moduli_matrices().upsilon_l);
  CHECK_THROWS_AS(cayley(moduli_matrices().l_prime), Error);
}

TEST_CASE("property: cayley round trip on SU(1,1)") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 n = random_sl2q(rng);
    Mat2 m = inverse_cayley(n);
    REQUIRE(membership(m, Group::kSU11).member);
    CHECK(cayley(m) == n);
    CHECK(cayley_product(m) == n);
    CHECK(inverse_cayley(cayley(m)) == m);
  }
}

TEST_CASE("property: cayley is multiplicative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    Mat2 m1 = inverse_cayley(random_sl2q(rng)), m2 = inverse_cayley(random_sl2q(rng));
    CHECK(scalar_equivalent(cayley(m1 * m2), cayley(m1) * cayley(m2)));
  }
}

TEST_CASE("property: groups are closed") {
  const auto& mm = moduli_matrices();
  std::mt19937 rng(29);
  struct Case {
    Group g;
    const std::vector<Mat2>* gens;
  };
  for (Case c : {Case{Group::kH0, &mm.h0_generators}, Case{Group::kH2, &mm.h2_generators}, Case{Group::kG0, &mm.g0_generators}}) {
    for (int trial = 0; trial < 50; ++trial) {
      Mat2 a = random_sl2z_word(rng, *c.gens), b = random_sl2z_word(rng, *c.gens);
      CHECK(membership(a, c.g).member);
      CHECK(membership(a * b, c.g).member);
      CHECK(membership(a.inverse(), c.g).member);
    }
  }
}

TEST_CASE("cayley carries G0 into H0") {
  const auto& mm = moduli_matrices();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Mat2 g = random_sl2z_word(rng, mm.g0_generators);
    CHECK(membership(cayley(g), Group::kH0).member);
    Mat2 h = random_sl2z_word(rng, mm.h0_generators);
    CHECK(membership(inverse_cayley(h), Group::kG0).member);
  }
}

TEST_CASE("fricke checks") {
  auto f = fricke_checks();
  for (const auto& c : f.report.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.pass);
  }
  REQUIRE(f.notes.size() == 1);
  CHECK(f.notes[0].find("fails") != std::string::npos);
  const auto& mm = moduli_matrices();
  CHECK(mm.fricke * mm.fricke == Mat2::ints(-1, 0, 0, -1));
  CHECK(mm.fricke.inverse() * mm.t * mm.upsilon_l * mm.t.inverse() == Mat2::ints(1, 0, -2, 1));
}

TEST_CASE("scalar membership") {
  const auto& mm = moduli_matrices();
  CHECK(membership_up_to_scalar(Mat2::ints(2, 0, 4, 2), Group::kH2).member);
  CHECK(!membership_up_to_scalar(Mat2::ints(2, 0, 0, 1), Group::kSL2Z).member);
  CHECK(!membership_up_to_scalar(mm.upsilon_l.scaled(z8_sqrt2()), Group::kSL2Z).member);
  CHECK(!membership_up_to_scalar(mm.fricke, Group::kSL2Z).member);
  CHECK_THROWS_AS(membership_up_to_scalar(Mat2::identity(), Group::kG0), Error);
}

TEST_CASE("period points") {
  auto p = period_point(NF(1), NF(0));
  CHECK(p.w.is_zero());
  CHECK(p.inside);
  CHECK(p.checks.passed());
  auto b = period_point(NF(1), NF(1));
  CHECK(!b.inside);
  CHECK(b.form_value.is_zero());
  auto q = period_point(NF(2), gi(0, 1));
  CHECK(q.w == gi(0, 1) * NF(Rational(1, 2)));
  CHECK(q.inside);
  CHECK(q.form_value == NF(12));
  CHECK(q.checks.passed());
  CHECK_THROWS_AS(period_point(NF(0), NF(1)), Error);
}

TEST_CASE("property: positivity is |w| < 1") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 100; ++trial) {
    NF z2 = gi(d(rng), d(rng)), z4 = gi(d(rng), d(rng));
    if (z2.is_zero()) continue;
    auto p = period_point(z2, z4);
    CHECK(p.checks.passed());
    NF n = p.w * fields::conjugate(p.w);
    CHECK(p.inside == (n.base_value() < Rational(1)));
  }
}

TEST_CASE("gaussian form") {
  CHECK(gaussian_form_check().passed());
  auto q = [](NF z, NF w) { return NF(2) * (z * fields::conjugate(z) - w * fields::conjugate(w)); };
  CHECK(q(NF(1), NF(0)) == NF(2));
  CHECK(q(gi(0, 1), NF(0)) == NF(2));
  CHECK(q(gi(1, 1), NF(1)) == NF(2));
}
