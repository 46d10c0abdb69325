#include "k3/covers.hpp"

#include "k3/fields.hpp"

namespace k3 {

namespace {

using QP = Poly<Rational>;

QP qp(std::vector<long> c) {
  std::vector<Rational> v(c.begin(), c.end());
  return QP("r", v);
}

NFContext tower_base() { return fields::fourth_root7(); }

AlgExt<NumberField>::ContextPtr tower_ctx() {
  static const auto ctx = fields::gaussian_over(tower_base());
  return ctx;
}

TFunc lift(const QP& p) {
  return TFunc(p.map_coeffs([](const Rational& c) { return tower_const(c); }).with_var("r"));
}

TFunc tconst(const Tower& c) { return TFunc(Poly<Tower>::constant(c, "r")); }

TFunc neg_r(const TFunc& f) { return f.compose(TFunc(Poly<Tower>::monomial("r", tower_const(Rational(-1)), 1))); }

std::string brief(const std::string& s) { return s.size() > 240 ? s.substr(0, 240) + "..." : s; }

CoverCheck cover_check(std::optional<Rational> alpha, bool with_root) {
  CoverCheck out;
  Ring r = alpha ? Ring({"rho", "tau", "z1", "w1"}) : Ring({"rho", "tau", "z1", "w1", "alpha"});
  NumberField i = NumberField::generator(fields::gaussian());
  auto k = [&](const NumberField& c) { return sym_const(r, c); };
  SymPoly rho = sym_var(r, "rho"), z1 = sym_var(r, "z1");
  SymPoly al = alpha ? k(NumberField(*alpha)) : sym_var(r, "alpha");
  SymPoly q = pow(rho, 4) + k(NumberField(2)) * rho * rho + al;
  SymContext ctx(r);
  ctx.add_relation("tau", 2, rho * q);
  ctx.add_relation("w1", 4, z1 * z1 - k(NumberField(1)));

  QuarticFamily fam = build_quartic(alpha);
  SymFrac half = sym_frac(r, NumberField(Rational(1, 2)));
  std::map<std::string, SymFrac> img{
      {"x", sym_frac(r, NumberField(1))},
      {"y", SymFrac(rho * rho)},
      {"z", half * SymFrac(q) * SymFrac(z1) + half * SymFrac(pow(rho, 4) - k(NumberField(2)) * rho * rho - al)},
  };
  SymFrac c = pullback(fam.equation, fam.ring, img, r);
  SymFrac w = sym_frac_var(r, "tau") * sym_frac_var(r, "w1");
  if (with_root) w = w / sym_frac(r, NumberField(1) + i);
  SymFrac w4 = pow(w, 4);
  std::string label = with_root ? "Upsilon: w = tau w1 / sqrt(2i)" : "Upsilon without sqrt(2i): w = tau w1";
  std::string where = alpha ? " at alpha = " + alpha->to_string() : " (symbolic alpha)";
  std::string witness;
  for (int s : {1, -1}) {
    SymPoly res = ctx.reduce((w4 - sym_frac(r, NumberField(s)) * c).num);
    if (res.is_zero()) {
      out.sign = s;
      break;
    }
    witness += std::string(s > 0 ? "w^4 - C" : "w^4 + C") + " residual " + brief(res.to_string()) + "; ";
  }
  if (out.sign) {
    out.report.add(label + where, true, std::string("residual 0 with w^4 = ") + (*out.sign > 0 ? "+" : "-") + "C_alpha(x, y, z)");
  } else {
    out.report.add(label + where, false, witness);
  }
  return out;
}

}  // namespace

Tower tower_const(const Rational& q) { return Tower(NumberField(q)); }
Tower tower_t() { return Tower(NumberField::generator(tower_base())); }
Tower tower_i() { return Tower::generator(tower_ctx()); }

CoverCheck verify_cover_map(std::optional<Rational> alpha) { return cover_check(alpha, true); }
CoverCheck verify_cover_map_without_root(std::optional<Rational> alpha) { return cover_check(alpha, false); }

Parametrization Parametrization::make(QP x, QP y, QP z) {
  x = x.with_var("r");
  y = y.with_var("r");
  z = z.with_var("r");
  if (x.is_constant() && y.is_constant() && z.is_constant()) fail(ErrorCode::kPrecondition, "parametrization is constant");
  QP g = gcd(gcd(x, y), z);
  if (g.degree() > 0) fail(ErrorCode::kPrecondition, "parametrization components share the factor " + g.to_string());
  return {x, y, z};
}

Parametrization Parametrization::psi() {
  QP rm1 = qp({-1, 1});
  QP r2 = qp({0, 0, 1});
  return make(qp({49}) * rm1 * rm1, qp({63}) * r2 * rm1 * rm1, qp({3}) * r2 * qp({48, -32, 75, -54, 27}));
}

Parametrization Parametrization::zeta() {
  QP rm9 = qp({-9, 1});
  QP r = qp({0, 1});
  return make(qp({49}) * rm9 * rm9, qp({63}) * r * rm9 * rm9, qp({9}) * r * r * qp({729, 94, 9}));
}

int Parametrization::degree() const { return std::max({x.degree(), y.degree(), z.degree()}); }

Parametrization reparametrize(const Parametrization& p, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d) {
  if ((a * d - b * c).is_zero()) fail(ErrorCode::kPrecondition, "reparametrization must be invertible");
  QP num("r", {b, a}), den("r", {d, c});
  int deg = p.degree();
  auto homog = [&](const QP& f) {
    QP acc("r");
    for (int k = 0; k <= f.degree(); ++k) acc = acc + pow(num, k) * pow(den, deg - k) * f.coeff(k);
    return acc;
  };
  QP x = homog(p.x), y = homog(p.y), z = homog(p.z);
  QP g = gcd(gcd(x, y), z);
  if (g.degree() > 0) {
    x = exact_div(x, g);
    y = exact_div(y, g);
    z = exact_div(z, g);
  }
  return Parametrization::make(x, y, z);
}

Poly<Rational> compose_form(const SymPoly& form, const Parametrization& p) {
  const Ring& r = form.ring();
  if (r.size() != 3) fail(ErrorCode::kPrecondition, "compose_form needs a form in exactly (x, y, z)");
  const QP* comp[3] = {&p.x, &p.y, &p.z};
  std::vector<std::vector<QP>> powers(3);
  QP out("r");
  for (const auto& [e, c] : form.terms()) {
    QP t = QP::constant(c.base_value(), "r");
    for (int i = 0; i < 3; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(QP::constant(Rational(1), "r"));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * *comp[i]);
      t = t * pw[e[i]];
    }
    out = out + t;
  }
  return out;
}

std::string split_verdict_name(SplitVerdict v) {
  switch (v) {
    case SplitVerdict::kSplits: return "Splits";
    case SplitVerdict::kDoesNotSplit: return "DoesNotSplit";
    case SplitVerdict::kContainedInBranch: return "ContainedInBranch";
  }
  return "?";
}

FourthPowerReport fourth_power_test(const SymPoly& form, const Parametrization& p) {
  if (!form.is_homogeneous() || form.total_degree() != 4) fail(ErrorCode::kPrecondition, "fourth_power_test needs a homogeneous quartic");
  FourthPowerReport out;
  out.composed = compose_form(form, p);
  if (out.composed.is_zero()) {
    out.verdict = SplitVerdict::kContainedInBranch;
    return out;
  }
  out.factors = factor_over_q(out.composed);
  bool all4 = true;
  for (const auto& f : out.factors.factors) all4 = all4 && f.multiplicity % 4 == 0;
  out.verdict = all4 ? SplitVerdict::kSplits : SplitVerdict::kDoesNotSplit;
  out.constant_fourth_power_in_q = rational_fourth_root(out.factors.constant).has_value();
  out.degree_divisible_by_4 = out.composed.degree() % 4 == 0;
  return out;
}

FourthPowerReport fourth_power_test(const QuarticFamily& fam, const Parametrization& p) {
  if (!fam.alpha) fail(ErrorCode::kPrecondition, "fourth_power_test needs a concrete alpha");
  FourthPowerReport out = fourth_power_test(fam.equation, p);
  for (const auto* c : {&fam.conic, &fam.line_l, &fam.line_m}) out.components.push_back(compose_form(*c, p));
  return out;
}

namespace {

// c^{1/4} in Q(t)(I) for c = k^4 7^j or c = -4 k^4 7^j.
std::optional<Tower> fourth_root_in_tower(const Rational& c) {
  Rational seven(7);
  Rational abs_c = c.abs();
  for (int j = 0; j < 4; ++j) {
    Rational base = abs_c / seven.pow(j);
    Tower tj = tower_t().pow(j);
    if (c.sign() > 0) {
      if (auto k = rational_fourth_root(base)) return tower_const(*k) * tj;
    } else {
      if (auto k = rational_fourth_root(base / Rational(4))) return tower_const(*k) * tj * (tower_const(Rational(1)) + tower_i());
    }
  }
  return std::nullopt;
}

bool on_curve(const TPoint& p, const TFunc& a) { return ec_on_curve(p, a); }

}  // namespace

SectionPair lift_two_section(const Parametrization& p, const Rational& alpha, int root_choice) {
  if (root_choice < 0 || root_choice > 3) fail(ErrorCode::kPrecondition, "rootChoice must be 0, 1, 2 or 3");
  QuarticFamily fam = build_quartic(alpha);
  FourthPowerReport fp = fourth_power_test(fam, p);
  if (fp.verdict != SplitVerdict::kSplits) {
    fail(ErrorCode::kPrecondition, "lift_two_section needs a splitting curve (verdict " + split_verdict_name(fp.verdict) + ")");
  }
  SectionPair out;
  out.root_choice = root_choice;
  // -C o P = c g^4
  QP g = QP::constant(Rational(1), "r");
  for (const auto& f : fp.factors.factors) g = g * pow(f.factor, f.multiplicity / 4);
  Rational c = -fp.factors.constant;
  auto root = fourth_root_in_tower(c);
  if (!root) fail(ErrorCode::kPrecondition, "fourth root of " + c.to_string() + " is not in Q(7^(1/4), i)");
  out.fourth_root = *root;

  TFunc x = lift(p.x), lam = lift(p.y) / x, zz = lift(p.z) / x;
  TFunc al = tconst(tower_const(alpha)), one = tconst(tower_const(Rational(1))), two = tconst(tower_const(Rational(2)));
  TFunc q = lam * lam + two * lam + al;
  TFunc z1 = (two * zz - lam * lam + two * lam + al) / q;
  TFunc w = tconst(*root * tower_i().pow(root_choice)) * lift(g) / x;
  TFunc w2 = w * w;
  TFunc quarter = tconst(tower_const(Rational(1, 4)));
  bool on_cover = (w2 * w2 - quarter * lam * q * q * (z1 * z1 - one)).is_zero();
  out.checks.add("lift satisfies w^4 = 1/4 lambda q^2 (z1^2 - 1)", on_cover, on_cover ? "residual 0" : "lift is off the cover");

  TFunc u0 = two * (z1 + one) / w2;
  TFunc v0 = tconst(tower_const(Rational(4))) * (z1 + one) / (w2 * w);
  TFunc ct = lam * q / two;
  out.lambda = lam;
  out.a = -(lam * lam * lam * q * q);
  out.p1 = {false, ct * ct * u0, ct * ct * ct * v0};
  out.p2 = {false, neg_r(out.p1.u), neg_r(out.p1.v)};
  out.checks.add("first section lies on v^2 = u^3 - lambda^3 q^2 u", on_curve(out.p1, out.a));
  bool even = neg_r(out.a) == out.a;
  out.checks.add("the curve is invariant under r -> -r", even);
  out.checks.add("second section lies on the curve", on_curve(out.p2, out.a));
  bool swap = neg_r(out.p2.u) == out.p1.u && neg_r(out.p2.v) == out.p1.v;
  out.checks.add("r -> -r exchanges the two sections", swap);
  return out;
}

namespace {

TFunc even_to_lambda(const TFunc& f, const Rational& kappa) {
  auto conv = [&](const Poly<Tower>& p) {
    std::vector<Tower> c;
    for (int k = 0; 2 * k <= p.degree(); ++k) {
      if (2 * k + 1 <= p.degree() && !p.coeff(2 * k + 1).is_zero()) fail(ErrorCode::kPrecondition, "function is not even in r");
      c.push_back(p.coeff(2 * k) * tower_const(kappa.pow(-k)));
    }
    return Poly<Tower>("lambda", c);
  };
  return TFunc(conv(f.num()), conv(f.den()));
}

}  // namespace

LambdaSection sum_sections(const SectionPair& pair) {
  bool swap = neg_r(pair.p2.u) == pair.p1.u && neg_r(pair.p2.v) == pair.p1.v;
  if (!swap) fail(ErrorCode::kPrecondition, "sum_sections: the pair is not exchanged by r -> -r");
  if (!pair.lambda.is_polynomial() || pair.lambda.num().degree() != 2 || !pair.lambda.num().coeff(0).is_zero() ||
      !pair.lambda.num().coeff(1).is_zero()) {
    fail(ErrorCode::kPrecondition, "sum_sections needs lambda = kappa r^2");
  }
  LambdaSection out;
  Tower kt = pair.lambda.num().coeff(2);
  out.kappa = kt.base_value().base_value();
  TPoint s = ec_add(pair.p1, pair.p2, pair.a);
  if (s.infinity) fail(ErrorCode::kPrecondition, "sum_sections: the two sections are opposite");
  out.checks.add("sum lies on the curve over Q(7^(1/4))(r)", on_curve(s, pair.a));
  bool fixed = neg_r(s.u) == s.u && neg_r(s.v) == s.v;
  out.checks.add("sum is fixed by r -> -r", fixed);
  out.point = {false, even_to_lambda(s.u, out.kappa), even_to_lambda(s.v, out.kappa)};
  out.a = even_to_lambda(pair.a, out.kappa);
  bool ok = on_curve(out.point, out.a);
  out.checks.add("section in lambda lies on v^2 = u^3 - 7^-4 lambda^3 (81 + 98 lambda + 49 lambda^2)^2 u", ok,
                 ok ? "residual 0" : "residual " + brief((out.point.v * out.point.v - out.point.u * out.point.u * out.point.u -
                                                           out.a * out.point.u).to_string()));
  return out;
}

TPoint golden_section() {
  auto lp = [](std::vector<long> c) {
    std::vector<Tower> v;
    for (long x : c) v.push_back(tower_const(Rational(x)));
    return TFunc(Poly<Tower>("lambda", v));
  };
  TFunc a = lp({27, 7}), b = lp({81, 98, 49}), m = lp({81, -7});
  Tower t = tower_t();
  Tower du = tower_const(Rational(16 * 343)) * t * t;
  Tower dv = tower_const(Rational(64 * 16807)) * t;
  TFunc u = a * a * b * TFunc(Poly<Tower>::constant(du.inverse(), "lambda"));
  TFunc v = m * a * b * b * TFunc(Poly<Tower>::constant(dv.inverse(), "lambda"));
  return {false, u, v};
}

VerificationReport compare_golden(const LambdaSection& s) {
  VerificationReport rep;
  TPoint g = golden_section();
  rep.add("u = (27+7l)^2 (81+98l+49l^2) / (2^4 7^(7/2))", s.point.u == g.u, s.point.u == g.u ? "exact" : brief(s.point.u.to_string()));
  std::string vw = s.point.v == g.v ? "exact" : (s.point.v == -g.v ? "equals -v (other root choice)" : brief(s.point.v.to_string()));
  rep.add("v = (81-7l)(27+7l)(81+98l+49l^2)^2 / (2^6 7^(21/4))", s.point.v == g.v, vw);
  return rep;
}

VerificationReport section_to_zeta_check(const LambdaSection& s, const Rational& alpha) {
  VerificationReport rep;
  auto lc = [](const Rational& q) { return TFunc(Poly<Tower>::constant(tower_const(q), "lambda")); };
  TFunc lam = TFunc::variable("lambda");
  TFunc q = lam * lam + lc(Rational(2)) * lam + lc(alpha);
  TFunc ct = lam * q / lc(Rational(2));
  TFunc u0 = s.point.u / (ct * ct), v0 = s.point.v / (ct * ct * ct);
  TFunc z1 = lc(Rational(2)) * u0 * u0 * u0 / (v0 * v0) - lc(Rational(1));
  TFunc zz = (q * z1 + lam * lam - lc(Rational(2)) * lam - lc(alpha)) / lc(Rational(2));
  Parametrization zeta = Parametrization::zeta();
  TFunc lz = lift(zeta.y) / lift(zeta.x);
  TFunc target = lift(zeta.z) / lift(zeta.x);
  TFunc image = zz.with_var("r").compose(lz);
  bool ok = image == target;
  rep.add("z1 = 2u^3/v^2 - 1 maps the section onto the curve zeta", ok, ok ? "z/x agrees after lambda = y/x of zeta" : brief(image.to_string()));
  return rep;
}

VerificationReport non_torsion_evidence(const LambdaSection& s, int max_multiple) {
  VerificationReport rep;
  rep.add("v is not identically 0 (not 2-torsion)", !s.point.v.is_zero());
  TPoint acc = s.point;
  for (int n = 2; n <= max_multiple; ++n) {
    acc = ec_add(acc, s.point, s.a);
    rep.add("[" + std::to_string(n) + "]P is not the zero section", !acc.infinity);
  }
  return rep;
}

}  // namespace k3
