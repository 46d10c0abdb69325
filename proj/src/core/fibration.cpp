#include "k3/fibration.hpp"

namespace k3 {

namespace {

FPoly lam_var(const char* name = "lambda") { return FPoly::variable(name); }
FPoly cst(const QFunc& c, const char* name = "lambda") { return FPoly::constant(c, name); }

bool constant_coefficients(const FPoly& f) {
  for (const auto& c : f.coeffs()) {
    if (!c.is_constant()) return false;
  }
  return true;
}

std::optional<QFunc> fourth_root(const QFunc& c) {
  auto s = exact_sqrt(c);
  if (!s) return std::nullopt;
  return exact_sqrt(*s);
}

std::string show(const SymFrac& f) { return f.to_string(); }

// Fraction equality check in a ring without relations, recorded in `rep`.
void expect_equal(VerificationReport& rep, const std::string& name, const SymFrac& a, const SymFrac& b) {
  SymFrac d = a - b;
  rep.add(name, sym_is_zero(d), sym_is_zero(d) ? "residual 0" : "residual " + show(d));
}

void expect_zero_mod(VerificationReport& rep, const std::string& name, const SymContext& ctx, const SymFrac& f) {
  SymPoly r = ctx.reduce(f.num);
  rep.add(name, r.is_zero(), r.is_zero() ? "residual 0" : "residual " + r.to_string());
}

}  // namespace

FPoly pencil_f(const QFunc& alpha) {
  FPoly l = lam_var();
  FPoly q = l * l + cst(QFunc(2)) * l + cst(alpha);
  return pow(l, 3) * pow(q, 2);
}

TwistResult twist_minimize(const FPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kPrecondition, "twist_minimize of the zero polynomial");
  auto sq = squarefree_decompose(f);
  TwistResult out;
  out.reduced = FPoly::constant(sq.constant, f.var());
  out.twist.removed = FPoly::constant(QFunc(1), f.var());
  out.twist.root = FPoly::constant(QFunc(1), f.var());
  for (const auto& s : sq.factors) {
    unsigned q = s.multiplicity / 4;
    out.reduced = out.reduced * pow(s.factor, s.multiplicity % 4);
    out.twist.removed = out.twist.removed * pow(s.factor, 4 * q);
    out.twist.root = out.twist.root * pow(s.factor, q);
  }
  return out;
}

std::string fiber_type_name(FiberType t) {
  switch (t) {
    case FiberType::kIII: return "III";
    case FiberType::kI0Star: return "I0*";
    case FiberType::kIIIStar: return "III*";
  }
  return "?";
}

namespace {

KodairaFiber make_fiber(std::optional<FPoly> loc, int places, int k) {
  KodairaFiber fb;
  fb.location = std::move(loc);
  fb.places = places;
  fb.k = k;
  switch (k) {
    case 1: fb.type = FiberType::kIII; fb.euler = 3; fb.components = 2; break;
    case 2: fb.type = FiberType::kI0Star; fb.euler = 6; fb.components = 5; break;
    case 3: fb.type = FiberType::kIIIStar; fb.euler = 9; fb.components = 8; break;
    default: fail(ErrorCode::kPrecondition, "fiber order k must be 1, 2 or 3");
  }
  return fb;
}

}  // namespace

FiberConfiguration classify_fibers(const FPoly& f) {
  if (f.is_zero()) fail(ErrorCode::kPrecondition, "classify_fibers of the zero polynomial");
  FiberConfiguration cfg;
  cfg.f = f;
  struct Loc {
    FPoly factor;
    unsigned mult;
  };
  std::vector<Loc> locs;
  if (constant_coefficients(f)) {
    Poly<Rational> fq = f.map_coeffs([](const QFunc& c) { return c.constant_value(); });
    for (const auto& x : factor_over_q(fq).factors) {
      locs.push_back({x.factor.map_coeffs([](const Rational& c) { return QFunc(c); }), x.multiplicity});
    }
  } else {
    for (const auto& x : factor_over_qfunc(f).factors) locs.push_back({x.factor, x.multiplicity});
  }
  for (const auto& l : locs) {
    if (l.mult >= 4) {
      fail(ErrorCode::kPrecondition, "f is not twist-minimal (factor " + l.factor.to_string() + " has multiplicity " +
                                         std::to_string(l.mult) + "); call twist_minimize first");
    }
  }
  std::sort(locs.begin(), locs.end(), [](const Loc& a, const Loc& b) {
    if (a.mult != b.mult) return a.mult > b.mult;
    return a.factor.degree() < b.factor.degree();
  });
  for (const auto& l : locs) cfg.fibers.push_back(make_fiber(l.factor, l.factor.degree(), static_cast<int>(l.mult)));
  cfg.k_infinity = ((-f.degree()) % 4 + 4) % 4;
  if (cfg.k_infinity != 0) cfg.fibers.push_back(make_fiber(std::nullopt, 1, cfg.k_infinity));
  for (const auto& fb : cfg.fibers) cfg.total_euler += fb.places * fb.euler;
  return cfg;
}

int shioda_tate_bound(const FiberConfiguration& cfg, int mw_rank) {
  if (mw_rank < 0) fail(ErrorCode::kPrecondition, "Mordell-Weil rank must be nonnegative");
  int rho = 2 + mw_rank;
  for (const auto& fb : cfg.fibers) rho += fb.places * (fb.components - 1);
  return rho;
}

int parity_refine(int bound) {
  if (bound < 0 || bound > 20) fail(ErrorCode::kPrecondition, "Picard bound must lie in [0, 20], got " + std::to_string(bound));
  return bound % 2 == 0 ? bound : bound + 1;
}

RatFunc<QFunc> pencil_beta(const QFunc& alpha) {
  FPoly l = lam_var();
  FPoly q = l * l + cst(QFunc(2)) * l + cst(alpha);
  return RatFunc<QFunc>(cst(QFunc(4)), l * q * q);
}

RatFunc<QFunc> squared_beta(const QFunc& alpha) {
  FPoly l = lam_var();
  FPoly q = l * l + cst(QFunc(2)) * l + cst(alpha);
  return RatFunc<QFunc>(cst(QFunc(16)), l * l * q * q);
}

VerificationReport weierstrass_chain_generic() {
  VerificationReport rep;
  Ring r({"z1", "t", "v", "u", "x", "y", "w", "s", "b"});
  auto V = [&](const char* n) { return sym_frac_var(r, n); };
  auto C = [&](Rational c) { return sym_frac(r, NumberField(c)); };
  SymFrac z1 = V("z1"), t = V("t"), v = V("v"), u = V("u"), x = V("x"), y = V("y"), w = V("w"), s = V("s"), b = V("b");
  SymFrac one = C(1);

  SymPoly sv = sym_var(r, "s"), bv = sym_var(r, "b"), tv = sym_var(r, "t"), z1v = sym_var(r, "z1"), wv = sym_var(r, "w");
  SymPoly uv = sym_var(r, "u");

  SymContext ts(r);
  ts.add_relation("t", 2, pow(sv, 4) + bv);
  auto e1 = [&](const SymFrac& Z1, const SymFrac& W) { return Z1 * Z1 - b * W * W * W * W - one; };
  auto e2 = [&](const SymFrac& X, const SymFrac& Y) { return C(2) * Y * Y - X * X * X + b * X; };
  auto e3 = [&](const SymFrac& U, const SymFrac& Vv) { return Vv * Vv - U * U * U + C(4) * b * U; };

  expect_zero_mod(rep, "w = 1/s, z1 = t/s^2 takes z1^2 = b w^4 + 1 to t^2 = s^4 + b", ts, e1(t / (s * s), one / s));
  SymFrac xs = t + s * s;
  expect_zero_mod(rep, "x = t + s^2, y = s x gives 2y^2 = x^3 - b x", ts, e2(xs, s * xs));
  expect_equal(rep, "x = u/2, y = v/4 gives v^2 = u^3 - 4 b u (times 8)", e2(u / C(2), v / C(4)) * C(8), e3(u, v));

  SymContext ez(r);
  ez.add_relation("z1", 2, bv * pow(wv, 4) + sym_const(r, NumberField(1)));
  SymFrac u0 = C(2) * (z1 + one) / (w * w);
  SymFrac v0 = C(4) * (z1 + one) / (w * w * w);
  expect_zero_mod(rep, "u = 2(z1+1)/w^2, v = 4(z1+1)/w^3 lies on v^2 = u^3 - 4 b u", ez, e3(u0, v0));

  // composite of the individual steps
  SymFrac sw = one / w, tw = z1 * sw * sw;
  expect_equal(rep, "composite u = 2(t + s^2) at s = 1/w, t = z1 s^2", C(2) * (tw + sw * sw), u0);
  expect_equal(rep, "composite v = 4 s (t + s^2) at s = 1/w, t = z1 s^2", C(4) * sw * (tw + sw * sw), v0);

  SymContext ev(r);
  ev.add_relation("v", 2, pow(uv, 3) - sym_const(r, NumberField(4)) * bv * uv);
  expect_zero_mod(rep, "inverse w = 2u/v, z1 = 2u^3/v^2 - 1 lies on z1^2 = b w^4 + 1", ev,
                  e1(C(2) * u * u * u / (v * v) - one, C(2) * u / v));
  (void)x;
  (void)y;
  (void)tv;
  (void)z1v;
  return rep;
}

WeierstrassReduction weierstrass_reduce(const RatFunc<QFunc>& beta, const QFunc& alpha) {
  if (beta.is_zero()) fail(ErrorCode::kPrecondition, "beta must be a nonzero rational function");
  WeierstrassReduction out;
  out.chain = weierstrass_chain_generic();
  out.four_beta = beta * RatFunc<QFunc>(QFunc(4));
  out.matches_pencil = beta == pencil_beta(alpha);

  // Does z1^2 = beta w^4 + 1 describe w^4 = 1/4 lambda q^2 (z1^2 - 1)?
  {
    Ring r({"w", "z1", "lambda", "alpha"});
    SymPoly w = sym_var(r, "w"), z1 = sym_var(r, "z1"), lam = sym_var(r, "lambda");
    SymPoly al = alpha.is_constant() ? sym_const(r, NumberField(alpha.constant_value())) : sym_var(r, "alpha");
    SymPoly q = lam * lam + sym_const(r, NumberField(2)) * lam + al;
    SymContext ctx(r);
    ctx.add_relation("w", 4, sym_const(r, NumberField(Rational(1, 4))) * lam * q * q * (z1 * z1 - sym_const(r, NumberField(1))));
    SymFrac bf = to_sym(r, beta);
    SymFrac e = SymFrac(z1 * z1) - bf * SymFrac(w * w * w * w) - sym_frac(r, NumberField(1));
    SymPoly res = ctx.reduce(e.num);
    out.chain.add("beta matches the pencil fibration w^4 = 1/4 lambda q^2 (z1^2 - 1)", res.is_zero(),
                  res.is_zero() ? "residual 0" : "residual " + res.to_string());
  }

  // Twist to a polynomial: c0 = den(4 beta), then strip fourth powers.
  const FPoly& num = out.four_beta.num();
  const FPoly& den = out.four_beta.den();
  FPoly p = num * pow(den, 3);
  TwistResult tm = twist_minimize(p);
  QFunc lc = tm.reduced.leading();
  QFunc kroot(1);
  if (auto k = fourth_root(lc)) kroot = *k;
  out.f = tm.reduced * (kroot * kroot * kroot * kroot).inverse();
  out.twist_multiplier = RatFunc<QFunc>(den) / RatFunc<QFunc>(tm.twist.root * kroot);
  RatFunc<QFunc> c = out.twist_multiplier;
  RatFunc<QFunc> c2 = c * c;
  bool twist_ok = RatFunc<QFunc>(out.f) == out.four_beta * c2 * c2;
  out.chain.add("twist identity f = 4 beta c^4", twist_ok, "c = " + c.to_string() + ", f = " + out.f.to_string());

  Ring r({"v", "u", "lambda", "alpha"});
  SymFrac U = sym_frac_var(r, "u"), Vv = sym_frac_var(r, "v");
  SymFrac cs = to_sym(r, c);
  SymFrac g = to_sym(r, out.four_beta);
  SymFrac fs = to_sym(r, RatFunc<QFunc>(out.f));
  SymFrac uo = U / (cs * cs), vo = Vv / (cs * cs * cs);
  SymFrac old_eq = vo * vo - uo * uo * uo + g * uo;
  SymFrac new_eq = Vv * Vv - U * U * U + fs * U;
  expect_equal(out.chain, "twist (u, v) -> (c^2 u, c^3 v) maps v^2 = u^3 - 4 beta u to v^2 = u^3 - f u",
               old_eq * cs * cs * cs * cs * cs * cs, new_eq);
  return out;
}

DegenerationModel degeneration_model(DegenerationKind kind) {
  DegenerationModel out;
  out.kind = kind;
  Ring r({"v", "u", "lambda", "mu", "alpha", "beta"});
  auto V = [&](const char* n) { return sym_frac_var(r, n); };
  auto C = [&](Rational c) { return sym_frac(r, NumberField(c)); };
  SymFrac v = V("v"), u = V("u"), lam = V("lambda"), mu = V("mu"), al = V("alpha"), be = V("beta");
  auto pw = [](SymFrac x, int e) { return pow(x, e); };
  auto weq = [&](const SymFrac& f, const SymFrac& U, const SymFrac& Vv) { return Vv * Vv - U * U * U + f * U; };
  auto pencil = [&](const SymFrac& L, const SymFrac& A) {
    SymFrac q = L * L + C(2) * L + A;
    return L * L * L * q * q;
  };
  SymFrac e0 = weq(pencil(lam, al), u, v);

  QFunc b = QFunc::variable("beta");
  FPoly one = FPoly::constant(QFunc(1));
  if (kind == DegenerationKind::kAtInfinity) {
    auto img = identity_images(r);
    set_image(img, r, "alpha", pw(be, -8));
    set_image(img, r, "u", pw(be, -14) * u);
    set_image(img, r, "v", pw(be, -21) * v);
    set_image(img, r, "lambda", pw(be, -4) * lam);
    SymFrac inner = lam * lam + C(2) * pw(be, 4) * lam + C(1);
    SymFrac target = weq(lam * lam * lam * inner * inner, u, v);
    expect_equal(out.chain, "alpha = beta^-8, u = beta^-14 u, v = beta^-21 v, lambda = beta^-4 lambda (times beta^42)",
                 substitute(e0, img) * pw(be, 42), target);
    FPoly l = lam_var();
    FPoly in = l * l + cst(QFunc(2) * b * b * b * b) * l + cst(QFunc(1));
    out.fibration = {pow(l, 3) * pow(in, 2), "lambda", "beta"};
  } else {
    auto img1 = identity_images(r);
    set_image(img1, r, "lambda", C(1) / mu);
    set_image(img1, r, "u", u / pw(mu, 4));
    set_image(img1, r, "v", v / pw(mu, 6));
    SymFrac inner1 = C(1) + C(2) * mu + al * mu * mu;
    SymFrac e1 = weq(mu * inner1 * inner1, u, v);
    expect_equal(out.chain, "mu = 1/lambda, u = u/mu^4, v = v/mu^6 (times mu^12)", substitute(e0, img1) * pw(mu, 12), e1);
    auto img2 = identity_images(r);
    set_image(img2, r, "alpha", pw(be, 4));
    set_image(img2, r, "mu", mu / pw(be, 4));
    set_image(img2, r, "u", u / pw(be, 6));
    set_image(img2, r, "v", v / pw(be, 9));
    SymFrac inner2 = pw(be, 4) + C(2) * mu + mu * mu;
    SymFrac e2 = weq(mu * inner2 * inner2, u, v);
    expect_equal(out.chain, "alpha = beta^4, mu = mu/beta^4, u = u/beta^6, v = v/beta^9 (times beta^18)",
                 substitute(e1, img2) * pw(be, 18), e2);
    FPoly m = lam_var("mu");
    FPoly in = cst(b * b * b * b, "mu") + cst(QFunc(2), "mu") * m + m * m;
    out.fibration = {m * pow(in, 2), "mu", "beta"};
  }
  (void)one;
  out.at_zero = out.fibration.f.map_coeffs([](const QFunc& c) { return QFunc(c(Rational(0))); });
  return out;
}

MonomialAutomorphism phi_automorphism() {
  NumberField z = NumberField::generator(fields::zeta8());
  return {z * z, z * z * z, NumberField(-1)};
}

FormScaling form_scaling_order(const MonomialAutomorphism& a, const Poly<Rational>& f) {
  FormScaling out;
  bool curve_ok = a.cv * a.cv == a.cu * a.cu * a.cu;
  out.preserved.add("v^2 and u^3 scale alike", curve_ok, "cv^2 = " + (a.cv * a.cv).to_string() + ", cu^3 = " + (a.cu * a.cu * a.cu).to_string());
  Poly<NumberField> fn = f.map_coeffs([](const Rational& c) { return NumberField(c); });
  Poly<NumberField> lhs = fn.scale_argument(a.cl);
  Poly<NumberField> rhs = fn * (a.cu * a.cu);
  out.preserved.add("f(cl lambda) = cu^2 f(lambda)", lhs == rhs, "f(cl lambda) = " + lhs.to_string());
  if (!out.preserved.passed()) fail(ErrorCode::kPrecondition, "automorphism does not preserve the Weierstrass equation");
  out.scalar = a.cl * a.cu / a.cv;
  NumberField p = out.scalar;
  for (int k = 1; k <= 48; ++k) {
    if (p == NumberField(1)) {
      out.order = k;
      break;
    }
    p = p * out.scalar;
  }
  return out;
}

}  // namespace k3
