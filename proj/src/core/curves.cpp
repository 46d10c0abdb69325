#include "k3/curves.hpp"

#include "k3/fields.hpp"

namespace k3 {

namespace {

SymFrac image_of(const std::string& name, const std::map<std::string, SymFrac>& images, const Ring& to) {
  auto it = images.find(name);
  if (it != images.end()) return it->second;
  if (!to.find(name)) fail(ErrorCode::kConfiguration, "variable " + name + " has no image in the source ring");
  return sym_frac_var(to, name);
}

std::vector<SymFrac> images_for(const Ring& from, const std::map<std::string, SymFrac>& images, const Ring& to) {
  std::vector<SymFrac> out;
  for (const auto& v : from.vars()) out.push_back(image_of(v, images, to));
  return out;
}

NFContext sqrt3() {
  static const NFContext ctx = NumberField::make_context("r3", Poly<Rational>("r3", {Rational(-3), Rational(0), Rational(1)}));
  return ctx;
}

NumberField gi() { return NumberField::generator(fields::gaussian()); }

}  // namespace

CurveModel make_curve(std::string name, const Ring& ring, std::string base, std::string fiber, unsigned exponent,
                      const SymPoly& rhs) {
  CurveModel c;
  c.name = std::move(name);
  c.ctx = SymContext(ring);
  c.ctx.add_relation(fiber, exponent, rhs);
  c.equation = pow(sym_var(ring, fiber), exponent) - rhs;
  c.base = std::move(base);
  c.fiber = std::move(fiber);
  return c;
}

SymFrac pullback(const SymPoly& p, const Ring& from, const std::map<std::string, SymFrac>& images, const Ring& to) {
  return substitute(p, images_for(from, images, to));
}

SymFrac pullback(const SymFrac& p, const Ring& from, const std::map<std::string, SymFrac>& images, const Ring& to) {
  return substitute(p, images_for(from, images, to));
}

VerificationReport verify_map(const CurveMap& m) {
  VerificationReport rep;
  const Ring& src = m.source->ctx.ring();
  for (const auto& [name, f] : m.images) {
    if (m.source->ctx.reduce(f.den).is_zero()) {
      fail(ErrorCode::kDivisionByZero, m.name + ": denominator of " + name + " vanishes on " + m.source->name);
    }
  }
  SymFrac pb = pullback(m.target->equation, m.target->ctx.ring(), m.images, src);
  SymPoly res = m.source->ctx.reduce(pb.num);
  rep.add(m.name + ": " + m.target->name + " pulls back to 0 on " + m.source->name, res.is_zero(),
          res.is_zero() ? "residual 0" : "residual " + res.to_string());
  return rep;
}

CurveMap compose(const CurveMap& outer, const CurveMap& inner) {
  if (outer.source != inner.target) fail(ErrorCode::kPrecondition, "compose: " + outer.name + " does not start where " + inner.name + " ends");
  CurveMap out{outer.name + " o " + inner.name, inner.source, outer.target, {}};
  const Ring& mid = inner.target->ctx.ring();
  for (const auto& v : outer.target->ctx.ring().vars()) {
    SymFrac f = image_of(v, outer.images, mid);
    out.images[v] = pullback(f, mid, inner.images, inner.source->ctx.ring());
  }
  return out;
}

namespace {

std::vector<std::pair<std::string, SymPoly>> identity_residuals(const CurveMap& m) {
  std::vector<std::pair<std::string, SymPoly>> out;
  const Ring& r = m.source->ctx.ring();
  for (const auto& name : {m.source->base, m.source->fiber}) {
    SymFrac f = image_of(name, m.images, r);
    out.emplace_back(name, m.source->ctx.residual(f, sym_frac_var(r, name)));
  }
  return out;
}

}  // namespace

VerificationReport verify_involution(const CurveMap& m) {
  if (m.source != m.target) fail(ErrorCode::kPrecondition, m.name + " is not an endomorphism");
  VerificationReport rep = verify_map(m);
  CurveMap sq = compose(m, m);
  for (const auto& [name, res] : identity_residuals(sq)) {
    rep.add(m.name + " squared fixes " + name, res.is_zero(), res.is_zero() ? "residual 0" : "residual " + res.to_string());
  }
  return rep;
}

int map_order(const CurveMap& m, int max_order) {
  if (m.source != m.target) fail(ErrorCode::kPrecondition, m.name + " is not an endomorphism");
  CurveMap cur = m;
  for (int k = 1; k <= max_order; ++k) {
    bool id = true;
    for (const auto& [name, res] : identity_residuals(cur)) id = id && res.is_zero();
    if (id) return k;
    cur = compose(m, cur);
  }
  return 0;
}

const NamedCurves& named_curves() {
  static const NamedCurves pc = [] {
    NamedCurves c;
    c.ring_b = Ring({"rho", "tau", "beta"});
    c.ring_e = Ring({"u", "v", "beta"});
    c.ring_ep = Ring({"x", "y"});
    c.ring_e1 = Ring({"z1", "w1"});
    auto k = [](const Ring& r, long n) { return sym_const(r, NumberField(n)); };
    SymPoly rho = sym_var(c.ring_b, "rho"), b = sym_var(c.ring_b, "beta");
    c.b_beta = make_curve("B_beta", c.ring_b, "rho", "tau", 2,
                          rho * (pow(rho, 4) + k(c.ring_b, 2) * pow(b, 4) * rho * rho + k(c.ring_b, 1)));
    SymPoly u = sym_var(c.ring_e, "u"), be = sym_var(c.ring_e, "beta");
    c.e_beta = make_curve("E_beta", c.ring_e, "u", "v", 2,
                          u * (u * u + k(c.ring_e, 4) * u + k(c.ring_e, 2) * (k(c.ring_e, 1) + pow(be, 4))));
    SymPoly x = sym_var(c.ring_ep, "x");
    c.e_prime = make_curve("E'", c.ring_ep, "x", "y", 2, pow(x, 3) - x);
    SymPoly z1 = sym_var(c.ring_e1, "z1");
    c.e_quartic = make_curve("E", c.ring_e1, "z1", "w1", 4, z1 * z1 - k(c.ring_e1, 1));
    return c;
  }();
  return pc;
}

CurveMap quotient_map_f() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_b;
  SymFrac rho = sym_frac_var(r, "rho"), tau = sym_frac_var(r, "tau"), b = sym_frac_var(r, "beta");
  SymFrac one = sym_frac(r, NumberField(1)), two = sym_frac(r, NumberField(2));
  SymFrac c = two * (one + pow(b, 4));
  SymFrac d = rho - one;
  return {"f", &pc.b_beta, &pc.e_beta, {{"u", c * rho / (d * d)}, {"v", c * tau / (d * d * d)}}};
}

CurveMap involution_iota() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_b;
  SymFrac rho = sym_frac_var(r, "rho"), tau = sym_frac_var(r, "tau");
  return {"iota", &pc.b_beta, &pc.b_beta, {{"rho", pow(rho, -1)}, {"tau", tau * pow(rho, -3)}}};
}

CurveMap involution_iota_prime() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_b;
  SymFrac rho = sym_frac_var(r, "rho"), tau = sym_frac_var(r, "tau");
  return {"iota'", &pc.b_beta, &pc.b_beta, {{"rho", -rho}, {"tau", sym_frac(r, gi()) * tau}}};
}

CurveMap e_prime_to_e() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_ep;
  SymFrac x = sym_frac_var(r, "x"), y = sym_frac_var(r, "y");
  SymFrac s2 = sym_frac(r, fields::sqrt2_in_zeta8());
  SymFrac half = sym_frac(r, NumberField(Rational(1, 2)));
  return {"E' -> E", &pc.e_prime, &pc.e_quartic, {{"w1", y / (s2 * x)}, {"z1", half * (x + pow(x, -1))}}};
}

CurveMap e_prime_automorphism() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_ep;
  SymFrac x = sym_frac_var(r, "x"), y = sym_frac_var(r, "y");
  return {"(x,y) -> (1/x, iy/x^2)", &pc.e_prime, &pc.e_prime, {{"x", pow(x, -1)}, {"y", sym_frac(r, gi()) * y / (x * x)}}};
}

CurveMap e_order4() {
  const auto& pc = named_curves();
  const Ring& r = pc.ring_e1;
  return {"w1 -> i w1", &pc.e_quartic, &pc.e_quartic, {{"w1", sym_frac(r, gi()) * sym_frac_var(r, "w1")}}};
}

CurveMap e_prime_reflection() {
  const auto& pc = named_curves();
  return {"(x,y) -> (x,-y)", &pc.e_prime, &pc.e_prime, {{"y", -sym_frac_var(pc.ring_ep, "y")}}};
}

CurveModel e_beta_at(const Rational& beta4) {
  Ring r({"u", "v"});
  SymPoly u = sym_var(r, "u");
  NumberField c(Rational(2) * (Rational(1) + beta4));
  return make_curve("E_beta(beta^4=" + beta4.to_string() + ")", r, "u", "v", 2,
                    u * (u * u + sym_const(r, NumberField(4)) * u + sym_const(r, c)));
}

CurveMap e_prime_to_e_beta_79() {
  static const CurveModel target = e_beta_at(Rational(7, 9));
  const auto& pc = named_curves();
  const Ring& r = pc.ring_ep;
  SymFrac x = sym_frac_var(r, "x"), y = sym_frac_var(r, "y");
  NumberField s3 = NumberField::generator(sqrt3());
  SymFrac four3 = sym_frac(r, NumberField(Rational(4, 3)));
  return {"E' -> E_beta (beta^4 = 7/9)", &pc.e_prime, &target,
          {{"u", four3 * x - four3}, {"v", sym_frac(r, NumberField(Rational(8, 9)) * s3) * y}}};
}

SymFrac frac_derivative(const SymFrac& f, std::size_t var) {
  return SymFrac(f.num.derivative(var) * f.den - f.num * f.den.derivative(var), f.den * f.den);
}

DifferentialCoords pullback_differential(const CurveMap& m, const std::string& target_base, const std::string& target_fiber) {
  const CurveModel& src = *m.source;
  const Ring& r = src.ctx.ring();
  if (src.ctx.relations().size() != 1 || src.ctx.relations()[0].exponent != 2) {
    fail(ErrorCode::kPrecondition, "pullback_differential needs a source of the form fiber^2 = h(base)");
  }
  std::size_t ib = r.index(src.base), ifb = r.index(src.fiber);
  SymFrac h_prime(src.ctx.relations()[0].replacement.derivative(ib));
  SymFrac tau = sym_frac_var(r, src.fiber);
  SymFrac u = image_of(target_base, m.images, r);
  SymFrac v = image_of(target_fiber, m.images, r);
  SymFrac du = frac_derivative(u, ib) + frac_derivative(u, ifb) * h_prime / (sym_frac(r, NumberField(2)) * tau);
  SymFrac g = tau * du / v;

  SymPoly n = src.ctx.reduce(g.num);
  SymPoly d = src.ctx.reduce(g.den);
  if (d.is_zero()) fail(ErrorCode::kDivisionByZero, m.name + ": pulled-back differential has a vanishing denominator");
  SymPoly e = src.ctx.reduce(d * sym_var(r, src.base));
  std::vector<Exponents> monos;
  for (const auto* p : {&n, &d, &e}) {
    for (const auto& [ex, c] : p->terms()) monos.push_back(ex);
  }
  auto coef = [](const SymPoly& p, const Exponents& ex) {
    auto it = p.terms().find(ex);
    return it == p.terms().end() ? NumberField() : it->second;
  };
  DifferentialCoords out;
  for (std::size_t a = 0; a < monos.size(); ++a) {
    for (std::size_t b = a + 1; b < monos.size(); ++b) {
      NumberField d1 = coef(d, monos[a]), d2 = coef(d, monos[b]), e1 = coef(e, monos[a]), e2 = coef(e, monos[b]);
      NumberField det = d1 * e2 - d2 * e1;
      if (det.is_zero()) continue;
      NumberField n1 = coef(n, monos[a]), n2 = coef(n, monos[b]);
      out.c0 = (n1 * e2 - n2 * e1) / det;
      out.c1 = (d1 * n2 - d2 * n1) / det;
      SymPoly res = n - d * out.c0 - e * out.c1;
      if (!res.is_zero()) {
        fail(ErrorCode::kPrecondition, m.name + ": pullback not expressible in the basis {d" + src.base + "/" + src.fiber +
                                           ", " + src.base + " d" + src.base + "/" + src.fiber + "}");
      }
      out.check.add(m.name + "^*(d" + target_base + "/" + target_fiber + ") = (" + out.c0.to_string() + " + " +
                        out.c1.to_string() + " " + src.base + ") d" + src.base + "/" + src.fiber,
                    true, "residual 0");
      return out;
    }
  }
  fail(ErrorCode::kPrecondition, m.name + ": pullback not expressible in the basis");
}

}  // namespace k3
