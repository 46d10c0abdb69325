#include "k3/quartic.hpp"

#include <algorithm>
#include <climits>

#include "k3/factor.hpp"

namespace k3 {

namespace {

constexpr const char* kTriple = "L∩M_alpha = (1:0:0) lies on Q∩L";
constexpr const char* kTangent = "M_alpha is tangent to Q (discriminant 4(1-alpha) = 0)";

bool proj_equal(const std::array<QFunc, 3>& a, const std::array<QFunc, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

NumberField eval_at(const SymPoly& f, const std::array<NumberField, 3>& p) {
  NumberField acc;
  for (const auto& [e, c] : f.terms()) {
    NumberField t = c;
    for (int i = 0; i < 3; ++i) t = t * p[i].pow(e[i]);
    acc = acc + t;
  }
  return acc;
}

std::array<NumberField, 3> gradient_at(const SymPoly& f, const std::array<NumberField, 3>& p) {
  return {eval_at(f.derivative(0), p), eval_at(f.derivative(1), p), eval_at(f.derivative(2), p)};
}

bool proportional(const std::array<NumberField, 3>& a, const std::array<NumberField, 3>& b) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

std::string point_string(const std::array<NumberField, 3>& p) {
  return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
}

}  // namespace

AlphaValue AlphaValue::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return {true, Rational()};
  return {false, Rational::parse(text)};
}

QuarticFamily build_quartic(std::optional<Rational> alpha) {
  QuarticFamily fam;
  fam.alpha = alpha;
  fam.ring = alpha ? Ring({"x", "y", "z"}) : Ring({"x", "y", "z", "alpha"});
  const Ring& r = fam.ring;
  SymPoly x = sym_var(r, "x"), y = sym_var(r, "y"), z = sym_var(r, "z");
  SymPoly a = alpha ? sym_const(r, NumberField(*alpha)) : sym_var(r, "alpha");
  fam.conic = y * y - x * z;
  fam.line_l = y;
  fam.line_m = a * x + sym_const(r, NumberField(2)) * y + z;
  fam.equation = fam.conic * fam.line_l * fam.line_m;
  return fam;
}

NodeList singular_points(const QFunc& alpha) {
  NodeList out;
  out.alpha = alpha;
  QFunc zero, one(1);
  out.points.push_back({{zero, zero, one}, "p1 in Q∩L"});
  out.points.push_back({{one, zero, zero}, "p2 in Q∩L"});
  out.points.push_back({{one, zero, -alpha}, "L∩M_alpha"});
  out.qm_polynomial = Poly<QFunc>("t", {alpha, QFunc(2), one});
  out.qm_discriminant = QFunc(4) - QFunc(4) * alpha;

  if (alpha.is_constant()) {
    Rational a = alpha.constant_value();
    Rational d = Rational(1) - a;
    if (auto s = rational_sqrt(d)) {
      out.qm_rational = true;
      for (Rational t : {Rational(-1) + *s, Rational(-1) - *s}) {
        std::array<QFunc, 3> p{one, QFunc(t), QFunc(t * t)};
        bool dup = false;
        for (const auto& q : out.qm_points) dup = dup || proj_equal(q.coords, p);
        if (!dup) out.qm_points.push_back({p, "Q∩M_alpha"});
      }
    }
  }

  if ((alpha).is_zero()) out.coincidences.emplace_back(kTriple);
  if (out.qm_discriminant.is_zero()) out.coincidences.emplace_back(kTangent);
  out.degenerate = !out.coincidences.empty();

  // Distinct loci: rational points deduplicated, plus the Q∩M pair.
  std::vector<std::array<QFunc, 3>> seen;
  auto push = [&](const std::array<QFunc, 3>& p) {
    for (const auto& q : seen) {
      if (proj_equal(p, q)) return;
    }
    seen.push_back(p);
  };
  for (const auto& p : out.points) push(p.coords);
  int irrational = 0;
  if (out.qm_rational) {
    for (const auto& p : out.qm_points) push(p.coords);
  } else {
    irrational = out.qm_discriminant.is_zero() ? 1 : 2;
  }
  out.distinct_loci = static_cast<int>(seen.size()) + irrational;
  return out;
}

NodeList singular_points(const Rational& alpha) { return singular_points(QFunc(alpha)); }

NodeList singular_points_symbolic() { return singular_points(QFunc::variable("alpha")); }

Stability stability(const AlphaValue& alpha) {
  if (alpha.infinite) return {false, "tangent at p1"};
  NodeList nodes = singular_points(alpha.value);
  if (!nodes.degenerate) return {true, ""};
  for (const auto& c : nodes.coincidences) {
    if (c == kTriple) return {false, "triple point"};
  }
  return {false, "tacnode"};
}

int point_multiplicity(const SymPoly& f, const std::array<NumberField, 3>& p) {
  int k = 0;
  while (k < 3 && p[k].is_zero()) ++k;
  if (k == 3) fail(ErrorCode::kDomain, "(0:0:0) is not a projective point");
  const Ring& r = f.ring();
  SymPoly g = f.specialize(k, NumberField(1));
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    NumberField c = p[j] / p[k];
    g = g.substitute(j, sym_var(r, r.vars()[j]) + sym_const(r, c));
  }
  if (g.is_zero()) return INT_MAX;
  int m = INT_MAX;
  for (const auto& [e, c] : g.terms()) {
    int d = 0;
    for (int j = 0; j < 3; ++j) d += static_cast<int>(e[j]);
    m = std::min(m, d);
  }
  return m;
}

VerificationReport ordinary_double_points(const Rational& alpha) {
  VerificationReport rep;
  QuarticFamily fam = build_quartic(alpha);
  struct Node {
    std::array<NumberField, 3> p;
    const SymPoly* a;
    const SymPoly* b;
    std::string name;
  };
  NumberField zero, one(1);
  std::vector<Node> nodes{
      {{zero, zero, one}, &fam.conic, &fam.line_l, "p1 = (0:0:1)"},
      {{one, zero, zero}, &fam.conic, &fam.line_l, "p2 = (1:0:0)"},
      {{one, zero, NumberField(-alpha)}, &fam.line_l, &fam.line_m, "L∩M = (1:0:-alpha)"},
  };
  Poly<Rational> qm("t", {alpha, Rational(2), Rational(1)});
  auto roots = rational_roots(qm);
  if (!roots.empty()) {
    for (const auto& t : roots) {
      nodes.push_back({{one, NumberField(t), NumberField(t * t)}, &fam.conic, &fam.line_m, "Q∩M at t = " + t.to_string()});
    }
  } else {
    auto ctx = NumberField::make_context("t", qm);
    NumberField t = NumberField::generator(ctx);
    nodes.push_back({{one, t, t * t}, &fam.conic, &fam.line_m, "Q∩M at a root t of t^2+2t+alpha"});
  }
  const SymPoly* comps[3] = {&fam.conic, &fam.line_l, &fam.line_m};
  for (const auto& n : nodes) {
    int through = 0;
    for (const auto* c : comps) through += eval_at(*c, n.p).is_zero() ? 1 : 0;
    bool distinct = !proportional(gradient_at(*n.a, n.p), gradient_at(*n.b, n.p));
    int mult = point_multiplicity(fam.equation, n.p);
    bool ok = through == 2 && distinct && mult == 2;
    rep.add("ordinary node " + n.name, ok,
            "point " + point_string(n.p) + ", components through it " + std::to_string(through) + ", multiplicity " +
                std::to_string(mult) + (distinct ? ", distinct tangents" : ", tangent branches"));
  }
  return rep;
}

VerificationReport pencil_substitution_check(std::optional<Rational> alpha, const Rational& c) {
  VerificationReport rep;
  Ring r = alpha ? Ring({"z1", "z", "lambda"}) : Ring({"z1", "z", "lambda", "alpha"});
  SymPoly z1 = sym_var(r, "z1"), z = sym_var(r, "z"), lam = sym_var(r, "lambda");
  SymPoly al = alpha ? sym_const(r, NumberField(*alpha)) : sym_var(r, "alpha");
  SymPoly two = sym_const(r, NumberField(2));
  SymPoly a = lam * lam;
  SymPoly b = -(two * lam + al);
  SymPoly q = lam * lam + two * lam + al;
  SymPoly zsub = sym_const(r, NumberField(c)) * (a - b) * z1 + sym_const(r, NumberField(Rational(1, 2))) * (a + b);
  SymPoly lhs = lam * (zsub - lam * lam) * (zsub + two * lam + al);
  SymPoly rhs = sym_const(r, NumberField(Rational(1, 4))) * lam * q * q * (z1 * z1 - sym_const(r, NumberField(1)));
  SymPoly residual = lhs - rhs;
  rep.add("pencil substitution identity", residual.is_zero(), residual.is_zero() ? "residual 0" : "residual " + residual.to_string());

  // The quartic on the line y = lambda x, with x = 1: C(1, lambda, z) = -lambda(z - lambda^2)(z + 2 lambda + alpha).
  SymPoly conic = lam * lam - z;
  SymPoly quartic = conic * lam * (al + two * lam + z);
  SymPoly pencil = lam * (z - lam * lam) * (z + two * lam + al);
  SymPoly sign_res = quartic + pencil;
  rep.add("quartic restricted to the pencil through p2", sign_res.is_zero(),
          sign_res.is_zero() ? "C(1,lambda,z) = -lambda(z-lambda^2)(z+2lambda+alpha)" : "residual " + sign_res.to_string());
  return rep;
}

}  // namespace k3
