#include "k3/json_io.hpp"

#include <mpfr.h>

#include <random>

#include "k3/curves.hpp"
#include "k3/error.hpp"
#include "k3/lattice.hpp"
#include "k3/moduli.hpp"
#include "k3/periods.hpp"
#include "k3/quartic.hpp"
#include "k3/suite.hpp"

namespace k3 {

namespace {

Json rational_json(const Rational& q) { return q.to_string(); }

Json bigints(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(bigints(row));
  return out;
}

Json mat2_json(const Mat2& m) {
  return Json::array({Json::array({m.a().to_string(), m.b().to_string()}), Json::array({m.c().to_string(), m.d().to_string()})});
}

Json poly_json(const Poly<Rational>& p) {
  Json out = Json::array();
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) out.push_back(Json::array({k, p.coeff(k).to_string()}));
  return out;
}

Poly<Rational> poly_from_json(const Json& j, const std::string& name) {
  if (!j.is_array()) fail(ErrorCode::kParse, "parametrization field '" + name + "' must be an array of [exponent, coefficient]");
  Poly<Rational> p("r");
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || term[0].get<long>() < 0) {
      fail(ErrorCode::kParse, "bad term in '" + name + "': " + term.dump());
    }
    Rational c;
    if (term[1].is_string()) c = Rational::parse(term[1].get<std::string>());
    else if (term[1].is_number_integer()) c = Rational(term[1].get<long>());
    else fail(ErrorCode::kParse, "coefficient in '" + name + "' must be a string or an integer");
    p = p + Poly<Rational>::monomial("r", c, term[0].get<long>());
  }
  return p;
}

Json factors_json(const Factorization<Rational>& f) {
  Json out = Json::array();
  for (const auto& x : f.factors) out.push_back({{"factor", x.factor.to_string()}, {"multiplicity", x.multiplicity}});
  return out;
}

std::optional<Rational> parse_alpha_value(const std::string& s) {
  AlphaValue a = AlphaValue::parse(s);
  if (a.infinite) return std::nullopt;
  return a.value;
}

Json period_json(const PeriodPoint& p) {
  return {{"w", p.w.to_string()}, {"inside", p.inside}, {"formValue", p.form_value.to_string()}};
}

}  // namespace

Json ledger_json(const VerificationReport& rep) {
  Json out = Json::array();
  for (const auto& c : rep.checks) out.push_back({{"check", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return out;
}

Json fibers_json(const FiberConfiguration& cfg) {
  Json fibers = Json::array();
  for (const auto& f : cfg.fibers) {
    fibers.push_back({{"type", fiber_type_name(f.type)},
                      {"location", f.location_string()},
                      {"places", f.places},
                      {"k", f.k},
                      {"euler", f.euler},
                      {"components", f.components}});
  }
  return {{"f", cfg.f.to_string()}, {"fibers", fibers}, {"eulerTotal", cfg.total_euler}, {"kInfinity", cfg.k_infinity}};
}

Json envelope(const std::string& command, Json inputs, Json results, const VerificationReport& ledger) {
  Json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  out["verificationLedger"] = ledger_json(ledger);
  out["allPassed"] = ledger.checks.empty() || ledger.passed();
  out["versions"] = {{"k3-quartic-lab", kVersion}, {"gmp", gmp_version}, {"mpfr", mpfr_get_version()}};
  return out;
}

Parametrization parametrization_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::kParse, "parametrization must be a JSON object with keys x, y, z");
  for (const char* k : {"x", "y", "z"})
    if (!j.contains(k)) fail(ErrorCode::kParse, std::string("parametrization is missing '") + k + "'");
  return Parametrization::make(poly_from_json(j["x"], "x"), poly_from_json(j["y"], "y"), poly_from_json(j["z"], "z"));
}

Json parametrization_json(const Parametrization& p) {
  return {{"x", poly_json(p.x)}, {"y", poly_json(p.y)}, {"z", poly_json(p.z)}};
}

Json cmd_analyze(const std::string& alpha_text, std::optional<int> mw_rank) {
  AlphaValue alpha = AlphaValue::parse(alpha_text);
  if (mw_rank && *mw_rank < 0) fail(ErrorCode::kPrecondition, "--mw-rank must be >= 0");
  Json inputs = {{"alpha", alpha.to_string()}};
  if (mw_rank) inputs["mwRank"] = *mw_rank;
  Json results;
  VerificationReport ledger;
  Stability st = stability(alpha);
  results["stability"] = {{"stable", st.stable}, {"reason", st.reason}};
  if (alpha.infinite) {
    results["fibration"] = nullptr;
    results["note"] = "alpha = inf is the beta = 0 member of the degeneration at infinity; see fibers --degeneration inf";
    return envelope("analyze", inputs, results, ledger);
  }
  NodeList nodes = singular_points(alpha.value);
  Json pts = Json::array();
  for (const auto& p : nodes.points) {
    pts.push_back({{"label", p.label},
                   {"coords", Json::array({p.coords[0].to_string(), p.coords[1].to_string(), p.coords[2].to_string()})}});
  }
  for (const auto& p : nodes.qm_points) {
    pts.push_back({{"label", p.label},
                   {"coords", Json::array({p.coords[0].to_string(), p.coords[1].to_string(), p.coords[2].to_string()})}});
  }
  results["nodes"] = {{"rational", pts},
                      {"qmPolynomial", nodes.qm_polynomial.to_string()},
                      {"qmRational", nodes.qm_rational},
                      {"distinctLoci", nodes.distinct_loci},
                      {"coincidences", nodes.coincidences}};
  if (!st.stable) {
    results["fibration"] = nullptr;
    return envelope("analyze", inputs, results, ledger);
  }
  for (const auto& c : ordinary_double_points(alpha.value).checks) ledger.add("nodes: " + c.name, c.pass, c.witness);
  for (const auto& c : pencil_substitution_check(alpha.value).checks) ledger.add("pencil: " + c.name, c.pass, c.witness);
  FPoly f = pencil_f(QFunc(alpha.value));
  FiberConfiguration cfg = classify_fibers(f);
  results["fibration"] = fibers_json(cfg);
  ledger.add("euler total is 24", cfg.total_euler == 24, std::to_string(cfg.total_euler));
  int mw = mw_rank.value_or(0);
  int bound = shioda_tate_bound(cfg, mw);
  results["picard"] = {{"mwRank", mw}, {"shiodaTateBound", bound}, {"parityRefined", parity_refine(bound)}};
  return envelope("analyze", inputs, results, ledger);
}

Json cmd_fibers(const std::string& alpha_text, const std::string& degeneration) {
  Json inputs;
  FPoly f;
  VerificationReport ledger;
  if (!degeneration.empty()) {
    inputs["degeneration"] = degeneration;
    DegenerationKind k;
    if (degeneration == "inf") k = DegenerationKind::kAtInfinity;
    else if (degeneration == "zero") k = DegenerationKind::kAtZero;
    else fail(ErrorCode::kParse, "degeneration must be 'inf' or 'zero'");
    auto m = degeneration_model(k);
    for (const auto& c : m.chain.checks) ledger.add(c.name, c.pass, c.witness);
    f = m.at_zero;
  } else if (alpha_text.empty()) {
    inputs["alpha"] = "symbolic";
    f = pencil_f(QFunc::variable("alpha"));
  } else {
    inputs["alpha"] = alpha_text;
    auto a = parse_alpha_value(alpha_text);
    if (!a) fail(ErrorCode::kDomain, "alpha = inf has no pencil fibration; use --degeneration inf");
    f = pencil_f(QFunc(*a));
  }
  TwistResult tw = twist_minimize(f);
  FiberConfiguration cfg = classify_fibers(tw.reduced);
  Json results = fibers_json(cfg);
  results["twistRemoved"] = tw.twist.removed.to_string();
  results["shiodaTateBound"] = shioda_tate_bound(cfg, 0);
  ledger.add("euler total is 24", cfg.total_euler == 24, std::to_string(cfg.total_euler));
  return envelope("fibers", inputs, results, ledger);
}

Json cmd_lattice_invariants(const std::string& preset) { return lattice_report(lattice_preset(preset), {{"preset", preset}}); }

Json lattice_report(const GramLattice& l, Json inputs) {
  LatticeInvariants inv = lattice_invariants(l);
  Json dv = Json::array();
  for (const auto& q : inv.discriminant_values) dv.push_back(rational_json(q));
  Json results = {{"name", l.name},
                  {"rank", inv.rank},
                  {"signature", Json::array({inv.s_plus, inv.s_minus})},
                  {"determinant", inv.determinant.get_str()},
                  {"invariantFactors", bigints(inv.invariant_factors)},
                  {"ell", inv.ell},
                  {"twoElementary", inv.two_elementary},
                  {"delta", inv.delta},
                  {"discriminantValues", dv}};
  if (l.rank() <= 8) results["gram"] = matrix_json(l.gram);
  VerificationReport ledger;
  BigInt prod = 1;
  for (const auto& d : inv.invariant_factors) prod *= d;
  ledger.add("|det| equals the product of invariant factors", abs(inv.determinant) == prod);
  ledger.add("s+ + s- = rank", inv.s_plus + inv.s_minus == inv.rank);
  return envelope("lattice invariants", std::move(inputs), results, ledger);
}

Json cmd_lattice_tn(long n) {
  TnResult r = tn_search(n);
  Json results = {{"n", n}, {"obstructed", r.obstructed}, {"method", r.method}, {"transcript", r.transcript}};
  VerificationReport ledger;
  if (r.vector) {
    const auto& a = r.vector->a;
    results["vector"] = Json::array({a[0], a[1], a[2], a[3]});
    results["minorGcd"] = minor_gcd(*r.vector);
    GramLattice g = tn_gram(*r.vector);
    results["gram"] = matrix_json(g.gram);
    ledger.add("form value equals n", r.vector->n() == n);
    ledger.add("2x2 minors have gcd 1", minor_gcd(*r.vector) == 1);
    ledger.add("Gram of <a, rho(a)> is diag(2n, 2n)", g.gram == lattice_diag({2 * n, 2 * n}).gram, int_matrix_string(g.gram));
  } else {
    results["vector"] = nullptr;
    ledger.add("no primitive vector with |a_i| <= 12", tn_brute_force(n, 12, true).empty());
  }
  return envelope("lattice tn", {{"n", n}}, results, ledger);
}

Json cmd_split(const std::string& alpha_text, const Json& param, int root_choice) {
  auto alpha = parse_alpha_value(alpha_text);
  if (!alpha) fail(ErrorCode::kDomain, "split needs a finite alpha");
  Parametrization p = parametrization_from_json(param);
  QuarticFamily fam = build_quartic(*alpha);
  FourthPowerReport rep = fourth_power_test(fam, p);
  Json comps = Json::array();
  for (const auto& c : rep.components) comps.push_back(c.to_string());
  Json results = {{"verdict", split_verdict_name(rep.verdict)},
                  {"composed", rep.composed.to_string()},
                  {"constant", rep.factors.constant.to_string()},
                  {"factors", factors_json(rep.factors)},
                  {"constantFourthPowerInQ", rep.constant_fourth_power_in_q},
                  {"degreeDivisibleBy4", rep.degree_divisible_by_4},
                  {"components", comps}};
  VerificationReport ledger;
  if (rep.components.size() == 3) {
    Poly<Rational> prod = rep.components[0] * rep.components[1] * rep.components[2];
    ledger.add("composed polynomial is the product of conic, L and M", prod == rep.composed);
  }
  (void)root_choice;
  return envelope("split", {{"alpha", alpha->to_string()}, {"param", parametrization_json(p)}}, results, ledger);
}

Json cmd_cm(const std::string& beta4_text, int precision) {
  Rational b4 = Rational::parse(beta4_text);
  Poly<Rational> cubic("u", {Rational(0), Rational(2) * (Rational(1) + b4), Rational(4), Rational(1)});
  Rational j = j_invariant(cubic);
  PeriodRatio pr = period_ratio_cubic(cubic, precision);
  CmResult cm = cm_isogeny_check(pr.tau, 10, pr.error_bound);
  Complex jn = j_from_tau(pr.tau);
  Json results = {{"curve", "v^2 = " + cubic.to_string()},
                  {"jExact", j.to_string()},
                  {"tau", {{"re", pr.tau.re.to_string(30)}, {"im", pr.tau.im.to_string(30)}}},
                  {"tauErrorBound", pr.error_bound.to_string(6)},
                  {"jNumeric", {{"re", jn.re.to_string(30)}, {"im", jn.im.to_string(30)}}},
                  {"cm", {{"verdict", cm_verdict_name(cm.verdict)},
                          {"conductor", cm.conductor},
                          {"relation", Json::array({cm.a, cm.b, cm.c})},
                          {"discriminant", cm.discriminant},
                          {"note", cm.note}}}};
  VerificationReport ledger;
  Real jr(j, precision);
  Real diff = abs(jn - Complex{jr, Real(Rational(0), precision)});
  Real scale = abs(jr) + Real(Rational(1), precision);
  bool agree = diff.to_double() < 1e-12 * scale.to_double();
  ledger.add("numeric j from tau agrees with the exact j", agree, "|difference| = " + diff.to_string(6));
  return envelope("cm", {{"beta4", b4.to_string()}, {"precision", precision}}, results, ledger);
}

Json cmd_moduli(const std::string& check) {
  if (check != "all" && check != "fricke" && check != "cayley" && check != "period") {
    fail(ErrorCode::kParse, "moduli --check must be all, fricke, cayley or period");
  }
  Json results;
  VerificationReport ledger;
  const auto& mm = moduli_matrices();
  if (check == "all" || check == "fricke") {
    FrickeReport f = fricke_checks();
    for (const auto& c : f.report.checks) ledger.add(c.name, c.pass, c.witness);
    results["fricke"] = {{"T", mat2_json(mm.t)},
                         {"F", mat2_json(mm.fricke)},
                         {"UpsilonL", mat2_json(mm.upsilon_l)},
                         {"notes", f.notes}};
  }
  if (check == "all" || check == "cayley") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    int ok = 0, total = 100;
    for (int trial = 0; trial < total; ++trial) {
      Mat2 n = Mat2::identity();
      for (int k = 0; k < 4; ++k) {
        NumberField t(Rational(num(rng), den(rng)));
        n = n * (k % 2 ? Mat2::of(NumberField(1), t, NumberField(0), NumberField(1))
                       : Mat2::of(NumberField(1), NumberField(0), t, NumberField(1)));
      }
      Mat2 m = inverse_cayley(n);
      if (membership(m, Group::kSU11).member && cayley(m) == n && cayley_product(m) == n && inverse_cayley(cayley(m)) == m) ++ok;
    }
    ledger.add("cayley round trip on 100 random SU(1,1) elements", ok == total, std::to_string(ok) + "/" + std::to_string(total));
    results["cayley"] = {{"K", mat2_json(cayley_k())}, {"samples", total}, {"roundTrips", ok}};
  }
  if (check == "all" || check == "period") {
    NumberField i = z8_i();
    Json pts = Json::array();
    for (auto [z2, z4] : {std::pair{NumberField(1), NumberField(0)}, std::pair{NumberField(2), i},
                          std::pair{NumberField(1), NumberField(1)}}) {
      PeriodPoint p = period_point(z2, z4);
      for (const auto& c : p.checks.checks) ledger.add("period (" + z2.to_string() + ", " + z4.to_string() + "): " + c.name, c.pass, c.witness);
      Json pj = period_json(p);
      pj["z2"] = z2.to_string();
      pj["z4"] = z4.to_string();
      pts.push_back(pj);
    }
    for (const auto& c : gaussian_form_check().checks) ledger.add(c.name, c.pass, c.witness);
    results["periodPoints"] = pts;
  }
  return envelope("moduli", {{"check", check}}, results, ledger);
}

Json cmd_verify(const std::string& suite) {
  VerificationReport rep = run_suite(suite);
  int passed = 0;
  for (const auto& c : rep.checks) passed += c.pass;
  Json results = {{"suite", suite}, {"checks", rep.checks.size()}, {"passed", passed}};
  return envelope("verify", {{"suite", suite}}, results, rep);
}

}  // namespace k3
