#include "k3/suite.hpp"

#include "k3/covers.hpp"
#include "k3/curves.hpp"
#include "k3/error.hpp"
#include "k3/fibration.hpp"
#include "k3/lattice.hpp"
#include "k3/moduli.hpp"
#include "k3/periods.hpp"
#include "k3/quartic.hpp"

namespace k3 {

namespace {

using Runner = VerificationReport (*)();

std::string table(const FiberConfiguration& cfg) {
  std::string s;
  for (const auto& f : cfg.fibers) {
    if (!s.empty()) s += ", ";
    s += fiber_type_name(f.type) + " at " + f.location_string();
    if (f.places > 1) s += " (" + std::to_string(f.places) + " places)";
  }
  return s + "; euler " + std::to_string(cfg.total_euler);
}

bool pencil_shape(const FiberConfiguration& cfg) {
  return cfg.fibers.size() == 3 && cfg.fibers[0].type == FiberType::kIIIStar && cfg.fibers[0].location_string() == "lambda" &&
         cfg.fibers[1].type == FiberType::kI0Star && cfg.fibers[1].places == 2 && cfg.fibers[2].type == FiberType::kIII &&
         !cfg.fibers[2].location && cfg.total_euler == 24;
}

void take(VerificationReport& rep, const std::string& prefix, const VerificationReport& sub) {
  for (const auto& c : sub.checks) rep.add(prefix + c.name, c.pass, c.witness);
}

VerificationReport fibration_suite() {
  VerificationReport rep;
  QFunc a = QFunc::variable("alpha");
  auto cfg = classify_fibers(pencil_f(a));
  rep.add("fiber table of lambda^3 (lambda^2 + 2 lambda + alpha)^2", pencil_shape(cfg), table(cfg));
  auto c81 = classify_fibers(pencil_f(QFunc(Rational(81, 49))));
  rep.add("fiber table at alpha = 81/49", pencil_shape(c81), table(c81));
  take(rep, "pencil: ", pencil_substitution_check(std::nullopt));
  take(rep, "chain: ", weierstrass_chain_generic());
  auto red = weierstrass_reduce(pencil_beta(a), a);
  take(rep, "reduction: ", red.chain);
  rep.add("reduction lands on f = lambda^3 q^2", red.f == pencil_f(a), red.f.to_string());
  return rep;
}

VerificationReport degeneration_suite() {
  VerificationReport rep;
  auto inf = degeneration_model(DegenerationKind::kAtInfinity);
  take(rep, "at infinity: ", inf.chain);
  auto ci = classify_fibers(inf.at_zero);
  rep.add("at infinity, beta = 0: same configuration as the pencil", pencil_shape(ci), table(ci));
  auto zero = degeneration_model(DegenerationKind::kAtZero);
  take(rep, "at zero: ", zero.chain);
  auto cz = classify_fibers(zero.at_zero);
  int n3 = 0, n0 = 0;
  for (const auto& fb : cz.fibers) {
    if (fb.type == FiberType::kIIIStar) n3 += fb.places;
    if (fb.type == FiberType::kI0Star) n0 += fb.places;
  }
  bool shape = cz.fibers.size() == 3 && cz.total_euler == 24 && n3 == 2 && n0 == 1;
  rep.add("at zero, beta = 0: III*, III*, I0* with euler 24", shape, table(cz));
  rep.add("at zero: Shioda-Tate bound 20", shioda_tate_bound(cz, 0) == 20, std::to_string(shioda_tate_bound(cz, 0)));
  Poly<Rational> f("lambda", {0, 0, 0, 1, 0, 2, 0, 1});
  auto phi = form_scaling_order(phi_automorphism(), f);
  take(rep, "phi: ", phi.preserved);
  rep.add("phi scales the 2-form by a primitive 8th root of unity", phi.order == 8,
          "scalar " + phi.scalar.to_string() + ", order " + std::to_string(phi.order));
  return rep;
}

VerificationReport picard_suite() {
  VerificationReport rep;
  auto cfg = classify_fibers(pencil_f(QFunc(Rational(81, 49))));
  int b0 = shioda_tate_bound(cfg, 0), b1 = shioda_tate_bound(cfg, 1);
  rep.add("generic bound 18 (mw 0)", b0 == 18, std::to_string(b0));
  rep.add("alpha = 81/49 bound 19 with one section", b1 == 19, std::to_string(b1));
  rep.add("parity refinement 19 -> 20", parity_refine(b1) == 20, std::to_string(parity_refine(b1)));
  return rep;
}

VerificationReport cover_suite() {
  VerificationReport rep;
  auto sym = verify_cover_map(std::nullopt);
  take(rep, "", sym.report);
  take(rep, "", verify_cover_map(Rational(81, 49)).report);
  auto neg = verify_cover_map_without_root(Rational(81, 49));
  rep.add("negative control: w = tau w1 is not on the cover", !neg.report.passed());
  take(rep, "pencil: ", pencil_substitution_check(Rational(81, 49)));
  return rep;
}

VerificationReport curves_suite() {
  VerificationReport rep;
  take(rep, "f: ", verify_map(quotient_map_f()));
  take(rep, "iota: ", verify_involution(involution_iota()));
  int o1 = map_order(involution_iota_prime()), o2 = map_order(e_prime_automorphism()), o3 = map_order(e_order4());
  rep.add("iota' has order 4", o1 == 4, std::to_string(o1));
  rep.add("(x, y) -> (1/x, i y/x^2) has order 4", o2 == 4, std::to_string(o2));
  rep.add("w1 -> i w1 has order 4", o3 == 4, std::to_string(o3));
  take(rep, "E' -> E: ", verify_map(e_prime_to_e()));
  take(rep, "E' -> E_beta(7/9): ", verify_map(e_prime_to_e_beta_79()));
  auto d1 = pullback_differential(quotient_map_f());
  auto d2 = pullback_differential(compose(quotient_map_f(), involution_iota_prime()));
  NumberField det = d1.c0 * d2.c1 - d1.c1 * d2.c0;
  rep.add("f*(du/v) and (f iota')*(du/v) are independent", d1.check.passed() && d2.check.passed() && !det.is_zero(),
          "det " + det.to_string());
  return rep;
}

VerificationReport split_suite() {
  VerificationReport rep;
  QuarticFamily fam = build_quartic(Rational(81, 49));
  for (const auto& [name, p] : {std::pair{"psi", Parametrization::psi()}, std::pair{"zeta", Parametrization::zeta()}}) {
    auto r = fourth_power_test(fam, p);
    bool ok = r.verdict == SplitVerdict::kSplits && r.factors.factors.size() == 3;
    std::string w = split_verdict_name(r.verdict) + ":";
    for (const auto& f : r.factors.factors) {
      ok = ok && f.multiplicity == 4;
      w += " (" + f.factor.to_string() + ")^" + std::to_string(f.multiplicity);
    }
    rep.add(std::string(name) + " splits with profile {4,4,4}", ok, w);
  }
  return rep;
}

VerificationReport section_suite() {
  VerificationReport rep;
  auto pair = lift_two_section(Parametrization::psi(), Rational(81, 49), 2);
  take(rep, "lift: ", pair.checks);
  auto s = sum_sections(pair);
  take(rep, "sum: ", s.checks);
  take(rep, "golden: ", compare_golden(s));
  take(rep, "", section_to_zeta_check(s, Rational(81, 49)));
  take(rep, "", non_torsion_evidence(s));
  return rep;
}

VerificationReport lattice_suite() {
  VerificationReport rep;
  auto n = lattice_invariants(lattice_preset("N"));
  bool nok = n.rank == 18 && n.s_plus == 1 && n.s_minus == 17 && n.ell == 4 && n.delta == 1 && abs(n.determinant) == 16;
  rep.add("N: (r, s+, s-, ell, delta) = (18, 1, 17, 4, 1), |det| 16", nok,
          "(" + std::to_string(n.rank) + ", " + std::to_string(n.s_plus) + ", " + std::to_string(n.s_minus) + ", " +
              std::to_string(n.ell) + ", " + std::to_string(n.delta) + "), det " + n.determinant.get_str());
  auto t = lattice_invariants(lattice_preset("T"));
  rep.add("T: signature (2, 2), ell 4, 2-elementary", t.s_plus == 2 && t.s_minus == 2 && t.ell == 4 && t.two_elementary);
  return rep;
}

VerificationReport rank4_suite() { return rank4_classification_check(4).report; }

VerificationReport tn_suite() {
  VerificationReport rep;
  bool ok = true;
  std::string w;
  for (long n = 1; n <= 100; ++n) {
    auto r = tn_search(n);
    bool good = n % 4 == 2 ? r.obstructed && tn_brute_force(n, 12, true).empty()
                           : r.vector && minor_gcd(*r.vector) == 1 && tn_gram(*r.vector).gram == lattice_diag({2 * n, 2 * n}).gram;
    if (!good) {
      ok = false;
      w += std::to_string(n) + " ";
    }
  }
  rep.add("T_n realized for n <= 100, n != 2 mod 4, and obstructed otherwise", ok, ok ? "100 values" : "bad n: " + w);
  rep.add("Km(E x E): T_2 is obstructed", tn_search(2).obstructed && kummer_tn(1).gram == lattice_diag({4, 4}).gram);
  return rep;
}

VerificationReport fricke_suite() {
  VerificationReport rep = fricke_checks().report;
  take(rep, "period point (2, i): ", period_point(NumberField(2), z8_i()).checks);
  take(rep, "", gaussian_form_check());
  return rep;
}

VerificationReport numeric_suite() {
  VerificationReport rep;
  Poly<Rational> c1("x", {0, -1, 0, 1});
  auto pr = period_ratio_cubic(c1, 128);
  Real d = abs(pr.tau - complex_from(Rational(0), Rational(1), 128));
  rep.add("tau(y^2 = x^3 - x) = i within 1e-12 at 128 bits", d.to_double() < 1e-12, "|tau - i| = " + d.to_string(6));
  Poly<Rational> eb("u", {Rational(0), Rational(32, 9), Rational(4), Rational(1)});
  Rational j = j_invariant(eb);
  rep.add("j(E_beta) at beta^4 = 7/9 is 1728", j == Rational(1728), j.to_string());
  auto pb = period_ratio_cubic(eb, 128);
  auto cm = cm_isogeny_check(pb.tau, 10, pb.error_bound);
  rep.add("E_beta(7/9) is isogenous to E with conductor 1", cm.verdict == CmVerdict::kIsogenousToE && cm.conductor == 1,
          cm_verdict_name(cm.verdict) + ", conductor " + std::to_string(cm.conductor));
  return rep;
}

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"fibration", fibration_suite}, {"degenerations", degeneration_suite}, {"picard", picard_suite},
      {"cover", cover_suite},         {"curves", curves_suite},             {"split", split_suite},
      {"section", section_suite},     {"lattice", lattice_suite},           {"rank4", rank4_suite},
      {"tn", tn_suite},               {"fricke", fricke_suite},             {"numeric", numeric_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out{"all"};
    for (const auto& [n, _] : registry()) out.push_back(n);
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name) {
  VerificationReport rep;
  bool found = false;
  for (const auto& [n, run] : registry()) {
    if (name != "all" && name != n && !(name == "moduli" && n == "fricke")) continue;
    found = true;
    take(rep, "[" + n + "] ", run());
  }
  if (!found) fail(ErrorCode::kParse, "unknown suite '" + name + "'");
  return rep;
}

}  // namespace k3
