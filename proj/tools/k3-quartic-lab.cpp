#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "k3quartic.h"

using Json = nlohmann::ordered_json;

namespace {

void print_fibers(const Json& fib) {
  std::cout << "  f = " << fib["f"].get<std::string>() << "\n";
  for (const auto& f : fib["fibers"]) {
    std::cout << "  " << f["type"].get<std::string>() << " at " << f["location"].get<std::string>();
    if (f["places"].get<int>() > 1) std::cout << " (" << f["places"] << " places)";
    std::cout << ", euler " << f["euler"] << "\n";
  }
  std::cout << "  euler total " << fib["eulerTotal"] << "\n";
}

void print_summary(const Json& rep) {
  const Json& res = rep["results"];
  const std::string cmd = rep["command"];
  std::cout << cmd << " " << rep["inputs"].dump() << "\n";
  if (cmd == "analyze") {
    std::string reason = res["stability"]["reason"];
    std::cout << "  " << (res["stability"]["stable"].get<bool>() ? "stable" : "unstable") << (reason.empty() ? "" : ": " + reason)
              << "\n";
    if (!res["fibration"].is_null()) {
      print_fibers(res["fibration"]);
      const auto& p = res["picard"];
      std::cout << "  Shioda-Tate bound " << p["shiodaTateBound"] << " (mw " << p["mwRank"] << "), parity refined "
                << p["parityRefined"] << "\n";
    }
  } else if (cmd == "fibers") {
    print_fibers(res);
  } else if (cmd == "lattice invariants") {
    std::cout << "  rank " << res["rank"] << ", signature (" << res["signature"][0] << ", " << res["signature"][1] << "), det "
              << res["determinant"].get<std::string>() << ", ell " << res["ell"] << ", delta " << res["delta"]
              << (res["twoElementary"].get<bool>() ? ", 2-elementary" : "") << "\n";
  } else if (cmd == "lattice tn") {
    if (res["obstructed"].get<bool>()) std::cout << "  obstructed\n";
    else std::cout << "  vector " << res["vector"].dump() << ", Gram " << res["gram"].dump() << "\n";
    for (const auto& line : res["transcript"]) std::cout << "  | " << line.get<std::string>() << "\n";
  } else if (cmd == "split") {
    std::cout << "  " << res["verdict"].get<std::string>() << "\n";
    for (const auto& f : res["factors"]) std::cout << "  (" << f["factor"].get<std::string>() << ")^" << f["multiplicity"] << "\n";
  } else if (cmd == "cm") {
    std::cout << "  j = " << res["jExact"].get<std::string>() << "\n  tau = " << res["tau"]["re"].get<std::string>() << " + "
              << res["tau"]["im"].get<std::string>() << " i\n  " << res["cm"]["verdict"].get<std::string>();
    if (res["cm"]["conductor"].get<long>() > 0) std::cout << " (conductor " << res["cm"]["conductor"] << ")";
    std::cout << "\n";
  }
  int passed = 0, total = 0;
  for (const auto& c : rep["verificationLedger"]) {
    ++total;
    bool ok = c["pass"].get<bool>();
    passed += ok;
    std::cout << (ok ? "  PASS " : "  FAIL ") << c["check"].get<std::string>();
    if (!ok && !c["witness"].get<std::string>().empty()) std::cout << "  [" << c["witness"].get<std::string>() << "]";
    std::cout << "\n";
  }
  if (total) std::cout << passed << "/" << total << " checks passed\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--param", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the five-nodal quartic K3 family"};
  app.set_version_flag("--version", k3_version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string alpha, degeneration, preset = "N", param_file, beta4, check = "all", suite = "all", report_file;
  long n = 1;
  int mw_rank = -1, precision = 128;
  bool json = false;
  app.add_flag("--json", json, "print the JSON report instead of a summary");
  app.add_option("--report", report_file, "also write the JSON report to FILE");

  auto* analyze = app.add_subcommand("analyze", "stability, nodes, fiber table and Picard bounds");
  analyze->add_option("--alpha", alpha, "p/q or inf")->required();
  analyze->add_option("--mw-rank", mw_rank, "Mordell-Weil rank for the Shioda-Tate bound")->check(CLI::NonNegativeNumber);

  auto* fibers = app.add_subcommand("fibers", "Kodaira fiber table");
  fibers->add_option("--alpha", alpha, "p/q; omit for the free parameter");
  fibers->add_option("--degeneration", degeneration, "beta = 0 model")->check(CLI::IsMember({"inf", "zero"}));

  auto* lattice = app.add_subcommand("lattice", "lattice invariants and T_n search");
  lattice->require_subcommand(1);
  auto* inv = lattice->add_subcommand("invariants", "invariants of a preset lattice");
  inv->add_option("--preset", preset, "U, A1, A1(-1), E7, N or T");
  auto* tn = lattice->add_subcommand("tn", "realize diag(2n, 2n) inside T");
  tn->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* split = app.add_subcommand("split", "fourth-power splitting test");
  split->add_option("--alpha", alpha)->required();
  split->add_option("--param", param_file, "parametrization JSON")->required()->check(CLI::ExistingFile);

  auto* cm = app.add_subcommand("cm", "period ratio and isogeny evidence for E_beta");
  cm->add_option("--beta4", beta4, "beta^4 as p/q")->required();
  cm->add_option("--precision", precision, "bits")->check(CLI::Range(32, 4096));

  auto* moduli = app.add_subcommand("moduli", "modular group identities");
  moduli->add_option("--check", check)->check(CLI::IsMember({"all", "fricke", "cayley", "period"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all or a suite name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  k3_report* rep = nullptr;
  k3_status st = K3_ERR_INTERNAL;
  if (*analyze) st = k3_analyze(alpha.c_str(), mw_rank, &rep);
  else if (*fibers) st = k3_fibers(alpha.empty() ? nullptr : alpha.c_str(), degeneration.empty() ? nullptr : degeneration.c_str(), &rep);
  else if (*inv) st = k3_lattice_invariants(preset.c_str(), &rep);
  else if (*tn) st = k3_lattice_tn(n, &rep);
  else if (*split) {
    std::string text;
    try {
      text = read_file(param_file);
    } catch (const CLI::ValidationError& e) {
      std::cerr << e.what() << "\n";
      return 2;
    }
    st = k3_split(alpha.c_str(), text.c_str(), &rep);
  } else if (*cm) st = k3_cm(beta4.c_str(), precision, &rep);
  else if (*moduli) st = k3_moduli(check.c_str(), &rep);
  else if (*verify) st = k3_verify(suite.c_str(), &rep);

  if (st != K3_OK) {
    std::cerr << "error (" << k3_status_name(st) << "): " << k3_last_error() << "\n";
    return st == K3_ERR_INTERNAL ? 1 : 2;
  }

  Json parsed = Json::parse(k3_report_json(rep, -1));
  if (!report_file.empty()) {
    std::ofstream out(report_file);
    out << k3_report_json(rep, 2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << report_file << "\n";
      k3_report_free(rep);
      return 2;
    }
  }
  if (json) std::cout << k3_report_json(rep, 2) << "\n";
  else print_summary(parsed);
  bool ok = k3_report_all_passed(rep);
  k3_report_free(rep);
  return ok ? 0 : 1;
}
