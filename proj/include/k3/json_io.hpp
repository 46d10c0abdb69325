#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "k3/covers.hpp"
#include "k3/fibration.hpp"
#include "k3/lattice.hpp"
#include "k3/report.hpp"

namespace k3 {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

Json ledger_json(const VerificationReport& rep);
Json fibers_json(const FiberConfiguration& cfg);

// {command, inputs, results, verificationLedger, allPassed, versions}
Json envelope(const std::string& command, Json inputs, Json results, const VerificationReport& ledger);

// {"x": [[e, "c"], ...], "y": ..., "z": ...}; coefficients as strings or integers.
Parametrization parametrization_from_json(const Json& j);
Json parametrization_json(const Parametrization& p);

Json cmd_analyze(const std::string& alpha, std::optional<int> mw_rank);
// alpha empty: free parameter; degeneration "inf" or "zero" uses the beta = 0 models.
Json cmd_fibers(const std::string& alpha, const std::string& degeneration);
Json cmd_lattice_invariants(const std::string& preset);
Json lattice_report(const GramLattice& l, Json inputs);
Json cmd_lattice_tn(long n);
Json cmd_split(const std::string& alpha, const Json& param, int root_choice = 2);
Json cmd_cm(const std::string& beta4, int precision);
// check: all, fricke, cayley, period
Json cmd_moduli(const std::string& check);
Json cmd_verify(const std::string& suite);

}  // namespace k3
