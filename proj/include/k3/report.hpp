#pragma once

#include <string>
#include <vector>

namespace k3 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // residual, counterexample or note
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return !checks.empty();
  }
  VerificationReport& add(std::string name, bool pass, std::string witness = {}) {
    checks.push_back({std::move(name), pass, std::move(witness)});
    return *this;
  }
  VerificationReport& merge(const VerificationReport& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    return *this;
  }
};

}  // namespace k3
