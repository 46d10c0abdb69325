#pragma once

#include <string>
#include <vector>

#include "k3/report.hpp"

namespace k3 {

// Named verification suites; "all" runs every one of them in a fixed order.
const std::vector<std::string>& suite_names();
VerificationReport run_suite(const std::string& name);

}  // namespace k3
