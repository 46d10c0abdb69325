#include "k3/multipoly.hpp"

#include <algorithm>

namespace k3 {

Ring::Ring(std::vector<std::string> vars) {
  auto sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kConfiguration, "duplicate variable in ring");
  }
  vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
}

const std::vector<std::string>& Ring::vars() const {
  static const std::vector<std::string> kEmpty;
  return vars_ ? *vars_ : kEmpty;
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  const auto& v = vars();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  auto i = find(name);
  if (!i) fail(ErrorCode::kConfiguration, "unknown variable '" + std::string(name) + "'");
  return *i;
}

}  // namespace k3
