#pragma once

// Named permutation actions available to the CLI and the search registry.

#include "ftd/permgroup.hpp"

#include <string>
#include <vector>

namespace ftd {

struct BuiltinInfo {
  std::string label;
  std::string description;
  std::size_t degree;
  unsigned long order;
};

const std::vector<BuiltinInfo>& builtin_actions();
bool is_builtin(const std::string& label);
/// Throws std::invalid_argument for unknown labels.
PermGroup builtin_action(const std::string& label);

}  // namespace ftd
