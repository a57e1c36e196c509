#include "ftd/builtin.hpp"

#include "ftd/classical.hpp"

#include <algorithm>

namespace ftd {

const std::vector<BuiltinInfo>& builtin_actions() {
  static const std::vector<BuiltinInfo> t = {
      {"psl3_2", "PSL(3,2) on the 7 points of PG(2,2)", 7, 168},
      {"psl2_7", "PSL(2,7) on the 8 points of the projective line", 8, 168},
      {"pgl2_7", "PGL(2,7) on the 8 points of the projective line", 8, 336},
      {"psl3_3", "PSL(3,3) on the 13 points of PG(2,3)", 13, 5616},
      {"psl3_3_2", "PSL(3,3):2 on 13 points and 13 lines", 26, 11232},
      {"psl4_2", "PSL(4,2) on the 15 points of PG(3,2)", 15, 20160},
      {"psu3_3", "PSU(3,3) on the 28 isotropic points", 28, 6048},
      {"psu3_3_2", "PSU(3,3):2 on the 28 isotropic points", 28, 12096},
      {"a8", "A8 on 8 points", 8, 20160},
      {"s8", "S8 on 8 points", 8, 40320},
  };
  return t;
}

bool is_builtin(const std::string& label) {
  const auto& t = builtin_actions();
  return std::any_of(t.begin(), t.end(), [&](const BuiltinInfo& b) { return b.label == label; });
}

PermGroup builtin_action(const std::string& label) {
  PermGroup g = [&]() {
    if (label == "psl3_2") return linear_action(3, 2, ActionVariant::Socle);
    if (label == "psl2_7") return linear_action(2, 7, ActionVariant::Socle);
    if (label == "pgl2_7") return linear_action(2, 7, ActionVariant::PGL);
    if (label == "psl3_3") return linear_action(3, 3, ActionVariant::Socle);
    if (label == "psl3_3_2") return linear_action(3, 3, ActionVariant::SocleExt2);
    if (label == "psl4_2") return linear_action(4, 2, ActionVariant::Socle);
    if (label == "psu3_3") return unitary_action(3, 3, ActionVariant::Socle);
    if (label == "psu3_3_2") return unitary_action(3, 3, ActionVariant::SocleExt2);
    if (label == "a8") return alternating_action(8);
    if (label == "s8") return symmetric_action(8);
    throw std::invalid_argument("unknown builtin group '" + label + "'");
  }();
  g.set_label(label);
  return g;
}

}  // namespace ftd
