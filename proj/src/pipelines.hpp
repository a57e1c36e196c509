#pragma once

// Class-specific pieces of the elimination pipelines: extra divisors of r*,
// imported conclusions, and the concrete searches for cells the arithmetic
// leaves open.

#include "ftd/eliminator.hpp"
#include "ftd/permgroup.hpp"

namespace ftd::detail {

struct Refinement {
  std::string name;
  std::string citation;
  /// r* divides `divisor` (a subdegree, a gcd of subdegrees, or
  /// |Out||H0|/|N| for N fixing two points).
  Int divisor;
  std::vector<Witness> witnesses;
};

std::vector<Refinement> refinements(const GroupSpec& spec, const SubgroupCase& sc, const CaseOrders& orders);

enum class ConclusionKind { None, SymmetricExcluded, Excluded };

struct Conclusion {
  ConclusionKind kind = ConclusionKind::None;
  std::string name;
  std::string citation;
};

Conclusion cited_conclusion(const GroupSpec& spec, const SubgroupCase& sc);

struct SearchTarget {
  std::string group;            // builtin label
  unsigned long cosetOrder = 0;  // act on cosets of a subgroup of this order; 0 = natural action
  bool korbit = false;           // enumerate k-subset orbits instead of stabilizer_search
};

std::vector<SearchTarget> search_targets(const GroupSpec& spec, const SubgroupCase& sc);

/// Builds the permutation group for a target (coset actions use the first
/// class of subgroups of the given order, which must be unique).
PermGroup build_target(const SearchTarget& t, const SubgroupSearchOptions& opt);

/// Hint values for factoring |Out||H0| of a cell.
std::vector<Int> factor_hints(const GroupSpec& spec, const SubgroupCase& sc);

}  // namespace ftd::detail
