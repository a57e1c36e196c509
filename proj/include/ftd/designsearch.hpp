#pragma once

// Flag-transitive 2-design search on concrete permutation groups.
//
// korbit_designs partitions all k-subsets into orbits and keeps the orbits
// with constant pair coverage. stabilizer_search decides existence for one
// parameter tuple without enumerating k-subsets, using that a flag
// stabilizer has order |G|/(vr) and a block is a union of its orbits.

#include "ftd/permgroup.hpp"
#include "ftd/sieve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ftd {

struct CandidateDesign {
  std::string actionLabel;
  DesignParams params;
  std::vector<PointSubset> blocks;  // sorted by point list
  Int blockStabilizerOrder;
  bool flagTransitive = false;
};

/// lambda if every pair of distinct points lies in the same number of
/// blocks, nullopt otherwise. Uses point-incidence bitsets over blocks.
std::optional<Int> constant_pair_coverage(const std::vector<PointSubset>& blocks, std::size_t v);

/// Full pair-count table: entry [x][y] for x < y.
std::vector<std::vector<std::uint32_t>> pair_counts(const std::vector<PointSubset>& blocks, std::size_t v);

/// True iff the block set is G-invariant and G is transitive on its flags.
bool is_flag_transitive(const PermGroup& g, const std::vector<PointSubset>& blocks);

struct KOrbitOptions {
  std::uint64_t maxSubsets = 10'000'000;
};

struct KOrbitResult {
  std::vector<CandidateDesign> designs;  // orbits with constant pair coverage
  std::vector<std::size_t> orbitSizes;   // all k-subset orbits, ascending
};

/// Throws std::invalid_argument for k <= 2 or k >= v-1, BudgetExceeded when
/// C(v,k) exceeds the option limit.
KOrbitResult korbit_designs(const PermGroup& g, unsigned k, const KOrbitOptions& opt = {});

struct StabilizerSearchOptions {
  SubgroupSearchOptions subgroups;
  /// Cap on unions of stabilizer orbits examined.
  std::uint64_t unionBudget = 50'000'000;
};

struct SearchReport {
  std::string actionLabel;
  DesignParams params;
  Int groupOrder;
  /// "flag-count" (vr does not divide |G|), "block-count" (b does not divide
  /// |G|), "flag-stabilizer" or "block-stabilizer".
  std::string strategy;
  Int subgroupOrder;  // order of the enumerated K or L
  std::size_t subgroupClasses = 0;
  SubgroupSearchStats subgroupStats;
  std::uint64_t unionsExamined = 0;
  std::uint64_t orbitsExpanded = 0;
  std::vector<CandidateDesign> designs;
  std::string exhaustiveness;
};

SearchReport stabilizer_search(const PermGroup& g, const DesignParams& params, const StabilizerSearchOptions& opt = {});

struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerificationReport {
  std::optional<DesignParams> observed;
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

/// Independent re-check of a block set against a group and, optionally,
/// expected parameters.
VerificationReport verify(const std::vector<PointSubset>& blocks, const PermGroup& g,
                          const std::optional<DesignParams>& expected = std::nullopt);

/// Keeps designs with lambda >= (r,lambda)^2 > 1, 2 < k < v-1, b < C(v,k).
std::vector<CandidateDesign> hypothesis_filter(const std::vector<CandidateDesign>& designs);

// Design files: "version 1", then group, v, b, r, k, lambda lines, then one
// "block p1 p2 ..." line per block in canonical order.

struct DesignFile {
  int version = 1;
  std::string group;
  DesignParams params;
  std::vector<PointSubset> blocks;
};

std::string format_design(const CandidateDesign& d);
DesignFile parse_design(const std::string& text);
DesignFile load_design(const std::string& path);

}  // namespace ftd
