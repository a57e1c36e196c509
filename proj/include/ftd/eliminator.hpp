#pragma once

// Per-cell constraint pipelines. A cell is a socle (family, n, q) together
// with a candidate point-stabilizer type; run_case replays the arithmetic
// screens in proof order and stops at the first one that fails.

#include "ftd/designsearch.hpp"
#include "ftd/grouporders.hpp"
#include "ftd/sieve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ftd {

struct Witness {
  std::string name;
  std::string value;
};

enum class StepVerdict {
  Info,        // records values, never eliminates
  Pass,
  Eliminated,
  CitedTable,  // conclusion imported from a cited classification
  SearchEmpty,
  SearchFound,
};

/// "info", "pass", "eliminated", "excluded-by-cited-table", "search-empty",
/// "search-found".
std::string to_string(StepVerdict v);

struct Step {
  std::string name;
  std::string citation;
  std::vector<Witness> witnesses;
  StepVerdict verdict = StepVerdict::Info;
};

enum class FinalKind { Eliminated, Survives, NeedsSearch };
std::string to_string(FinalKind k);

struct SearchOutcome {
  std::string group;
  std::string method;  // "korbit" or a stabilizer_search strategy
  DesignParams params;
  std::size_t designs = 0;
  std::string certificate;
};

struct Final {
  FinalKind kind = FinalKind::Eliminated;
  std::size_t stepIndex = 0;  // failing step when Eliminated
  std::vector<DesignParams> candidates;  // the first candidateLimit tuples
  std::size_t candidateCount = 0;        // all tuples passing the screens
  bool truncated = false;                // tuple enumeration hit the work budget
  std::vector<std::string> flags;  // e.g. "non-symmetric"
  std::vector<SearchOutcome> searches;
};

struct EliminationReport {
  GroupSpec spec;
  SubgroupCase sc;
  CaseOrders orders;
  std::vector<Step> steps;
  Final final;
};

struct EliminatorOptions {
  /// Run the registered concrete searches for cells the arithmetic leaves open.
  bool runSearch = true;
  std::uint64_t admissibleBudget = 2'000'000;
  /// Tuples kept in a report; the count is always exact.
  std::size_t candidateLimit = 1000;
  StabilizerSearchOptions search;
  KOrbitOptions korbit;
};

/// Throws IncompatibleCase if the case does not fit the spec.
EliminationReport run_case(const GroupSpec& spec, const SubgroupCase& sc, const EliminatorOptions& opt = {});

/// Builds a case from the CLI class token and its parameters; throws
/// std::invalid_argument for unknown tokens.
SubgroupCase case_from_token(Family family, const std::string& token, int i, int m, int t, long q0, int eps, int line);

struct SweepGrid {
  Family family = Family::Linear;
  int nMin = 3, nMax = 3;
  unsigned long qMin = 2, qMax = 2;
  /// Class tokens to keep (see class_token); empty keeps all.
  std::vector<std::string> classes;

  /// Throws std::invalid_argument for empty ranges or n < 3.
  void validate() const;
  /// Socles in the grid, ordered by n then q; q runs over prime powers and
  /// PSU_3(2) is skipped.
  std::vector<GroupSpec> specs() const;
  std::string describe() const;
};

struct SweepSummary {
  std::size_t cells = 0, eliminated = 0, survives = 0, needsSearch = 0;
};

struct SweepResult {
  std::vector<SweepGrid> grids;
  std::vector<EliminationReport> reports;  // grid order, then enumerate_cases order
  SweepSummary summary;
};

/// Runs every cell of every grid with `workers` threads; report order does
/// not depend on the worker count.
SweepResult sweep(const std::vector<SweepGrid>& grids, const EliminatorOptions& opt = {}, unsigned workers = 1);

SweepSummary summarize(const std::vector<EliminationReport>& reports);

struct SurvivorCheck {
  bool pass = true;
  std::vector<std::string> survivors;      // cell keys not eliminated
  std::vector<std::string> discrepancies;  // unexpected survivors, wrong states
  std::vector<std::string> notes;          // permitted cells the arithmetic eliminated anyway
};

/// Compares the surviving cells with the classification's list: linear point
/// stabilizers, linear 2-space stabilizers with n odd (non-symmetric only),
/// the extension-field case at q = 2 (must stay open), the A7 case in
/// PSL_4(2) (open, or closed by an empty search), and unitary totally
/// singular points with n = 3. The list is a necessary condition, so a
/// permitted cell that the arithmetic eliminates is a note, not a failure.
SurvivorCheck survivors_check(const std::vector<EliminationReport>& reports);

/// "linear n=3 q=2 C3(m=1,t=3)".
std::string cell_key(const EliminationReport& r);

}  // namespace ftd
