// Acceptance runner: one PASS/FAIL line per criterion on stdout, details on
// stderr. Exit status 1 when any criterion fails.

#include "support.hpp"

#include "ftd/builtin.hpp"
#include "ftd/classical.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <thread>

using namespace ftd;
using ftd::testing::Failures;

namespace {

DesignParams P(long v, long b, long r, long k, long l) { return {Int(v), Int(b), Int(r), Int(k), Int(l)}; }

std::set<std::string> keys(const std::vector<DesignParams>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(p.to_string());
  return s;
}

std::set<std::string> keys(const std::vector<CandidateDesign>& ds) {
  std::set<std::string> s;
  for (const auto& d : ds) s.insert(d.params.to_string());
  return s;
}

PermGroup coset(const std::string& label, unsigned long order) {
  const PermGroup g = builtin_action(label);
  const IndexedGroup ig(g);
  const auto cls = subgroups_of_order(ig, Int(order));
  if (cls.size() != 1) throw std::logic_error(label + ": subgroup classes of order " + std::to_string(order) + " = " +
                                              std::to_string(cls.size()));
  return coset_action(ig, cls[0], label + "/" + std::to_string(order));
}

Failures orders() {
  Failures f;
  const struct {
    const char* label;
    Int formula;
  } cases[] = {
      {"psl3_2", order_X(GroupSpec::make(Family::Linear, 3, 2))},
      {"psl3_3", order_X(GroupSpec::make(Family::Linear, 3, 3))},
      {"psl4_2", order_X(GroupSpec::make(Family::Linear, 4, 2))},
      {"psu3_3", order_X(GroupSpec::make(Family::Unitary, 3, 3))},
      {"pgl2_7", order_GL(2, Int(7)) / 6},
  };
  const Int want[] = {168, 5616, 20160, 6048, 336};
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t bfs = builtin_action(cases[i].label).elements().size();
    if (cases[i].formula != want[i] || Int(static_cast<unsigned long>(bfs)) != want[i])
      f.push_back(std::string(cases[i].label) + ": formula " + cases[i].formula.get_str() + ", BFS " +
                  std::to_string(bfs) + ", expected " + want[i].get_str());
  }
  return f;
}

Failures c2_trace() {
  Failures f;
  const auto r = run_case(GroupSpec::make(Family::Linear, 6, 2), SubgroupCase::GLwr(2, 3));
  if (r.final.kind != FinalKind::Eliminated) return {"not eliminated"};
  const Step& s = r.steps.at(r.final.stepIndex);
  auto w = [&](const std::string& name) {
    for (const auto& x : s.witnesses)
      if (x.name == name) return x.value;
    return std::string("?");
  };
  if (s.name != "rstar-divides-out-h0") f.push_back("eliminated at " + s.name);
  if (w("|Out||H0|") != "2592") f.push_back("divisor " + w("|Out||H0|"));
  if (w("v") != "15554560") f.push_back("v " + w("v"));
  return f;
}

Failures sieve_arith() {
  Failures f;
  const auto a = admissible_tuples(Int(8), Int(42));
  if (keys(a.tuples) != keys({P(8, 28, 14, 4, 6), P(8, 42, 21, 4, 9)})) f.push_back("v=8 tuples differ");
  const auto b = admissible_tuples(Int(144), Int(78));
  if (keys(b.tuples) != keys({P(144, 144, 78, 78, 42)})) f.push_back("v=144 tuples differ");
  bool k5 = false, k6 = false;
  for (const auto& r : a.rejections) {
    if (r.k == 5) {
      k5 = true;
      if (r.reason != Reason::DivisorConflict) f.push_back("k=5 rejected by " + reason_code(r.reason));
    }
    if (r.k == 6 && r.g < 3) {
      k6 = true;
      if (r.reason != Reason::BNonintegral) f.push_back("k=6 rejected by " + reason_code(r.reason));
    }
  }
  if (!k5 || !k6) f.push_back("k=5 or k=6 rejection missing");
  return f;
}

Failures reconstruction() {
  Failures f;
  for (const auto& [label, want] :
       std::vector<std::pair<std::string, std::set<std::string>>>{
           {"pgl2_7", keys({P(8, 28, 14, 4, 6), P(8, 42, 21, 4, 9)})}, {"psl2_7", keys({P(8, 42, 21, 4, 9)})}}) {
    const PermGroup g = builtin_action(label);
    std::vector<CandidateDesign> ft;
    for (const auto& d : hypothesis_filter(korbit_designs(g, 4).designs))
      if (d.flagTransitive) ft.push_back(d);
    if (keys(ft) != want || ft.size() != want.size()) f.push_back(label + ": designs differ");
    for (const auto& d : ft)
      if (!verify(d.blocks, g, d.params).ok()) f.push_back(label + ": " + d.params.to_string() + " fails verify");
  }
  return f;
}

Failures a8_line() {
  Failures f;
  const PermGroup g = builtin_action("a8");
  const auto kr = korbit_designs(g, 4);
  if (kr.designs.size() != 1 || kr.designs[0].params.b != 70) f.push_back("expected only the complete design");
  if (!hypothesis_filter(kr.designs).empty()) f.push_back("a design passes the hypothesis filter");
  for (const auto& d : kr.designs)
    if (verify(d.blocks, g).ok()) f.push_back(d.params.to_string() + " passes verification");
  return f;
}

Failures search_empty(const std::vector<std::pair<std::string, unsigned long>>& groups,
                      const std::vector<DesignParams>& params) {
  Failures f;
  for (const auto& [label, order] : groups) {
    const PermGroup g = coset(label, order);
    for (const auto& p : params) {
      const SearchReport sr = stabilizer_search(g, p);
      std::cerr << "  " << g.label() << " " << p.to_string() << ": " << sr.strategy << ", " << sr.designs.size()
                << " design(s); " << sr.exhaustiveness << "\n";
      if (!sr.designs.empty()) f.push_back(g.label() + " " + p.to_string() + ": " + std::to_string(sr.designs.size()) +
                                           " flag-transitive design(s) found");
      if (sr.exhaustiveness.empty()) f.push_back(g.label() + ": no exhaustiveness certificate");
    }
  }
  return f;
}

Failures q3_case() {
  Failures f = search_empty({{"psl3_3", 39}, {"psl3_3_2", 78}}, {P(144, 144, 78, 78, 42)});
  const PermGroup g = coset("psl3_3", 39);
  const SearchReport sr = stabilizer_search(g, P(144, 144, 78, 78, 42));
  if (sr.strategy != "flag-count") f.push_back("PSL_3(3) strategy " + sr.strategy);
  if (Int(144 * 78) != 2 * g.order()) f.push_back("vr != 2|X|");
  const SearchReport s2 = stabilizer_search(coset("psl3_3_2", 78), P(144, 144, 78, 78, 42));
  if (s2.strategy != "block-stabilizer") f.push_back("PSL_3(3):2 strategy " + s2.strategy);
  return f;
}

Failures a8_subdegrees() {
  Failures f;
  const auto sub = k_subset_action(alternating_action(8), 2).suborbits(0);
  if (sub != std::vector<std::size_t>{1, 12, 15}) f.push_back("suborbits differ");
  const auto a = subdegree_filter(Int(28), Int(12)), b = subdegree_filter(Int(28), Int(15));
  if (gcd(a.R, b.R) != 3 || a.pass || b.pass) f.push_back("subdegree filter does not eliminate v=28");
  return f;
}

Failures full_sweep() {
  const auto res = sweep({{Family::Linear, 3, 12, 2, 32, {}}, {Family::Unitary, 3, 8, 2, 8, {}}}, {},
                         std::max(1u, std::thread::hardware_concurrency()));
  const auto chk = survivors_check(res.reports);
  std::cerr << "  cells " << res.summary.cells << ", eliminated " << res.summary.eliminated << ", survives "
            << res.summary.survives << ", needs-search " << res.summary.needsSearch << "\n";
  return chk.discrepancies;
}

Failures properties() {
  Failures f;
  for (auto part : {ftd::testing::product_inequalities(64, 24), ftd::testing::gcd_chains(12, 32),
                    ftd::testing::orbit_invariants(), ftd::testing::korbit_vs_stabilizer(12),
                    ftd::testing::determinism({{Family::Linear, 3, 5, 2, 9, {}}, {Family::Unitary, 3, 4, 2, 4, {}}})})
    f.insert(f.end(), part.begin(), part.end());
  return f;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
      {"order cross-checks", orders},
      {"C2 trace for PSL_6(2)", c2_trace},
      {"sieve arithmetic at v=8 and v=144", sieve_arith},
      {"PGL(2,7) and PSL(2,7) designs on 8 points", reconstruction},
      {"A8 on 8 points has no admissible design", a8_line},
      {"no design on the degree-36 actions of PSU_3(3) and PSU_3(3):2",
       [] {
         return search_empty({{"psu3_3", 168}, {"psu3_3_2", 336}},
                             {P(36, 36, 21, 21, 12), P(36, 48, 28, 21, 16)});
       }},
      {"no design on 144 points for PSL_3(3) and PSL_3(3):2", q3_case},
      {"A8 subdegrees on pairs", a8_subdegrees},
      {"full sweep survivor set", full_sweep},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = criteria[i].second();
    } catch (const std::exception& e) {
      f.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %s  %s (%.2f s)\n", i + 1, f.empty() ? "PASS" : "FAIL", criteria[i].first.c_str(),
                secs);
    std::fflush(stdout);
    for (const auto& x : f) std::cerr << "  " << x << "\n";
    failed += !f.empty();
  }
  return failed ? 1 : 0;
}
