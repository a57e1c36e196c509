#include "support.hpp"

#include "ftd/builtin.hpp"

#include <gtest/gtest.h>

using namespace ftd;

namespace {

std::vector<CandidateDesign> flag_transitive(const PermGroup& g, unsigned k) {
  std::vector<CandidateDesign> out;
  for (const auto& d : hypothesis_filter(korbit_designs(g, k).designs))
    if (d.flagTransitive) out.push_back(d);
  return out;
}

std::vector<PointSubset> fano_lines() {
  const std::vector<std::vector<Point>> lines = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                                 {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  std::vector<PointSubset> out;
  for (const auto& l : lines) out.push_back(PointSubset::from_points(7, l));
  return out;
}

}  // namespace

TEST(DesignSearch, ProjectiveLineDesigns) {
  const auto pgl = flag_transitive(builtin_action("pgl2_7"), 4);
  ASSERT_EQ(pgl.size(), 2u);
  const auto psl = flag_transitive(builtin_action("psl2_7"), 4);
  ASSERT_EQ(psl.size(), 1u);
  EXPECT_EQ(psl[0].params.b, 42);
  for (const auto& d : pgl) EXPECT_TRUE(verify(d.blocks, builtin_action("pgl2_7"), d.params).ok());
}

TEST(DesignSearch, PairCoverage) {
  EXPECT_EQ(constant_pair_coverage(fano_lines(), 7), Int(1));
  auto broken = fano_lines();
  broken.pop_back();
  EXPECT_EQ(constant_pair_coverage(broken, 7), std::nullopt);
  const auto t = pair_counts(fano_lines(), 7);
  EXPECT_EQ(t[0][1], 1u);
}

TEST(DesignSearch, FanoPlaneIsFlagTransitive) {
  // The lines {0,1,3}+i are the orbit of one line under x -> x+1, and
  // PSL(3,2) in the builtin labelling need not preserve them, so only the
  // cyclic group is tested here.
  const PermGroup c7(7, {Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}})});
  EXPECT_FALSE(is_flag_transitive(c7, fano_lines()));  // |C7| = 7 < 21 flags
  const auto psl = builtin_action("psl3_2");
  for (const auto& d : korbit_designs(psl, 3).designs)
    if (d.params.b == 7) EXPECT_TRUE(d.flagTransitive);
}

TEST(DesignSearch, VerifyRejectsDamage) {
  const PermGroup g = builtin_action("pgl2_7");
  const auto d = flag_transitive(g, 4).front();
  auto blocks = d.blocks;
  blocks.pop_back();
  EXPECT_FALSE(verify(blocks, g, d.params).ok());
  EXPECT_FALSE(verify({}, g).ok());
  DesignParams wrong = d.params;
  wrong.lambda += 1;
  EXPECT_FALSE(verify(d.blocks, g, wrong).ok());
  // Right blocks, group with no flag-transitive action on them.
  const PermGroup c8(8, {Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}})});
  EXPECT_FALSE(verify(d.blocks, c8, d.params).ok());
}

TEST(DesignSearch, KOrbitArguments) {
  const PermGroup g = builtin_action("psl2_7");
  EXPECT_THROW(korbit_designs(g, 2), std::invalid_argument);
  EXPECT_THROW(korbit_designs(g, 7), std::invalid_argument);
  KOrbitOptions o;
  o.maxSubsets = 10;
  EXPECT_THROW(korbit_designs(g, 4, o), BudgetExceeded);
}

TEST(DesignSearch, StabilizerSearchAgreesWithKOrbit) {
  EXPECT_EQ(ftd::testing::korbit_vs_stabilizer(8), ftd::testing::Failures{});
}

TEST(DesignSearch, StrategiesAtDegree144) {
  const PermGroup base = builtin_action("psl3_3");
  const IndexedGroup ig(base);
  const PermGroup g = coset_action(ig, subgroups_of_order(ig, Int(39)).at(0));
  const SearchReport sr = stabilizer_search(g, {Int(144), Int(144), Int(78), Int(78), Int(42)});
  EXPECT_EQ(sr.strategy, "flag-count");
  EXPECT_TRUE(sr.designs.empty());
  EXPECT_FALSE(sr.exhaustiveness.empty());
}

TEST(DesignSearch, DesignFileRoundTrip) {
  const auto d = flag_transitive(builtin_action("pgl2_7"), 4).front();
  const DesignFile f = parse_design(format_design(d));
  EXPECT_EQ(f.version, 1);
  EXPECT_EQ(f.params, d.params);
  EXPECT_EQ(f.blocks, d.blocks);
  EXPECT_EQ(f.group, d.actionLabel);
}

TEST(DesignSearch, DesignFileErrors) {
  EXPECT_THROW(parse_design(""), std::invalid_argument);
  EXPECT_THROW(parse_design("version 2\n"), std::invalid_argument);
  EXPECT_THROW(parse_design("version 1\ngroup x\nv 8\nb 1\nr 1\nk 4\nlambda 1\nblock 0 1 2 9\n"), std::invalid_argument);
  EXPECT_THROW(parse_design("version 1\nbogus line\n"), std::invalid_argument);
}
