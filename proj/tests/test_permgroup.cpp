#include "support.hpp"

#include "ftd/builtin.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

using namespace ftd;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> class_counts(const IndexedGroup& ig) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = ig.size();
  for (std::size_t m = 1; m <= n; ++m)
    if (n % m == 0) {
      const auto cls = subgroups_of_order(ig, Int(static_cast<unsigned long>(m)));
      if (!cls.empty()) out.emplace_back(m, cls.size());
    }
  return out;
}

std::size_t count_if_points(const std::vector<Vec>& pts, auto pred) {
  std::size_t c = 0;
  for (const Vec& x : pts) c += pred(x);
  return c;
}

}  // namespace

TEST(PermGroup, SchreierSimsOrders) {
  for (const auto& b : builtin_actions()) {
    const PermGroup g = builtin_action(b.label);
    EXPECT_EQ(g.order(), Int(b.order)) << b.label;
    EXPECT_EQ(g.degree(), b.degree) << b.label;
    for (const Perm& x : g.generators()) EXPECT_TRUE(g.contains(x));
  }
  const PermGroup a8 = alternating_action(8);
  EXPECT_FALSE(a8.contains(Perm::from_cycles(8, {{0, 1}})));
  EXPECT_TRUE(a8.contains(Perm::from_cycles(8, {{0, 1, 2}})));
}

TEST(PermGroup, PermutationBasics) {
  const Perm a = Perm::from_cycles(5, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(a.order(), 6u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(Perm::from_images({0, 0, 1}), PermError);
}

// Every subgroup of these groups is generated by two elements, so the brute
// count over 2-generated subgroups is complete.
TEST(PermGroup, SubgroupClassesMatchBruteForce) {
  for (const char* label : {"psl3_2", "pgl2_7"}) {
    const PermGroup g = builtin_action(label);
    const IndexedGroup ig(g);
    EXPECT_EQ(class_counts(ig), ftd::testing::brute_subgroup_classes(ig)) << label;
  }
}

TEST(PermGroup, OrbitInvariants) { EXPECT_EQ(ftd::testing::orbit_invariants(), ftd::testing::Failures{}); }

TEST(PermGroup, CosetActionDegree) {
  const PermGroup base = builtin_action("psl3_3");
  const IndexedGroup ig(base);
  const auto cls = subgroups_of_order(ig, Int(39));
  ASSERT_EQ(cls.size(), 1u);
  const PermGroup g = coset_action(ig, cls[0]);
  EXPECT_EQ(g.degree(), 144u);
  EXPECT_EQ(g.order(), 5616);
  EXPECT_TRUE(g.is_transitive());
}

TEST(PermGroup, A8OnPairs) {
  EXPECT_EQ(k_subset_action(alternating_action(8), 2).suborbits(0), (std::vector<std::size_t>{1, 12, 15}));
}

// The subdegrees used by the linear refinements, read off concrete actions.
TEST(PermGroup, AntiflagSubdegree) {
  const auto s = [](unsigned n, unsigned long q) {
    const Int want = 2 * (ipow(Int(q), 1) - 1) * (ipow(Int(q), n - 1) - 1) / (Int(q) - 1);
    const auto sub = ftd::testing::antiflag_action(n, q).suborbits(0);
    return std::count(sub.begin(), sub.end(), want.get_ui()) > 0;
  };
  EXPECT_TRUE(s(3, 2));  // 6
  EXPECT_TRUE(s(4, 2));  // 14
  EXPECT_TRUE(s(3, 3));  // 16
}

TEST(PermGroup, TwoSpaceSubdegree) {
  const auto sub = ftd::testing::subspace_action(4, 2, 2).suborbits(0);
  EXPECT_EQ(sub.size(), 3u);
  EXPECT_NE(std::find(sub.begin(), sub.end(), 18u), sub.end());  // q(q^2-1)(q^2-1)/(q-1)^2
  EXPECT_NE(std::find(sub.begin(), sub.end(), 16u), sub.end());
}

// Unitary P_1 with n = 4, q = 2: isotropic points of GF(4)^4 that are not
// perpendicular to a fixed isotropic point number q^(2n-3) = 32.
TEST(PermGroup, UnitaryPointSubdegree) {
  const Field f2(2, 2);
  const auto pts = isotropic_points(4, f2);
  EXPECT_EQ(pts.size(), 45u);  // (q^4-1)(q^3+1)/(q^2-1)
  // Form (x, y) = sum x_i y_{3-i}^q.
  const auto form = [&](const Vec& x, const Vec& y) {
    Field::Elt s = 0;
    for (unsigned i = 0; i < 4; ++i) s = f2.add(s, f2.mul(x[i], f2.frobenius(y[3 - i])));
    return s;
  };
  const Vec& x0 = pts[0];
  EXPECT_EQ(count_if_points(pts, [&](const Vec& y) { return form(x0, y) != 0; }), 32u);
  // The refinement formula at i = 1 gives the same count.
  const Int q(2);
  EXPECT_EQ(ipow(q, 2 * 4 - 4 + 1) * (ipow(q, 2) - 1) / (q * q - 1), 32);
}

TEST(PermGroup, PointSubsetImages) {
  const PermGroup g = builtin_action("psl3_2");
  const PointSubset line = PointSubset::from_points(7, {0, 1, 3});
  const auto orb = set_orbit(g, line);
  EXPECT_TRUE(orb.size() == 7 || orb.size() == 28);
  for (const auto& s : orb) EXPECT_EQ(s.count(), 3u);
}

TEST(PermGroup, ActionFilesRoundTrip) {
  const PermGroup g = builtin_action("pgl2_7");
  const PermGroup h = parse_action(format_action(g), "copy");
  EXPECT_EQ(h.degree(), g.degree());
  EXPECT_EQ(h.order(), g.order());
  EXPECT_THROW(parse_action("nonsense\n"), std::invalid_argument);
}
