#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ftd;

namespace {

DesignParams P(long v, long b, long r, long k, long l) { return {Int(v), Int(b), Int(r), Int(k), Int(l)}; }

std::set<std::string> keys(const std::vector<DesignParams>& ps) {
  std::set<std::string> s;
  for (const auto& p : ps) s.insert(p.to_string());
  return s;
}

// Brute force over r | rDivisor and k, with every clause evaluated directly.
std::set<std::string> brute_tuples(long v, long rDivisor) {
  std::set<std::string> out;
  for (long r = 1; r <= rDivisor; ++r) {
    if (rDivisor % r) continue;
    for (long k = 3; k < v - 1; ++k) {
      if ((v * r) % k || (r * (k - 1)) % (v - 1)) continue;
      const long b = v * r / k, lambda = r * (k - 1) / (v - 1);
      const Int g = gcd(Int(r), Int(lambda));
      const Int rs = Int(r) / g;
      if (g < 2 || Int(lambda) < g * g || Int(v) >= rs * rs) continue;
      if (b < v || Int(b) >= binomial(Int(v), static_cast<unsigned long>(k))) continue;
      out.insert(P(v, b, r, k, lambda).to_string());
    }
  }
  return out;
}

}  // namespace

TEST(Sieve, ExtensionFieldCaseAtQ2) {
  const auto r = admissible_tuples(Int(8), Int(42));
  EXPECT_EQ(keys(r.tuples), keys({P(8, 28, 14, 4, 6), P(8, 42, 21, 4, 9)}));
  EXPECT_FALSE(r.truncated);
  bool sawConflict = false;
  for (const auto& x : r.rejections) {
    if (x.k == 5) EXPECT_EQ(x.reason, Reason::DivisorConflict);
    if (x.k == 6 && x.g < 3) EXPECT_EQ(x.reason, Reason::BNonintegral);
    sawConflict = sawConflict || x.reason == Reason::DivisorConflict;
  }
  EXPECT_TRUE(sawConflict);
}

TEST(Sieve, ExtensionFieldCaseAtQ3) {
  EXPECT_EQ(keys(admissible_tuples(Int(144), Int(78)).tuples), keys({P(144, 144, 78, 78, 42)}));
}

TEST(Sieve, MatchesBruteForce) {
  for (long v = 5; v <= 40; ++v)
    for (long rd : {12L, 42L, 60L, 120L, 168L, 336L, 720L, 2520L})
      EXPECT_EQ(keys(admissible_tuples(Int(v), Int(rd)).tuples), brute_tuples(v, rd)) << v << " " << rd;
}

TEST(Sieve, TuplesPassBasicChecks) {
  for (long v : {8L, 28L, 36L, 144L})
    for (const auto& t : admissible_tuples(Int(v), Int(2 * 3 * 5 * 7 * 8 * 9 * 13)).tuples)
      EXPECT_TRUE(all_pass(check_basic(t))) << t.to_string();
}

TEST(Sieve, BasicChecksNameTheClause) {
  const auto checks = check_basic(P(8, 14, 7, 4, 3));  // (r, lambda) = 1
  bool hyp = false;
  for (const auto& c : checks)
    if (c.reason == Reason::Hypothesis) hyp = !c.pass;
  EXPECT_TRUE(hyp);
  EXPECT_THROW(params_from_vbk(Int(8), Int(15), Int(4)), MathError);
  EXPECT_EQ(params_from_vbk(Int(8), Int(42), Int(4)), P(8, 42, 21, 4, 9));
}

TEST(Sieve, BudgetTruncates) {
  AdmissibleOptions o;
  o.workBudget = 3;
  EXPECT_TRUE(admissible_tuples(Int(144), Int(78), o).truncated);
}

TEST(Sieve, SubdegreeFilter) {
  const auto r = subdegree_filter(Int(28), Int(12));
  EXPECT_EQ(r.R, 3);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(subdegree_filter(Int(8), Int(7)).pass);
}

TEST(Sieve, PPrimeBound) {
  // PSL_6(2), GL_2(2) wr S_3: |H0| = 1296.
  const auto b = pprime_order_check(GroupSpec::make(Family::Linear, 6, 2), Int(1296));
  EXPECT_EQ(b.lhs, Int("20158709760"));
  EXPECT_FALSE(b.pass);
}

TEST(Sieve, StabilizerDivisor) {
  EXPECT_EQ(stabilizer_divisor(Int(2), Int(5040), Int(24)), 420);
  EXPECT_THROW(stabilizer_divisor(Int(2), Int(10), Int(7)), std::logic_error);
}

TEST(Sieve, GcdChainsHoldOnGrid) { EXPECT_EQ(ftd::testing::gcd_chains(12, 32), ftd::testing::Failures{}); }
