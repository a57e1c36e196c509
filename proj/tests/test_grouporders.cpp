#include "ftd/builtin.hpp"
#include "ftd/grouporders.hpp"

#include <gtest/gtest.h>

using namespace ftd;

TEST(GroupOrders, SmallSocles) {
  EXPECT_EQ(order_X(GroupSpec::make(Family::Linear, 3, 2)), 168);
  EXPECT_EQ(order_X(GroupSpec::make(Family::Linear, 3, 3)), 5616);
  EXPECT_EQ(order_X(GroupSpec::make(Family::Linear, 4, 2)), 20160);
  EXPECT_EQ(order_X(GroupSpec::make(Family::Unitary, 3, 3)), 6048);
  EXPECT_EQ(order_out(GroupSpec::make(Family::Linear, 3, 4)), 12);  // 2 d f = 2*3*2
}

TEST(GroupOrders, FormulaOrdersMatchEnumeration) {
  for (const auto& [label, spec] : std::vector<std::pair<std::string, GroupSpec>>{
           {"psl3_2", GroupSpec::make(Family::Linear, 3, 2)},
           {"psl3_3", GroupSpec::make(Family::Linear, 3, 3)},
           {"psl4_2", GroupSpec::make(Family::Linear, 4, 2)},
           {"psu3_3", GroupSpec::make(Family::Unitary, 3, 3)}})
    EXPECT_EQ(Int(static_cast<unsigned long>(builtin_action(label).elements().size())), order_X(spec)) << label;
}

TEST(GroupOrders, RejectsBadSpecs) {
  EXPECT_THROW(GroupSpec::make(Family::Linear, 2, 7), MathError);
  EXPECT_THROW(GroupSpec::make(Family::Unitary, 3, 2), MathError);
  EXPECT_THROW(GroupSpec::make(Family::Linear, 3, 6), MathError);
}

TEST(GroupOrders, EveryCaseOnTheGridIsConsistent) {
  // case_orders re-checks |H0| | |X|; v must be a positive integer > 1.
  for (Family fam : {Family::Linear, Family::Unitary})
    for (int n = 3; n <= (fam == Family::Linear ? 12 : 8); ++n)
      for (unsigned long q = 2; q <= (fam == Family::Linear ? 32u : 8u); ++q) {
        if (!PrimePower::is_prime_power(Int(q)) || (fam == Family::Unitary && n == 3 && q == 2)) continue;
        const GroupSpec spec = GroupSpec::make(fam, n, q);
        for (const auto& sc : enumerate_cases(spec)) {
          const CaseOrders o = case_orders(spec, sc);
          ASSERT_EQ(o.orderX % o.orderH0, 0) << spec.name() << " " << sc.label();
          ASSERT_GT(o.v, 1) << spec.name() << " " << sc.label();
          ASSERT_FALSE(order_citation(spec, sc).empty());
        }
      }
}

TEST(GroupOrders, KnownDegrees) {
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 6, 2), SubgroupCase::GLwr(2, 3)).v, 15554560);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 3, 2), SubgroupCase::ExtField(1, 3)).v, 8);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 3, 3), SubgroupCase::ExtField(1, 3)).v, 144);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 4, 2), SubgroupCase::Symplectic()).v, 28);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 4, 2), SubgroupCase::SLine(4)).v, 8);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Unitary, 3, 3), SubgroupCase::SLine(1)).v, 36);
  EXPECT_EQ(case_orders(GroupSpec::make(Family::Linear, 5, 3), SubgroupCase::Pi(2)).v,
            gaussian_binomial(Int(3), 5, 2));
}

TEST(GroupOrders, IncompatibleCasesThrow) {
  const GroupSpec spec = GroupSpec::make(Family::Linear, 5, 2);
  EXPECT_THROW(validate_case(spec, SubgroupCase::GLwr(2, 2)), IncompatibleCase);
  EXPECT_THROW(validate_case(spec, SubgroupCase::Ni(1)), IncompatibleCase);
  EXPECT_THROW(validate_case(spec, SubgroupCase::Pi(3)), IncompatibleCase);
}

TEST(GroupOrders, NamedOrdersFactorAsListed) {
  for (const auto& g : named_group_orders()) EXPECT_EQ(factorize(g.order).to_string(), g.factorization) << g.name;
}
