#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ftd;

namespace {

bool trial_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(ExactMath, PrimalityMatchesTrialDivision) {
  for (unsigned long n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(Int(n)), trial_prime(n)) << n;
}

TEST(ExactMath, FactorizationRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Int n = Int(static_cast<unsigned long>(rng() % 1'000'000'000'000ULL)) + 1;
    const Factorization f = factorize(n);
    EXPECT_EQ(f.value(), n);
    for (const auto& pf : f.factors()) EXPECT_TRUE(is_prime(pf.prime));
  }
  // A product of two primes beyond the trial-division range.
  const Int a("1000000007"), b("998244353");
  EXPECT_EQ(factorize(a * b).factors(), (std::vector<PrimeFactor>{{b, 1}, {a, 1}}));
  // Perfect powers.
  EXPECT_EQ(factorize(ipow(a, 5)).factors(), (std::vector<PrimeFactor>{{a, 5}}));
}

TEST(ExactMath, HintedFactorizationAgrees) {
  const Int n = order_GL(6, Int(27)) * ipow(Int(26), 3);
  const auto hints = cyclotomic_hints(Int(3), 40);
  EXPECT_EQ(factorize_with_hints(n, hints), factorize(n));
  EXPECT_EQ(factorize_with_hints(Int(360), {}), factorize(Int(360)));
}

TEST(ExactMath, DivisorsAreComplete) {
  for (unsigned long n = 1; n <= 500; ++n) {
    std::vector<Int> brute;
    for (unsigned long d = 1; d <= n; ++d)
      if (n % d == 0) brute.push_back(Int(d));
    EXPECT_EQ(factorize(Int(n)).divisors(), brute) << n;
  }
}

TEST(ExactMath, PrimePowers) {
  EXPECT_TRUE(PrimePower::is_prime_power(Int(32)));
  EXPECT_FALSE(PrimePower::is_prime_power(Int(12)));
  const PrimePower q = PrimePower::from_value(Int(27));
  EXPECT_EQ(q.p(), 3);
  EXPECT_EQ(q.f(), 3u);
  EXPECT_THROW(PrimePower::from_value(Int(6)), MathError);
  EXPECT_EQ(p_part(Int(96), Int(2)), 32);
  EXPECT_EQ(p_prime_part(Int(96), Int(2)), 3);
  EXPECT_EQ(valuation(Int(96), Int(2)), 5u);
}

TEST(ExactMath, GaussianBinomialCountsSubspaces) {
  // Count i-subspaces of GF(2)^n through their reduced bases: the number of
  // sets of i independent vectors divided by |GL_i(2)|.
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned i = 0; i <= n; ++i) {
      Int ordered = 1;
      for (unsigned j = 0; j < i; ++j) ordered *= ipow(Int(2), n) - ipow(Int(2), j);
      const Int gl = i ? order_GL(i, Int(2)) : Int(1);
      EXPECT_EQ(gaussian_binomial(Int(2), n, i), ordered / gl) << n << " " << i;
    }
}

TEST(ExactMath, QProducts) {
  const QTerm terms[] = {{2, 1}, {3, -1}};
  EXPECT_EQ(q_product(Int(2), terms), Int(3 * 9));
  EXPECT_EQ(q_range_product(Int(2), 1, 3, 1), Int(1 * 3 * 7));
  EXPECT_EQ(q_range_product(Int(2), 1, 3, -1), Int(3 * 3 * 9));
}

TEST(ExactMath, ProductInequalitiesHoldOnGrid) {
  EXPECT_EQ(ftd::testing::product_inequalities(64, 24), ftd::testing::Failures{});
}
