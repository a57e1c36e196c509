#include "ftd/field.hpp"
#include "ftd/kernels.hpp"
#include "ftd/permgroup.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace ftd;

namespace {

std::vector<std::uint16_t> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint16_t> p(n + 16);
  std::iota(p.begin(), p.begin() + static_cast<long>(n), 0);
  std::shuffle(p.begin(), p.begin() + static_cast<long>(n), rng);
  return p;
}

}  // namespace

TEST(Kernels, VariantsAgree) {
  const kernels::Table* fast = kernels::avx2_table();
  if (!fast) GTEST_SKIP() << "AVX2 not available";
  const kernels::Table& ref = kernels::scalar_table();
  std::mt19937 rng(11);
  for (std::size_t n : {1u, 7u, 15u, 16u, 17u, 63u, 64u, 65u, 200u, 1000u}) {
    const auto a = random_perm(n, rng), b = random_perm(n, rng);
    std::vector<std::uint16_t> o1(n + 16), o2(n + 16);
    ref.compose(a.data(), b.data(), o1.data(), n);
    fast->compose(a.data(), b.data(), o2.data(), n);
    ASSERT_TRUE(std::equal(o1.begin(), o1.begin() + static_cast<long>(n), o2.begin())) << n;

    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> in(words), x(words), y(words);
    for (auto& w : in) w = (static_cast<std::uint64_t>(rng()) << 32) | rng();
    if (n % 64) in.back() &= (1ULL << (n % 64)) - 1;
    ref.subset_image(in.data(), a.data(), x.data(), n);
    fast->subset_image(in.data(), a.data(), y.data(), n);
    ASSERT_EQ(x, y) << n;
    ASSERT_EQ(ref.and_popcount(in.data(), x.data(), words), fast->and_popcount(in.data(), x.data(), words));
  }
}

TEST(Kernels, ScalarComposeIsRightAction) {
  const Perm a = Perm::from_images({1, 2, 0}), b = Perm::from_images({0, 2, 1});
  // x^(ab) = (x^a)^b
  const Perm ab = a * b;
  for (Point x = 0; x < 3; ++x) EXPECT_EQ(ab[x], b[a[x]]);
}

TEST(Kernels, OverrideSwitchesTable) {
  kernels::set_override(kernels::Isa::Scalar);
  EXPECT_EQ(kernels::active().isa, kernels::Isa::Scalar);
  kernels::set_override(std::nullopt);
  EXPECT_TRUE(kernels::active().isa == kernels::Isa::Scalar || kernels::avx2_table() != nullptr);
}

TEST(Kernels, GroupOrdersUnderBothTables) {
  // Schreier-Sims through the scalar table and the automatic one.
  kernels::set_override(kernels::Isa::Scalar);
  const Perm c = Perm::from_cycles(10, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}), t = Perm::from_cycles(10, {{0, 1}});
  const Int s = PermGroup(10, {c, t}).order();
  kernels::set_override(std::nullopt);
  EXPECT_EQ(s, PermGroup(10, {c, t}).order());
  EXPECT_EQ(s, 3628800);
}

TEST(Field, Axioms) {
  for (auto [p, f] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {2, 5}, {7, 2}}) {
    const Field F(p, f);
    const unsigned q = F.q();
    for (Field::Elt a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
      EXPECT_EQ(F.frobenius(a, f), a);
      for (Field::Elt b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        const Field::Elt c = (a * 7 + b * 3 + 1) % q;
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
    // The primitive element has order q - 1.
    for (unsigned e = 1; e < q - 1; ++e) EXPECT_NE(F.exp(e), 1u);
    EXPECT_EQ(F.pow(F.primitive(), q - 1), 1u);
  }
  EXPECT_THROW(Field(4, 1), FieldError);
}
