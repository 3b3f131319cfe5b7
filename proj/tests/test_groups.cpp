#include <gtest/gtest.h>

#include <random>

#include "certkit/permutation.hpp"
#include "certkit/uq_group.hpp"

using namespace certkit;

namespace {

// Order by repeated composition, independent of the cycle-type lcm.
std::uint64_t order_by_powers(const Permutation& p) {
  Permutation acc = p;
  std::uint64_t k = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, p);
    ++k;
  }
  return k;
}

UqElement uq(std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t q) { return {x, y, z, q}; }

}  // namespace

TEST(Permutation, Basics) {
  const auto c3 = Permutation::from_cycles({3}, 3);
  EXPECT_EQ(c3.order(), BigInt(3));
  EXPECT_TRUE(compose(c3, c3.inverse()).is_identity());
  EXPECT_EQ(compose(Permutation::identity(3), c3), c3);
  const auto p23 = Permutation::from_cycles({2, 3}, 5);
  EXPECT_EQ(p23.order(), BigInt(6));
  EXPECT_EQ(order_by_powers(p23), 6u);
  EXPECT_EQ(p23.cycle_type(), (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(p23.pow(-1), p23.inverse());
  EXPECT_TRUE(p23.pow(6).is_identity());
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
  EXPECT_THROW(compose(c3, p23), std::invalid_argument);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation a({1, 0, 2});  // (0 1)
  const Permutation b({0, 2, 1});  // (1 2)
  const auto ab = compose(a, b);
  for (std::uint32_t v = 0; v < 3; ++v) EXPECT_EQ(ab(v), a(b(v)));
  EXPECT_NE(ab, compose(b, a));
}

TEST(Permutation, BlockDiagonal) {
  const auto d = block_diagonal({Permutation::from_cycles({2}, 2), Permutation::from_cycles({3}, 3)});
  EXPECT_EQ(d.degree(), 5u);
  EXPECT_EQ(d.order(), BigInt(6));
  EXPECT_EQ(d(2), 3u);
}

TEST(Landau, SmallCases) {
  const auto one = landau_permutation(1);
  EXPECT_EQ(one.degree, 2u);
  EXPECT_EQ(one.order, BigInt(2));
  const auto five = landau_permutation(5);
  EXPECT_EQ(five.degree, 5u);
  EXPECT_EQ(five.order, BigInt(6));
  const auto hundred = landau_permutation(100);
  EXPECT_GT(hundred.order, 100);
  EXPECT_EQ(hundred.perm.order(), hundred.order);
  EXPECT_LE(static_cast<double>(hundred.degree), landau_degree_bound(100));
}

TEST(Landau, BothRecipesReachTheOrder) {
  for (int n : {1, 2, 7, 30, 64, 500, 1000}) {
    for (auto recipe : {LandauRecipe::MinimalDegree, LandauRecipe::PrimesBelowSqrt}) {
      const auto res = landau_permutation(n, recipe);
      EXPECT_GT(res.order, n);
      EXPECT_EQ(res.perm.degree(), res.degree);
      EXPECT_EQ(res.perm.order(), res.order);
    }
    EXPECT_LE(landau_permutation(n).degree, landau_permutation(n, LandauRecipe::PrimesBelowSqrt).degree);
  }
}

TEST(Uq, DefiningProducts) {
  EXPECT_EQ(uq_mul(uq(0, 1, 1, 5), uq(1, 0, 1, 5)), uq(0, 2, 0, 5));
  EXPECT_EQ(uq_mul(uq(1, 0, 1, 5), uq(1, 0, 1, 5)), uq(1, 1, 0, 5));
  EXPECT_EQ(uq_mul(gamma(1, 7), gamma(-1, 7)), uq(0, 2, 0, 7));
  EXPECT_EQ(gamma(0, 3), uq_identity(3));
  EXPECT_THROW(uq_mul(uq(0, 0, 0, 3), uq(0, 0, 0, 4)), std::invalid_argument);
  EXPECT_THROW(gamma(2, 3), std::invalid_argument);
}

TEST(Uq, GroupAxioms) {
  std::mt19937_64 rng(9);
  const std::uint64_t q = 6;
  auto rnd = [&] { return uq(rng() % q, rng() % q, rng() % 2, q); };
  for (int rep = 0; rep < 500; ++rep) {
    const auto a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(uq_mul(uq_mul(a, b), c), uq_mul(a, uq_mul(b, c)));
    EXPECT_EQ(uq_mul(uq_identity(q), a), a);
    EXPECT_EQ(uq_mul(a, uq_identity(q)), a);
    // |U_q| = 2q^2, so a^(2q^2) is neutral.
    UqElement p = uq_identity(q);
    for (std::uint64_t i = 0; i < 2 * q * q; ++i) p = uq_mul(p, a);
    EXPECT_EQ(p, uq_identity(q));
  }
}

TEST(Uq, RunCheckExamples) {
  const auto a = run_check_uq({1, -1, 1, -1}, 5);
  EXPECT_EQ(a.product, uq(0, 4, 0, 5));
  EXPECT_TRUE(a.is_run_form);
  EXPECT_EQ(a.n_prime, 4u);
  const auto b = run_check_uq({-1, 1}, 3);
  EXPECT_NE(b.product.x, 0u);
  EXPECT_FALSE(b.is_run_form);
  const auto e = run_check_uq({}, 2);
  EXPECT_TRUE(e.is_run_form);
  EXPECT_EQ(e.n_prime, 0u);
  EXPECT_THROW(run_check_uq({1, -1}, 2), std::invalid_argument);
}

TEST(Chi, DefiningValues) {
  const ChiEmbedding ctx(Permutation::from_cycles({5}, 5));
  EXPECT_EQ(ctx.q(), 5u);
  EXPECT_TRUE(ctx.chi(uq_identity(5)).is_identity());
  EXPECT_EQ(ctx.chi(uq(0, 1, 0, 5)), ctx.pi0());
  EXPECT_EQ(ctx.chi(uq(1, 0, 0, 5)), ctx.pi1());
  EXPECT_EQ(ctx.chi(uq(0, 0, 1, 5)), ctx.piz());
  EXPECT_EQ(ctx.gamma_hat(1), compose(ctx.pi0(), ctx.piz()));
  EXPECT_TRUE(ctx.gamma_hat(0).is_identity());
  EXPECT_EQ(compose(ctx.gamma_hat(1), ctx.gamma_hat(-1)), ctx.power_of_distinguished(2));  // one factor of pi per nonzero entry
  EXPECT_EQ(ctx.log_distinguished(ctx.power_of_distinguished(3), 4), 3u);
  EXPECT_FALSE(ctx.log_distinguished(ctx.piz(), 4));
}

TEST(Chi, HomomorphismSampled) {
  const ChiEmbedding ctx(Permutation::from_cycles({5}, 5));
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = uq(rng() % 5, rng() % 5, rng() % 2, 5), b = uq(rng() % 5, rng() % 5, rng() % 2, 5);
    EXPECT_EQ(ctx.chi(uq_mul(a, b)), compose(ctx.chi(a), ctx.chi(b)));
  }
}

TEST(Chi, ContextFromLandau) {
  const auto ctx = chi_context(6);
  EXPECT_GT(ctx.q(), 6u);
  EXPECT_EQ(ctx.degree(), 2 * ctx.r());
}
