#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "certkit/serialization.hpp"
#include "certkit/contract_check.hpp"
#include "certkit/errors.hpp"
#include "certkit/families.hpp"
#include "certkit/graver.hpp"
#include "certkit/numeric_reductions.hpp"
#include "certkit/registry.hpp"

using namespace certkit;

namespace {

ProblemInstance run(const Reduction& r, const ProblemInstance& in, const Witness& w = {}) { return apply(r, in, w); }

IlpInstance ilp(std::vector<std::vector<int>> cols, std::vector<std::int64_t> b, IlpVariant v) {
  return IlpInstance{std::move(cols), std::move(b), v};
}

}  // namespace

TEST(BaseW, EncodeDecode) {
  EXPECT_EQ(encode_base_w({1, 1}, 3), BigInt(4));
  EXPECT_EQ(encode_base_w({0, 0, 0}, 7), BigInt(0));
  EXPECT_THROW(encode_base_w({3}, 3), std::out_of_range);
  EXPECT_THROW(decode_base_w(9, 3, 2), std::out_of_range);
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 500; ++rep) {
    const BigInt W = rng() % 9 + 2;
    std::vector<BigInt> d(rng() % 9);
    for (auto& x : d) x = BigInt(rng() % static_cast<std::uint64_t>(W));
    EXPECT_EQ(decode_base_w(encode_base_w(d, W), W, d.size()), d);
  }
}

TEST(SizeGuard, Threshold) {
  EXPECT_FALSE(size_guard_fires(16, 1));  // 2^4
  EXPECT_TRUE(size_guard_fires(17, 1));
  EXPECT_TRUE(size_guard_fires(3, 0));    // 2^1
  EXPECT_FALSE(size_guard_fires(1000000, 10));
}

TEST(SsToKnapsack, Examples) {
  const auto r = ss_to_knapsack();
  EXPECT_TRUE(r.ppt);
  EXPECT_EQ(run(r, SubsetSumInstance{{3, 5}, 5, {}}), ProblemInstance(KnapsackInstance{{{3, 3}, {5, 5}}, 5, 5}));
  const auto empty = run(r, SubsetSumInstance{{}, 0, {}});
  EXPECT_TRUE(solve(empty).yes);
  EXPECT_FALSE(solve(run(r, SubsetSumInstance{{2}, 1, {}})).yes);
  EXPECT_THROW(run(r, SubsetSumInstance{{2}, 1, BigInt(3)}), UnsupportedKindError);
}

TEST(KnapsackToSs, Normalization) {
  const auto r = knapsack_to_ss();
  // A single item already meeting the demand within capacity is decided during normalization.
  const ProblemInstance heavy = KnapsackInstance{{{2, 3}}, 2, 3};
  EXPECT_EQ(r.witness_length(heavy), 0u);
  EXPECT_TRUE(solve(run(r, heavy)).yes);
  EXPECT_THROW(knapsack_to_ss_witness(std::get<KnapsackInstance>(heavy), 2, 3), std::logic_error);
  EXPECT_TRUE(solve(run(r, KnapsackInstance{{}, 0, 0})).yes);
  EXPECT_FALSE(solve(run(r, KnapsackInstance{{{2, 3}}, 1, 1})).yes);
}

TEST(KnapsackToSs, GuessedPair) {
  const auto r = knapsack_to_ss();
  const KnapsackInstance in{{{2, 3}, {2, 2}, {1, 1}}, 3, 4};  // W = 4*3+1 = 13
  const auto out = run(r, in, knapsack_to_ss_witness(in, 3, 4));
  EXPECT_EQ(out, ProblemInstance(SubsetSumInstance{{29, 28, 14}, 43, {}}));
  EXPECT_TRUE(solve(out).yes);
  EXPECT_FALSE(solve(run(r, in, knapsack_to_ss_witness(in, 0, 4))).yes);
  EXPECT_THROW(knapsack_to_ss_witness(in, 4, 4), std::out_of_range);
  EXPECT_THROW(knapsack_to_ss_witness(in, 3, 13), std::out_of_range);
}

TEST(SsToMonotone, Examples) {
  const auto r = ss_to_monotone();
  const SubsetSumInstance in{{3, 5}, 5, {}};
  const auto out = run(r, in, ss_to_monotone_witness(in, {1, 0, 1}));
  EXPECT_EQ(out, ProblemInstance(ilp({{1, 1, 0}, {1, 0, 1}}, {1, 0, 1}, IlpVariant::Monotone)));
  EXPECT_TRUE(solve(out).yes);
  EXPECT_FALSE(solve(run(r, in, ss_to_monotone_witness(in, {0, 0, 0}))).yes);
  const SubsetSumInstance one{{1}, 1, {}};
  EXPECT_TRUE(solve(run(r, one, ss_to_monotone_witness(one, {1}))).yes);
  // c_1 = 1 for items {3,5}: b_1 = 2 is out of range.
  EXPECT_THROW(ss_to_monotone_witness(in, {1, 2, 1}), std::out_of_range);
}

TEST(MonotoneToSs, Examples) {
  const auto r = monotone_to_ss();
  EXPECT_EQ(run(r, ilp({{1, 0}, {1, 1}}, {1, 1}, IlpVariant::Monotone)),
            ProblemInstance(SubsetSumInstance{{1, 4}, 4, {}}));
  EXPECT_FALSE(solve(run(r, ilp({{1}}, {2}, IlpVariant::Monotone))).yes);
  EXPECT_TRUE(solve(run(r, ilp({}, {0}, IlpVariant::Monotone))).yes);
}

TEST(Graver, KnownSequences) {
  EXPECT_EQ(graver_sequence(1).vectors, (std::vector<std::vector<int>>{{1}, {-1}}));
  EXPECT_EQ(graver_sequence(2).vectors, (std::vector<std::vector<int>>{{1, 0}, {-1, 1}, {1, 0}, {-1, -1}}));
  for (std::size_t k = 1; k <= 4; ++k) {
    const auto g = graver_sequence(k);
    EXPECT_EQ(g.vectors.size(), std::size_t{1} << k);
    EXPECT_FALSE(g.from_fallback);
    EXPECT_TRUE(graver_basic_properties(g.vectors, k));
    EXPECT_TRUE(graver_minimal_exhaustive(g.vectors));
  }
  EXPECT_TRUE(graver_minimal_sampled(graver_sequence(8).vectors, 2000, 3));
}

TEST(Graver, BrokenCandidateFallsBack) {
  // (1),(−1),(1),(−1) has a proper zero-sum subsequence; the search must replace it.
  const auto g = detail::validate_or_search(1, {{1}, {-1}, {1}, {-1}}, 1 << 16);
  EXPECT_TRUE(g.from_fallback);
  EXPECT_TRUE(graver_basic_properties(g.vectors, 1));
  EXPECT_TRUE(graver_minimal_exhaustive(g.vectors));
  EXPECT_FALSE(graver_minimal_exhaustive({{1}, {-1}, {1}, {-1}}));
}

TEST(MonotoneToZerosum, Examples) {
  const auto r = monotone_to_zerosum();
  const auto out = run(r, ilp({{1}}, {1}, IlpVariant::Monotone));
  EXPECT_EQ(out, ProblemInstance(ilp({{1, 0}, {-1, 1}, {0, -1}}, {0, 0}, IlpVariant::ZeroSumNontrivial)));
  EXPECT_TRUE(solve(out).yes);
  EXPECT_TRUE(solve(run(r, ilp({{1}}, {0}, IlpVariant::Monotone))).yes);
  EXPECT_TRUE(solve(run(r, ilp({{1}, {1}}, {2}, IlpVariant::Monotone))).yes);
}

TEST(ZerosumToIlp, Examples) {
  const auto r = zerosum_to_ilp();
  const IlpInstance in = ilp({{1}, {-1}}, {0}, IlpVariant::ZeroSumNontrivial);
  const auto out = run(r, in, zerosum_to_ilp_witness(in, 1));
  EXPECT_EQ(out, ProblemInstance(ilp({{-1}}, {-1}, IlpVariant::Standard)));
  EXPECT_TRUE(solve(out).yes);
  EXPECT_THROW(zerosum_to_ilp_witness(in, 3), std::out_of_range);
  const ProblemInstance single = ilp({{1}}, {0}, IlpVariant::ZeroSumNontrivial);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << r.witness_length(single)); ++i)
    EXPECT_FALSE(solve(run(r, single, Witness::from_index(i, r.witness_length(single)))).yes);
}

TEST(IlpToMonotone, Examples) {
  const auto r = ilp_to_monotone();
  const IlpInstance in = ilp({{1}, {-1}}, {0}, IlpVariant::Standard);
  const auto out = run(r, in, ilp_to_monotone_witness(in, {1}, {1}));
  EXPECT_EQ(out, ProblemInstance(ilp({{1, 0}, {0, 1}}, {1, 1}, IlpVariant::Monotone)));
  EXPECT_TRUE(solve(out).yes);
  EXPECT_FALSE(solve(run(r, in, ilp_to_monotone_witness(in, {0}, {1}))).yes);
  const IlpInstance pos = ilp({{1}}, {1}, IlpVariant::Standard);
  const auto out2 = run(r, pos, ilp_to_monotone_witness(pos, {1}, {0}));
  EXPECT_EQ(out2, ProblemInstance(ilp({{1, 0}}, {1, 0}, IlpVariant::Monotone)));
  EXPECT_TRUE(solve(out2).yes);
}

TEST(SsToZq, Forward) {
  EXPECT_EQ(run(ss_to_zq(), SubsetSumInstance{{3, 5}, 5, {}}), ProblemInstance(SubsetSumInstance{{3, 5}, 5, BigInt(10)}));
}

TEST(ZqToSs, Backward) {
  const auto r = zq_to_ss();
  const SubsetSumInstance in{{5, 4}, 3, BigInt(6)};
  const auto yes = run(r, in, zq_to_ss_witness(in, 9));
  EXPECT_EQ(yes, ProblemInstance(SubsetSumInstance{{5, 4}, 9, {}}));
  EXPECT_TRUE(solve(yes).yes);
  const auto no = run(r, in, zq_to_ss_witness(in, 4));
  EXPECT_FALSE(solve(no).yes);
  EXPECT_EQ(parameter(no), parameter(trivial_instance(ProblemKind::SubsetSum, false)));
}

TEST(Compose, RoundTripsAndIdentity) {
  const ProblemInstance in = SubsetSumInstance{{3, 5}, 5, {}};
  const auto rt = compose(ss_to_knapsack(), knapsack_to_ss());
  EXPECT_TRUE(solve(apply(rt, in, synthesize(rt, in, *solve(in).solution))).yes);
  const auto id = compose(identity_reduction(ProblemKind::SubsetSum), ss_to_knapsack());
  EXPECT_EQ(apply(id, in, {}), apply(ss_to_knapsack(), in, {}));
  const ProblemInstance one = SubsetSumInstance{{1}, 1, {}};
  const auto chain = compose(ss_to_monotone(), monotone_to_zerosum());
  EXPECT_TRUE(solve(apply(chain, one, synthesize(chain, one, *solve(one).solution))).yes);
  EXPECT_THROW(compose(ss_to_knapsack(), ss_to_zq()), UnsupportedKindError);
}

TEST(Apply, RejectsWrongWitnessLength) {
  const SubsetSumInstance in{{5, 4}, 3, BigInt(6)};
  EXPECT_THROW(apply(zq_to_ss(), in, Witness{{true}}), std::invalid_argument);
  EXPECT_THROW(apply(zq_to_ss(), SubsetSumInstance{{1}, 1, {}}, {}), UnsupportedKindError);
}

// Each reduction over small multiset grids, with target verdicts taken from the naive oracles.
TEST(NumericContracts, AgreeWithBruteForce) {
  struct Case {
    Reduction r;
    std::vector<ProblemInstance> fam;
  };
  const std::vector<Case> cases = {
      {ss_to_knapsack(), ss_grid(3, 5, 12)},
      {knapsack_to_ss(), knapsack_grid(2, 4)},
      {ss_to_monotone(), ss_grid(3, 5, 12)},
      {monotone_to_ss(), ilp_grid(2, 3, IlpVariant::Monotone)},
      {monotone_to_zerosum(), ilp_grid(1, 3, IlpVariant::Monotone)},
      {zerosum_to_ilp(), ilp_grid(2, 3, IlpVariant::ZeroSumNontrivial)},
      {ilp_to_monotone(), ilp_grid(1, 3, IlpVariant::Standard)},
      {ss_to_zq(), ss_grid(3, 5, 12)},
      {zq_to_ss(), zq_grid(5, 3)},
  };
  for (const auto& c : cases) {
    for (const auto& in : c.fam) {
      const bool src = bf::solve(in);
      const auto len = c.r.witness_length(in);
      ASSERT_LE(len, 16u) << c.r.name;
      bool any = false;
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i)
        any |= bf::solve(apply(c.r, in, Witness::from_index(i, len)));
      ASSERT_EQ(any, src) << c.r.name << " " << dump_instance(in);
      if (src) {
        ASSERT_TRUE(bf::solve(apply(c.r, in, synthesize(c.r, in, *solve(in).solution)))) << c.r.name;
      }
    }
  }
}

TEST(Harness, IdentityPassesMutantFails) {
  const auto fam = ss_grid(2, 3, 6);
  EXPECT_TRUE(nppt_contract_check(identity_reduction(ProblemKind::SubsetSum), fam).passed());
  const auto bad = nppt_contract_check(mutant_ss_shift(), fam);
  EXPECT_FALSE(bad.clean());
  EXPECT_FALSE(report_summary(bad).empty());
  EXPECT_EQ(report_to_json(bad)["status"], "fail");
}

TEST(Harness, BudgetOverrunIsSkippedNotPassed) {
  ContractBudget tiny;
  tiny.max_witness_bits = 0;
  const auto rep = nppt_contract_check(zq_to_ss(), zq_grid(4, 2), tiny);
  EXPECT_GT(rep.skipped, 0u);
  EXPECT_FALSE(rep.passed());
  EXPECT_EQ(report_to_json(rep)["status"], "partial");
}

TEST(Harness, WorkersGiveTheSameReport) {
  const auto fam = knapsack_grid(2, 3);
  ContractBudget par;
  par.workers = 3;
  const auto a = nppt_contract_check(knapsack_to_ss(), fam);
  const auto b = nppt_contract_check(knapsack_to_ss(), fam, par);
  EXPECT_EQ(report_to_json(a), report_to_json(b));
}

TEST(Registry, PipelinesAndNames) {
  EXPECT_TRUE(find_reduction("ss-to-knapsack"));
  EXPECT_TRUE(find_reduction("identity:knapsack"));
  EXPECT_FALSE(find_reduction("nope"));
  EXPECT_THROW(parse_pipeline("ss-to-knapsack,nope"), std::invalid_argument);
  EXPECT_THROW(parse_pipeline("ss-to-knapsack,ss-to-zq"), UnsupportedKindError);
  const auto p = parse_pipeline("ss-to-monotone,monotone-to-ss");
  EXPECT_EQ(p.source, ProblemKind::SubsetSum);
  EXPECT_EQ(p.target, ProblemKind::SubsetSum);
  EXPECT_GE(reduction_names().size(), 14u);
}
