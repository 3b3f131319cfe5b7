#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "certkit/serialization.hpp"
#include "certkit/errors.hpp"
#include "certkit/families.hpp"
#include "certkit/oracles.hpp"

using namespace certkit;

namespace {

void expect_agrees(const std::vector<ProblemInstance>& fam, const std::string& label) {
  for (const auto& inst : fam) {
    const auto v = solve(inst);
    ASSERT_EQ(v.yes, bf::solve(inst)) << label << " " << dump_instance(inst);
    if (v.yes) {
      ASSERT_TRUE(v.solution) << label;
      EXPECT_TRUE(check_solution(inst, *v.solution)) << label << " " << dump_instance(inst);
    }
  }
}

}  // namespace

TEST(Oracles, SubsetSumGrid) { expect_agrees(ss_grid(4, 6, 20), "ss"); }
TEST(Oracles, ModularGrid) { expect_agrees(zq_grid(6, 3), "zq"); }
TEST(Oracles, KnapsackGrid) { expect_agrees(knapsack_grid(2, 3), "knapsack"); }
TEST(Oracles, IlpGrids) {
  expect_agrees(ilp_grid(2, 2, IlpVariant::Standard), "ilp");
  expect_agrees(ilp_grid(1, 3, IlpVariant::Monotone), "monotone");
  expect_agrees(ilp_grid(2, 3, IlpVariant::ZeroSumNontrivial), "zerosum");
}
TEST(Oracles, ZkkGrid) { expect_agrees(zkk_grid(2, 3), "zkk"); }
TEST(Oracles, CounterMachineGrid) { expect_agrees(cm_grid(2, 3), "cm"); }
TEST(Oracles, UnboundedGrid) { expect_agrees(unbounded_grid(2, 5, 17), "unbounded"); }

TEST(Oracles, Coloring) {
  std::vector<ProblemInstance> fam;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : all_graphs(n)) fam.push_back(with_canonical_decomposition(g));
  for (auto name : {"k3", "k4", "c5", "p4", "cycle:7", "complete:5"}) fam.push_back(named_graph(name));
  expect_agrees(fam, "coloring");
}

TEST(Oracles, SymmetricGroupSubsetSum) {
  std::mt19937_64 rng(3);
  std::vector<ProblemInstance> fam;
  for (int rep = 0; rep < 200; ++rep) {
    GroupSubsetSumInstance g;
    g.group = SymmetricGroup{4};
    const std::size_t n = rng() % 5;
    auto random_perm = [&] {
      GroupElement p{0, 1, 2, 3};
      std::shuffle(p.begin(), p.end(), rng);
      return p;
    };
    for (std::size_t i = 0; i < n; ++i) g.elements.push_back(random_perm());
    g.target = random_perm();
    fam.push_back(g);
  }
  expect_agrees(fam, "perm");
}

TEST(Oracles, SchedulingAllSolversAgree) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    SchedulingInstance s;
    const std::size_t n = rng() % 6;
    for (std::size_t i = 0; i < n; ++i) s.jobs.push_back({BigInt(rng() % 4 + 1), BigInt(rng() % 5 + 1), BigInt(rng() % 9 + 1)});
    s.tardy_budget = rng() % 6;
    const bool truth = bf::scheduling(s);
    EXPECT_EQ(solve_scheduling(s).yes, truth) << dump_instance(s);
    EXPECT_EQ(solve_scheduling_exhaustive(s).yes, truth);
    EXPECT_EQ(solve_scheduling_permutations(s).yes, truth);
    const auto v = solve_scheduling(s);
    if (v.yes) EXPECT_TRUE(check_solution(s, *v.solution));
  }
}

TEST(Oracles, CnfAndAndSat) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 300; ++rep) {
    CnfInstance f;
    f.num_vars = rng() % 4;
    const std::size_t m = rng() % 5;
    for (std::size_t j = 0; j < m && f.num_vars; ++j) {
      std::vector<int> cl;
      const std::size_t a = rng() % 3 + 1;
      for (std::size_t l = 0; l < a; ++l) {
        const int v = static_cast<int>(rng() % f.num_vars) + 1;
        cl.push_back(rng() % 2 ? v : -v);
      }
      f.clauses.push_back(cl);
    }
    EXPECT_EQ(solve_cnf(f).yes, bf::cnf(f)) << dump_instance(f);
    AndSatInstance a{f.num_vars, {f, CnfInstance{f.num_vars, {}, {}}}};
    EXPECT_EQ(solve_and_sat(a).yes, bf::and_sat(a));
  }
}

TEST(Oracles, CheckSolutionRejectsWrongAnswers) {
  const ProblemInstance ss = SubsetSumInstance{{3, 5}, 8, {}};
  EXPECT_TRUE(check_solution(ss, Subsequence{{0, 1}}));
  EXPECT_FALSE(check_solution(ss, Subsequence{{0}}));
  EXPECT_FALSE(check_solution(ss, Subsequence{{1, 0}}));
  const ProblemInstance k3 = named_graph("k3");
  EXPECT_TRUE(check_solution(k3, ColorMap{{0, 1, 2}}));
  EXPECT_FALSE(check_solution(k3, ColorMap{{0, 1, 1}}));
}

TEST(Oracles, BudgetOverrunsRaise) {
  SolverBudget tiny;
  tiny.max_dp_cells = 4;
  tiny.max_bruteforce_items = 2;
  SubsetSumInstance big{{1, 2, 3, 4, 5}, 100, {}};
  EXPECT_THROW(solve_subset_sum(big, tiny), ResourceError);
}

TEST(Oracles, LargeNumbersUseTheBigIntPath) {
  const BigInt base = pow_big(2, 100);
  SubsetSumInstance s{{base, base + 1, 3}, 2 * base + 4, {}};
  EXPECT_TRUE(solve(s).yes);
  s.target += 1;
  EXPECT_FALSE(solve(s).yes);
}
