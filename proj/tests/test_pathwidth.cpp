#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "certkit/serialization.hpp"
#include "certkit/contract_check.hpp"
#include "certkit/families.hpp"
#include "certkit/pathwidth_reductions.hpp"
#include "certkit/uq_group.hpp"

using namespace certkit;

TEST(IsRun, Examples) {
  EXPECT_TRUE(is_run({{1}, {-1}}));
  EXPECT_FALSE(is_run({{1}, {1}, {-1}, {-1}}));
  EXPECT_TRUE(is_run({}));
  EXPECT_FALSE(is_run({{1}}));
  EXPECT_THROW(is_run({{1}, {-1, 0}}), std::invalid_argument);
}

TEST(CounterLayout, IsABijection) {
  for (std::size_t k = 1; k <= 4; ++k) {
    const CounterLayout L{k};
    std::vector<int> hit(L.dimension(), 0);
    for (std::size_t x = 1; x <= k; ++x)
      for (int c = 1; c <= 3; ++c) ++hit[L.x(x, c)];
    ++hit[L.s()];
    for (int c = 1; c <= 3; ++c)
      for (int d = 1; d <= 3; ++d)
        if (c != d) ++hit[L.z(c, d)];
    for (int h : hit) EXPECT_EQ(h, 1);
  }
  EXPECT_EQ(CounterLayout{1}.z(1, 2), 4u);
  EXPECT_EQ(CounterLayout{1}.z(3, 2), 9u);
}

TEST(ColoringToCm, SingleVertex) {
  const ColoringInstance g{Graph{1, {}}, {{0}}};
  const auto tr = coloring_to_cm_trace(g);
  EXPECT_EQ(tr.instance.dimension, 10u);
  ASSERT_EQ(tr.blocks.size(), 2u);
  EXPECT_EQ(tr.blocks[0].length, 4u);
  EXPECT_EQ(tr.blocks[1].length, 4u);
  EXPECT_EQ(tr.instance.vectors.size(), 8u);
  EXPECT_TRUE(solve(tr.instance).yes);
}

TEST(ColoringToCm, DimensionsAndVerdicts) {
  const auto k3 = coloring_to_cm_trace(named_graph("k3"));
  EXPECT_EQ(k3.instance.dimension, 16u);
  EXPECT_TRUE(solve(k3.instance).yes);
  const auto k4 = coloring_to_cm_trace(named_graph("k4"));
  EXPECT_EQ(k4.instance.dimension, 19u);
  EXPECT_FALSE(solve(k4.instance).yes);
}

// One Required [S↓] closing each introduce/forget block; the required quartet in each edge block.
TEST(ColoringToCm, BlockAudit) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto tr = coloring_to_cm_trace(with_canonical_decomposition(g));
      const auto& cm = tr.instance;
      const CounterLayout L{tr.nice.width + 1};
      ASSERT_EQ(cm.dimension, L.dimension());
      std::size_t next = 0;
      for (const auto& b : tr.blocks) {
        ASSERT_EQ(b.first, next);
        next += b.length;
        std::vector<std::size_t> required;
        for (std::size_t i = 0; i < b.length; ++i)
          if (cm.flags[b.first + i] == Flag::Required) required.push_back(i);
        auto only_s = [&](std::size_t i, int sign) {
          const auto& v = cm.vectors[b.first + i];
          for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != (j == L.s() ? sign : 0)) return false;
          return true;
        };
        if (b.command.type == Command::Type::Edge) {
          ASSERT_EQ(b.length, 16u);
          ASSERT_EQ(required, (std::vector<std::size_t>{6, 7, 14, 15}));
          EXPECT_TRUE(only_s(6, -1));
          EXPECT_TRUE(only_s(7, 1));
          EXPECT_TRUE(only_s(14, 1));
          EXPECT_TRUE(only_s(15, -1));
        } else {
          ASSERT_EQ(b.length, 4u);
          ASSERT_EQ(required, (std::vector<std::size_t>{3}));
          EXPECT_TRUE(only_s(3, -1));
        }
      }
      EXPECT_EQ(next, cm.vectors.size());
    }
}

TEST(ColoringToCm, AgreesWithBruteForce) {
  std::vector<ColoringInstance> fam;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : all_graphs(n)) fam.push_back(with_canonical_decomposition(g));
  for (auto name : {"k3", "k4", "c5", "p4", "star:4"}) fam.push_back(named_graph(name));
  const auto r = coloring_to_cm();
  for (const auto& g : fam) {
    const auto out = apply(r, g, {});
    EXPECT_EQ(solve(out).yes, bf::three_colorable(g.graph)) << dump_instance(g);
  }
}

TEST(CmToPermss, Examples) {
  const auto r = cm_to_permss();
  const CounterMachineInstance pm{1, {{1}, {-1}}, {Flag::Required, Flag::Required}};
  const auto yes = apply(r, pm, cm_to_permss_witness(pm, {2}));
  const auto& g = std::get<GroupSubsetSumInstance>(yes);
  const auto r_deg = chi_context(2).r();
  EXPECT_EQ(std::get<SymmetricGroup>(g.group).degree, 2 * 2 * r_deg);
  EXPECT_TRUE(solve(yes).yes);
  EXPECT_TRUE(bf::group_ss(g));
  EXPECT_FALSE(bf::solve(apply(r, pm, cm_to_permss_witness(pm, {1}))));
  EXPECT_THROW(cm_to_permss_witness(pm, {3}), std::out_of_range);

  const CounterMachineInstance up{1, {{1}}, {Flag::Required}};
  const auto len = r.witness_length(up);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i)
    EXPECT_FALSE(bf::solve(apply(r, up, Witness::from_index(i, len))));
}

TEST(CmToPermss, ContractOnSmallGrid) {
  const auto fam = cm_grid(2, 3);
  const auto rep = nppt_contract_check(cm_to_permss(), fam);
  EXPECT_TRUE(rep.passed()) << report_summary(rep);
  EXPECT_EQ(rep.instances, fam.size());
}
