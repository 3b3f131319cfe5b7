#include <gtest/gtest.h>

#include "certkit/bigint.hpp"
#include "certkit/errors.hpp"
#include "certkit/families.hpp"
#include "certkit/path_decomposition.hpp"
#include "certkit/serialization.hpp"
#include "certkit/witness.hpp"

using namespace certkit;

TEST(BigInt, BitLengthAndFieldWidth) {
  EXPECT_EQ(bit_length(0), 0u);
  EXPECT_EQ(bit_length(1), 1u);
  EXPECT_EQ(bit_length(8), 4u);
  EXPECT_EQ(field_width(1), 0u);
  EXPECT_EQ(field_width(2), 1u);
  EXPECT_EQ(field_width(3), 2u);
  EXPECT_EQ(field_width(4), 2u);
  EXPECT_EQ(field_width(5), 3u);
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(9), 4u);
}

TEST(BigInt, DecimalRoundTrip) {
  const BigInt big = pow_big(10, 40) + 7;
  EXPECT_EQ(parse_decimal(to_decimal(big)), big);
  EXPECT_EQ(parse_decimal("-12"), BigInt(-12));
  EXPECT_FALSE(parse_decimal("12a"));
  EXPECT_FALSE(parse_decimal(""));
  EXPECT_FALSE(to_u64(-1));
  EXPECT_FALSE(to_u64(pow_big(2, 64)));
  EXPECT_EQ(to_u64(pow_big(2, 64) - 1), std::numeric_limits<std::uint64_t>::max());
}

TEST(Witness, HexRoundTrip) {
  const Witness w{{true, false, true, true, false}};
  EXPECT_EQ(w.to_hex(), "b0");
  EXPECT_EQ(Witness::from_hex("b0", 5), w);
  EXPECT_FALSE(Witness::from_hex("b4", 5));  // padding bit set
  EXPECT_FALSE(Witness::from_hex("b", 5));
  EXPECT_FALSE(Witness::from_hex("zz", 5));
  EXPECT_EQ(Witness{}.to_hex(), "");
}

TEST(Witness, FromIndexIsLexicographic) {
  EXPECT_EQ(Witness::from_index(0b101, 3).bits, (std::vector<bool>{true, false, true}));
  EXPECT_EQ(Witness::from_index(1, 4).bits, (std::vector<bool>{false, false, false, true}));
}

TEST(Witness, FieldsAreBigEndianOffsets) {
  WitnessWriter wr;
  wr.put(5, 6, 3);   // offset 2 in a 3-bit field
  wr.put(0, 1);      // single admissible value: no bits
  wr.put(1, 2);
  const Witness w = wr.finish();
  EXPECT_EQ(w.bits, (std::vector<bool>{false, true, false, true}));
  WitnessReader rd(w);
  EXPECT_EQ(rd.take(6, 3), BigInt(5));
  EXPECT_EQ(rd.take(1), BigInt(0));
  EXPECT_EQ(rd.take(2), BigInt(1));
  EXPECT_EQ(rd.remaining(), 0u);
  EXPECT_FALSE(rd.take(2));  // ran out
}

TEST(Witness, OutOfRangeFieldIsRejected) {
  const Witness w{{true, true, true}};
  WitnessReader rd(w);
  EXPECT_FALSE(rd.take(5));  // 7 >= 5
}

TEST(Instances, Validation) {
  EXPECT_TRUE(validate(SubsetSumInstance{{1, 2}, 3, {}}).empty());
  EXPECT_FALSE(validate(SubsetSumInstance{{-1}, 3, {}}).empty());
  EXPECT_FALSE(validate(SubsetSumInstance{{1}, 5, BigInt(4)}).empty());  // t >= q
  EXPECT_FALSE(validate(KnapsackInstance{{{0, 1}}, 1, 1}).empty());
  EXPECT_FALSE(validate(IlpInstance{{{2}}, {0}, IlpVariant::Standard}).empty());
  EXPECT_FALSE(validate(IlpInstance{{{-1}}, {0}, IlpVariant::Monotone}).empty());
  EXPECT_FALSE(validate(IlpInstance{{{1}}, {1}, IlpVariant::ZeroSumNontrivial}).empty());
  EXPECT_FALSE(validate(CounterMachineInstance{2, {{1}}, {Flag::Optional}}).empty());
  EXPECT_FALSE(validate(CnfInstance{1, {{2}}, {}}).empty());
  EXPECT_THROW(require_valid(SubsetSumInstance{{-1}, 3, {}}), ValidationError);
}

TEST(Instances, TrivialInstancesDecide) {
  for (auto kind : {ProblemKind::SubsetSum, ProblemKind::ModularSubsetSum, ProblemKind::Knapsack, ProblemKind::Ilp,
                    ProblemKind::MonotoneIlp, ProblemKind::ZeroSumIlp, ProblemKind::GroupSubsetSum,
                    ProblemKind::CounterMachine, ProblemKind::Coloring, ProblemKind::Scheduling, ProblemKind::Cnf,
                    ProblemKind::AndSat, ProblemKind::UnboundedSubsetSum}) {
    for (bool yes : {false, true}) {
      const auto inst = trivial_instance(kind, yes);
      EXPECT_EQ(kind_of(inst), kind);
      EXPECT_TRUE(validate(inst).empty()) << kind_name(kind);
      EXPECT_EQ(solve(inst).yes, yes) << kind_name(kind);
    }
  }
}

TEST(Instances, KindNamesRoundTrip) {
  for (auto kind : {ProblemKind::SubsetSum, ProblemKind::ZeroSumIlp, ProblemKind::UnboundedSubsetSum})
    EXPECT_EQ(parse_kind(kind_name(kind)), kind);
  EXPECT_FALSE(parse_kind("nope"));
}

TEST(Serialization, RoundTripsEveryKind) {
  const std::vector<ProblemInstance> samples = {
      SubsetSumInstance{{3, 5}, 8, {}},
      SubsetSumInstance{{5, 4}, 3, BigInt(6)},
      KnapsackInstance{{{2, 3}, {1, 1}}, 2, 3},
      IlpInstance{{{1, -1}, {0, 1}}, {1, 0}, IlpVariant::Standard},
      IlpInstance{{{1}, {-1}}, {0}, IlpVariant::ZeroSumNontrivial},
      GroupSubsetSumInstance{ProductGroup{2}, {{1, 0}, {1, 1}}, {0, 1}},
      GroupSubsetSumInstance{SymmetricGroup{3}, {{1, 2, 0}}, {0, 1, 2}},
      CounterMachineInstance{2, {{1, 0}, {-1, 0}}, {Flag::Optional, Flag::Required}},
      named_graph("k3"),
      SchedulingInstance{{{1, 2, 3}}, 0},
      CnfInstance{2, {{1, -2}}, std::size_t{3}},
      AndSatInstance{1, {CnfInstance{1, {{1}}, {}}}},
      UnboundedSubsetSumInstance{{4, 5}, 23},
  };
  for (const auto& inst : samples) {
    const auto text = dump_instance(inst);
    EXPECT_EQ(parse_instance(text), inst) << text;
  }
  const BigInt huge = pow_big(2, 200);
  const ProblemInstance big = SubsetSumInstance{{huge}, huge, {}};
  EXPECT_EQ(parse_instance(dump_instance(big)), big);
}

TEST(Serialization, RejectsBadInput) {
  EXPECT_THROW(parse_instance(R"({"kind":"subset_sum","items":[-1],"target":1})"), ValidationError);
  EXPECT_THROW(parse_instance(R"({"kind":"nope"})"), ValidationError);
  EXPECT_THROW(parse_instance("not json"), ValidationError);
}

TEST(PathDecomposition, Axioms) {
  const Graph p3{3, {{0, 1}, {1, 2}}};
  EXPECT_TRUE(decomposition_violations(p3, {{0, 1}, {1, 2}}).empty());
  EXPECT_FALSE(decomposition_violations(p3, {{0, 1}, {2}}).empty());             // edge 1-2 uncovered
  EXPECT_FALSE(decomposition_violations(p3, {{0, 1}, {2}, {1, 2}}).empty());     // 1 not contiguous
  EXPECT_FALSE(decomposition_violations(p3, {{0, 1}}).empty());                  // vertex 2 missing
  EXPECT_EQ(decomposition_width({{0, 1}, {1, 2}}), 1u);
  EXPECT_EQ(decomposition_width({}), 0u);
}

TEST(PathDecomposition, NiceFormIsOneStepAtATime) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : all_graphs(n)) {
      const auto bags = canonical_decomposition(g);
      ASSERT_TRUE(decomposition_violations(g, bags).empty());
      const auto nice = make_nice(g, bags);
      EXPECT_EQ(nice.width, decomposition_width(bags));
      std::size_t introduced = 0, forgotten = 0, edges = 0;
      for (const auto& c : nice.commands) {
        introduced += c.type == Command::Type::Introduce;
        forgotten += c.type == Command::Type::Forget;
        edges += c.type == Command::Type::Edge;
      }
      EXPECT_EQ(introduced, n);
      EXPECT_EQ(forgotten, n);
      EXPECT_EQ(edges, g.edges.size());
      const auto labels = greedy_labels(nice.commands, n, nice.width);
      for (const auto& e : g.edges) EXPECT_NE(labels[e.first], labels[e.second]);
      for (auto l : labels) {
        EXPECT_GE(l, 1u);
        EXPECT_LE(l, nice.width + 1);
      }
    }
}

TEST(Families, CanonicalDecompositionOfK4IsOneBag) {
  const auto k4 = named_graph("k4");
  EXPECT_EQ(k4.bags.size(), 1u);
  EXPECT_EQ(decomposition_width(k4.bags), 3u);
  EXPECT_EQ(all_graphs(4).size(), 64u);
  EXPECT_THROW(named_graph("petersen"), std::invalid_argument);
  EXPECT_THROW(parse_family_spec("ss-grid:bogus=1"), std::invalid_argument);
}

TEST(Families, GridsAreValid) {
  for (const auto& spec : {"ss-grid:n=2,max=3,t=4", "knapsack-grid:n=1,max=2", "ilp-grid:m=1,n=2,variant=monotone",
                           "zq-grid:q=3,n=2", "cm-grid:l=1,n=2", "zkk-grid:k=2,n=1", "unbounded-grid:n=1,max=2,t=3",
                           "random-ss:count=5,n=3,max=9,seed=4", "graphs:n=3"}) {
    const auto fam = parse_family_spec(spec);
    EXPECT_FALSE(fam.empty()) << spec;
    for (const auto& inst : fam) EXPECT_TRUE(validate(inst).empty()) << spec;
  }
}
