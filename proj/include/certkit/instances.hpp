#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "certkit/bigint.hpp"

namespace certkit {

struct SubsetSumInstance {
  std::vector<BigInt> items;
  BigInt target = 0;
  // Present => Group-Z_q variant; addition is taken mod q.
  std::optional<BigInt> modulus;

  bool operator==(const SubsetSumInstance&) const = default;
};

struct KnapsackItem {
  BigInt size;
  BigInt weight;
  bool operator==(const KnapsackItem&) const = default;
};

struct KnapsackInstance {
  std::vector<KnapsackItem> items;
  BigInt capacity = 0;
  BigInt demand = 0;
  bool operator==(const KnapsackInstance&) const = default;
};

enum class IlpVariant { Standard, Monotone, ZeroSumNontrivial };

// Column-major: columns[i] is the i-th column A^i, of length rhs.size().
struct IlpInstance {
  std::vector<std::vector<int>> columns;
  std::vector<std::int64_t> rhs;
  IlpVariant variant = IlpVariant::Standard;

  std::size_t rows() const { return rhs.size(); }
  bool operator==(const IlpInstance&) const = default;
};

struct CyclicGroup {
  std::uint64_t order = 1;
  bool operator==(const CyclicGroup&) const = default;
};
struct ProductGroup {  // Z_k^k
  std::uint32_t k = 1;
  bool operator==(const ProductGroup&) const = default;
};
struct SymmetricGroup {
  std::uint32_t degree = 1;
  bool operator==(const SymmetricGroup&) const = default;
};
using GroupKind = std::variant<CyclicGroup, ProductGroup, SymmetricGroup>;

// Residue (size 1), vector in Z_k^k, or 0-based image array.
using GroupElement = std::vector<std::uint64_t>;

struct GroupSubsetSumInstance {
  GroupKind group = CyclicGroup{1};
  std::vector<GroupElement> elements;
  GroupElement target;
  bool operator==(const GroupSubsetSumInstance&) const = default;
};

GroupElement group_identity(const GroupKind& group);
// a ∘ b; for permutations (a ∘ b)(v) = a(b(v)).
GroupElement group_multiply(const GroupKind& group, const GroupElement& a, const GroupElement& b);
bool group_element_valid(const GroupKind& group, const GroupElement& e);

enum class Flag { Optional, Required };

struct CounterMachineInstance {
  std::size_t dimension = 1;
  std::vector<std::vector<int>> vectors;
  std::vector<Flag> flags;
  bool operator==(const CounterMachineInstance&) const = default;
};

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool operator==(const Graph&) const = default;
};

using Bag = std::vector<std::size_t>;

struct ColoringInstance {
  Graph graph;
  std::vector<Bag> bags;
  bool operator==(const ColoringInstance&) const = default;
};

struct Job {
  BigInt processing;
  BigInt weight;
  BigInt due;
  bool operator==(const Job&) const = default;
};

struct SchedulingInstance {
  std::vector<Job> jobs;
  BigInt tardy_budget = 0;
  bool operator==(const SchedulingInstance&) const = default;
};

// Literals are signed 1-based variable indices.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::optional<std::size_t> arity_cap;
  bool operator==(const CnfInstance&) const = default;
};

struct AndSatInstance {
  std::size_t k = 0;
  std::vector<CnfInstance> formulas;
  bool operator==(const AndSatInstance&) const = default;
};

struct UnboundedSubsetSumInstance {
  std::vector<BigInt> items;
  BigInt target = 0;
  bool operator==(const UnboundedSubsetSumInstance&) const = default;
};

using ProblemInstance =
    std::variant<SubsetSumInstance, KnapsackInstance, IlpInstance, GroupSubsetSumInstance,
                 CounterMachineInstance, ColoringInstance, SchedulingInstance, CnfInstance,
                 AndSatInstance, UnboundedSubsetSumInstance>;

enum class ProblemKind {
  SubsetSum,
  ModularSubsetSum,
  Knapsack,
  Ilp,
  MonotoneIlp,
  ZeroSumIlp,
  GroupSubsetSum,
  CounterMachine,
  Coloring,
  Scheduling,
  Cnf,
  AndSat,
  UnboundedSubsetSum,
};

ProblemKind kind_of(const ProblemInstance& inst);
std::string_view kind_name(ProblemKind kind);
std::optional<ProblemKind> parse_kind(std::string_view name);

// Empty iff every type invariant holds.
std::vector<std::string> validate(const ProblemInstance& inst);
void require_valid(const ProblemInstance& inst);

ProblemInstance trivial_instance(ProblemKind kind, bool yes);

// The problem's natural parameter (log t, m, k, pw, ...), used for bound checks.
BigInt parameter(const ProblemInstance& inst);

// Number of items / columns / vectors / vertices / jobs / formulas.
std::size_t instance_size(const ProblemInstance& inst);

Graph complete_graph(std::size_t n);

}  // namespace certkit
