#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "certkit/instances.hpp"

namespace certkit {

// Explicit limits; fallback order is DP -> brute force -> ResourceError.
struct SolverBudget {
  std::uint64_t max_dp_cells = std::uint64_t{1} << 26;
  std::size_t max_bruteforce_items = 25;
  std::size_t max_permutation_jobs = 8;
  std::size_t max_sat_vars = 25;
  std::uint64_t max_search_nodes = std::uint64_t{1} << 27;
};

struct Subsequence {  // 0-based, strictly increasing
  std::vector<std::size_t> indices;
  bool operator==(const Subsequence&) const = default;
};
struct BinaryVector {
  std::vector<int> x;
  bool operator==(const BinaryVector&) const = default;
};
struct Schedule {
  std::vector<std::size_t> order;  // processing order, a permutation of jobs
  bool operator==(const Schedule&) const = default;
};
struct ColorMap {  // colors in {0,1,2}
  std::vector<int> colors;
  bool operator==(const ColorMap&) const = default;
};
struct Assignment {  // values[i] is variable i+1
  std::vector<bool> values;
  bool operator==(const Assignment&) const = default;
};
struct AssignmentList {
  std::vector<Assignment> per_formula;
  bool operator==(const AssignmentList&) const = default;
};
struct Multiplicities {  // counts[i] copies of item i
  std::vector<BigInt> counts;
  bool operator==(const Multiplicities&) const = default;
};

using Solution = std::variant<Subsequence, BinaryVector, Schedule, ColorMap, Assignment,
                              AssignmentList, Multiplicities>;

struct Telemetry {
  std::string method;
  std::uint64_t states = 0;
};

struct Verdict {
  bool yes = false;
  std::optional<Solution> solution;
  Telemetry telemetry;
};

Verdict solve_subset_sum(const SubsetSumInstance& inst, const SolverBudget& budget = {});
Verdict solve_knapsack(const KnapsackInstance& inst, const SolverBudget& budget = {});
Verdict solve_ilp(const IlpInstance& inst, const SolverBudget& budget = {});
Verdict solve_group_ss(const GroupSubsetSumInstance& inst, const SolverBudget& budget = {});
Verdict solve_counter_machine(const CounterMachineInstance& inst, const SolverBudget& budget = {});
Verdict solve_coloring(const ColoringInstance& inst, const SolverBudget& budget = {});
Verdict solve_scheduling(const SchedulingInstance& inst, const SolverBudget& budget = {});
Verdict solve_cnf(const CnfInstance& inst, const SolverBudget& budget = {});
Verdict solve_and_sat(const AndSatInstance& inst, const SolverBudget& budget = {});
Verdict solve_unbounded_ss(const UnboundedSubsetSumInstance& inst, const SolverBudget& budget = {});

// Exhaustive search over on-time job sets (each checked in due-date order).
Verdict solve_scheduling_exhaustive(const SchedulingInstance& inst, const SolverBudget& budget = {});
// Exhaustive search over all processing orders; n <= budget.max_permutation_jobs.
Verdict solve_scheduling_permutations(const SchedulingInstance& inst, const SolverBudget& budget = {});

Verdict solve(const ProblemInstance& inst, const SolverBudget& budget = {});

// Standalone re-check of a claimed solution (re-sum, re-multiply, re-schedule, re-color).
bool check_solution(const ProblemInstance& inst, const Solution& solution);

bool satisfies(const CnfInstance& f, const std::vector<bool>& values);

// Tardy weight of processing jobs in `order`.
BigInt tardy_weight(const SchedulingInstance& inst, const std::vector<std::size_t>& order);

}  // namespace certkit
