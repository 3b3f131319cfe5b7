#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "certkit/reduction.hpp"
#include "certkit/serialization.hpp"

namespace certkit {

struct ContractBudget {
  std::size_t max_witness_bits = 20;  // no-instances with longer witnesses are skipped
  SolverBudget solver;
  std::size_t workers = 1;            // 0 = hardware concurrency
};

struct ContractViolation {
  std::size_t instance_index = 0;
  std::string instance_json;
  std::string witness_hex;
  std::string description;
};

struct ContractReport {
  std::string reduction;
  std::size_t instances = 0, yes = 0, no = 0, skipped = 0;
  std::uint64_t witnesses_checked = 0;
  std::vector<ContractViolation> violations;
  std::vector<std::size_t> skipped_indices;

  bool clean() const { return violations.empty(); }
  bool passed() const { return violations.empty() && skipped == 0; }
};

// For every instance: yes => the synthesized witness maps to a yes target;
// no => every witness of the declared length maps to a no target. Parameter bounds are
// checked on every output. Budget overruns mark the instance skipped, never passed.
ContractReport nppt_contract_check(const Reduction& r, const std::vector<ProblemInstance>& family,
                                   const ContractBudget& budget = {});

Json report_to_json(const ContractReport& rep);
std::string report_summary(const ContractReport& rep);

}  // namespace certkit
