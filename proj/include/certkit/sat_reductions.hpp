#pragma once

#include "certkit/reduction.hpp"

namespace certkit {

// Base-10 digits: variable i at 10^(i-1), clause j at 10^(k+j-1). Items per variable
// (x_i then ¬x_i), then slacks 1 and 2 per clause. Target has 1 per variable, 4 per clause.
// Throws ValidationError on a clause with more than 3 literals.
SubsetSumInstance three_sat_to_subset_sum(const CnfInstance& f);

Reduction tsat_to_ss();            // PPT
Reduction andsat_to_scheduling();  // PPT; 2^k <= n is decided by the SAT oracle
Reduction cnf_to_coloring();       // PPT; OR-gadget chains, one bag per clause

// Vertex numbering of cnf_to_coloring: g_B, g_F, then x_i^Y, x_i^N per variable.
inline constexpr std::size_t kBaseVertex = 0;
inline constexpr std::size_t kFalseVertex = 1;
inline std::size_t literal_vertex(int literal) {
  const auto i = static_cast<std::size_t>(literal > 0 ? literal : -literal);
  return 2 + 2 * (i - 1) + (literal < 0 ? 1 : 0);
}

}  // namespace certkit
