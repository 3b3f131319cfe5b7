#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "certkit/path_decomposition.hpp"
#include "certkit/reduction.hpp"

namespace certkit {

// Counters for k labels: x_c -> 3(x-1)+c-1, S -> 3k, Z_{c,d} -> 3k+1+rank(c,d),
// ranking the 6 ordered pairs of distinct colors lexicographically. Colors and labels are 1-based.
struct CounterLayout {
  std::size_t k = 1;

  std::size_t x(std::size_t label, int color) const { return 3 * (label - 1) + static_cast<std::size_t>(color) - 1; }
  std::size_t s() const { return 3 * k; }
  std::size_t z(int c, int d) const;
  std::size_t dimension() const { return 3 * k + 7; }
};

// Partial sums stay in {0,1}^l and the total is zero. Throws on ragged input.
bool is_run(const std::vector<std::vector<int>>& vectors);

// Where each command's block landed in the emitted instance.
struct CmBlock {
  Command command;
  std::size_t first = 0;
  std::size_t length = 0;
};

struct ColoringToCm {
  CounterMachineInstance instance;
  NiceDecomposition nice;
  std::vector<std::size_t> labels;
  std::vector<CmBlock> blocks;
};

ColoringToCm coloring_to_cm_trace(const ColoringInstance& inst);

Reduction coloring_to_cm();  // PPT
Reduction cm_to_permss();    // NPPT: guess n_1..n_l in [0,n]

Witness cm_to_permss_witness(const CounterMachineInstance& inst, const std::vector<std::uint64_t>& n_j);

}  // namespace certkit
