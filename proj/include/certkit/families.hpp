#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "certkit/instances.hpp"

namespace certkit {

// Exhaustive grids enumerate item lists as multisets (nondecreasing order): every reduction
// here is invariant under permuting items, so this covers the grid up to permutation.

// Items in [0, item_max], n <= n_max, every target in [0, target_max].
std::vector<ProblemInstance> ss_grid(std::size_t n_max, std::uint64_t item_max, std::uint64_t target_max);
// Items (size, weight) in [1, value_max]^2, n <= n_max, capacity and demand in [0, value_max].
std::vector<ProblemInstance> knapsack_grid(std::size_t n_max, std::uint64_t value_max);
// 1 <= m <= m_max rows, n <= n_max columns. rhs: Standard |b_j| <= n+1, Monotone b_j in [-1, n+1],
// ZeroSum b = 0.
std::vector<ProblemInstance> ilp_grid(std::size_t m_max, std::size_t n_max, IlpVariant variant);
// Modulus q in [1, q_max], items in [0, q), n <= n_max, target in [0, q).
std::vector<ProblemInstance> zq_grid(std::uint64_t q_max, std::size_t n_max);
// Every sequence (order matters) of (vector, flag) pairs, 1 <= l <= l_max, n <= n_max.
std::vector<ProblemInstance> cm_grid(std::size_t l_max, std::size_t n_max);
// Z_k^k elements as multisets, n <= n_max, every target.
std::vector<ProblemInstance> zkk_grid(std::uint32_t k, std::size_t n_max);
// Items in [1, item_max], n <= n_max, targets in [0, target_max].
std::vector<ProblemInstance> unbounded_grid(std::size_t n_max, std::uint64_t item_max, std::uint64_t target_max);

// n uniform in [0, n_max]; items and target uniform in [0, value_max].
std::vector<ProblemInstance> random_ss(std::size_t count, std::size_t n_max, std::uint64_t value_max,
                                       std::uint64_t seed);
std::vector<ProblemInstance> random_cm(std::size_t count, std::size_t l, std::size_t n, std::uint64_t seed);

// All labeled simple graphs on exactly n vertices (2^(n choose 2) of them).
std::vector<Graph> all_graphs(std::size_t n);
// Vertex-separation decomposition along 0..n-1, minus bags contained in their successor.
std::vector<Bag> canonical_decomposition(const Graph& g);
ColoringInstance with_canonical_decomposition(const Graph& g);
// k3, k4, c5, p4, path:N, cycle:N, complete:N, star:N. Throws std::invalid_argument.
ColoringInstance named_graph(const std::string& name);

// "<family>:key=value,..." — ss-grid(n,max,t), knapsack-grid(n,max), ilp-grid(m,n,variant),
// zq-grid(q,n), cm-grid(l,n), zkk-grid(k,n), unbounded-grid(n,max,t), random-ss(count,n,max,seed),
// random-cm(count,l,n,seed), graphs(n), graph(name). Throws std::invalid_argument.
std::vector<ProblemInstance> parse_family_spec(const std::string& spec);

}  // namespace certkit
