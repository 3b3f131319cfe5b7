#include "certkit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "certkit/errors.hpp"
#include "certkit/path_decomposition.hpp"

namespace certkit {
namespace {

struct VecHash {
  template <typename T>
  std::size_t operator()(const std::vector<T>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

Subsequence mask_to_subsequence(std::uint64_t mask, std::size_t n) {
  Subsequence s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) s.indices.push_back(i);
  return s;
}

Verdict no_verdict(std::string method, std::uint64_t states) {
  return Verdict{false, std::nullopt, Telemetry{std::move(method), states}};
}

Verdict yes_verdict(Solution sol, std::string method, std::uint64_t states) {
  return Verdict{true, std::move(sol), Telemetry{std::move(method), states}};
}

// Gray-code walk over all 2^n subsets; `hit` is called with the running sum.
template <typename Hit>
std::optional<std::uint64_t> gray_search(const std::vector<BigInt>& items, Hit hit) {
  const std::size_t n = items.size();
  BigInt sum = 0;
  std::uint64_t mask = 0;
  if (hit(sum)) return mask;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= std::uint64_t{1} << bit;
    if (mask >> bit & 1U) sum += items[bit];
    else sum -= items[bit];
    if (hit(sum)) return mask;
  }
  return std::nullopt;
}

Verdict ss_bruteforce(const SubsetSumInstance& inst, const SolverBudget& budget) {
  const std::size_t n = inst.items.size();
  if (n > budget.max_bruteforce_items) throw ResourceError("subset sum: instance exceeds DP and brute-force budgets");
  std::optional<std::uint64_t> mask;
  if (inst.modulus) {
    const BigInt q = *inst.modulus;
    mask = gray_search(inst.items, [&](const BigInt& s) { return s % q == inst.target; });
  } else {
    mask = gray_search(inst.items, [&](const BigInt& s) { return s == inst.target; });
  }
  const std::uint64_t states = std::uint64_t{1} << n;
  if (!mask) return no_verdict("bruteforce", states);
  return yes_verdict(mask_to_subsequence(*mask, n), "bruteforce", states);
}

}  // namespace

Verdict solve_subset_sum(const SubsetSumInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.items.size();
  if (inst.target == 0) return yes_verdict(Subsequence{}, "trivial", 1);

  // Modular: layered DP over q residues.
  if (inst.modulus) {
    auto q64 = to_u64(*inst.modulus);
    if (!q64 || BigInt(n + 1) * *q64 > budget.max_dp_cells) return ss_bruteforce(inst, budget);
    const std::uint64_t q = *q64;
    if (n <= 20 && (std::uint64_t{1} << n) <= (n + 1) * q && n <= budget.max_bruteforce_items)
      return ss_bruteforce(inst, budget);
    std::vector<std::vector<std::uint8_t>> reach(n + 1, std::vector<std::uint8_t>(q, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = static_cast<std::uint64_t>(inst.items[i]);
      for (std::uint64_t s = 0; s < q; ++s) {
        if (!reach[i][s]) continue;
        reach[i + 1][s] = 1;
        reach[i + 1][(s + p) % q] = 1;
      }
    }
    const auto t = static_cast<std::uint64_t>(inst.target);
    if (!reach[n][t]) return no_verdict("dp", (n + 1) * q);
    Subsequence sol;
    std::uint64_t s = t;
    for (std::size_t i = n; i-- > 0;) {
      if (reach[i][s]) continue;
      const auto p = static_cast<std::uint64_t>(inst.items[i]);
      sol.indices.push_back(i);
      s = (s + q - p) % q;
    }
    std::reverse(sol.indices.begin(), sol.indices.end());
    return yes_verdict(sol, "dp", (n + 1) * q);
  }

  auto t64 = to_u64(inst.target);
  const bool dp_fits = t64 && BigInt(n + 1) * (*t64 + 1) <= budget.max_dp_cells;
  // Cheapest exact method first.
  if (n <= budget.max_bruteforce_items &&
      (!dp_fits || (n < 40 && BigInt(1) << n <= BigInt(n + 1) * (*t64 + 1)))) {
    return ss_bruteforce(inst, budget);
  }
  if (!dp_fits) throw ResourceError("subset sum: instance exceeds DP and brute-force budgets");
  const std::uint64_t t = *t64;
  const std::size_t w = t + 1;
  std::vector<std::uint8_t> reach((n + 1) * w, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* prev = &reach[i * w];
    std::uint8_t* cur = &reach[(i + 1) * w];
    std::copy(prev, prev + w, cur);
    if (inst.items[i] > t) continue;
    const auto p = static_cast<std::uint64_t>(inst.items[i]);
    for (std::uint64_t s = p; s < w; ++s)
      if (prev[s - p]) cur[s] = 1;
  }
  if (!reach[n * w + t]) return no_verdict("dp", (n + 1) * w);
  Subsequence sol;
  std::uint64_t s = t;
  for (std::size_t i = n; i-- > 0;) {
    if (reach[i * w + s]) continue;
    sol.indices.push_back(i);
    s -= static_cast<std::uint64_t>(inst.items[i]);
  }
  std::reverse(sol.indices.begin(), sol.indices.end());
  return yes_verdict(sol, "dp", (n + 1) * w);
}

Verdict solve_knapsack(const KnapsackInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.items.size();
  if (inst.demand == 0) return yes_verdict(Subsequence{}, "trivial", 1);

  auto w64 = to_u64(inst.demand);
  const bool dp_fits = w64 && BigInt(n + 1) * (*w64 + 1) <= budget.max_dp_cells;
  const bool brute_ok = n <= budget.max_bruteforce_items;
  if (brute_ok && (!dp_fits || (n < 40 && BigInt(1) << n <= BigInt(n + 1) * (*w64 + 1)))) {
    std::uint64_t best_mask = 0;
    bool found = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !found; ++mask) {
      BigInt p = 0, w = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) {
          p += inst.items[i].size;
          w += inst.items[i].weight;
        }
      if (p <= inst.capacity && w >= inst.demand) {
        found = true;
        best_mask = mask;
      }
    }
    if (!found) return no_verdict("bruteforce", std::uint64_t{1} << n);
    return yes_verdict(mask_to_subsequence(best_mask, n), "bruteforce", std::uint64_t{1} << n);
  }
  if (!dp_fits) throw ResourceError("knapsack: instance exceeds DP and brute-force budgets");

  // min total size reaching weight >= v (v capped at demand)
  const std::uint64_t W = *w64;
  const std::size_t cols = W + 1;
  std::vector<BigInt> best(cols, -1), next;
  std::vector<std::uint32_t> pred((n + 1) * cols, 0);
  std::vector<std::uint8_t> took((n + 1) * cols, 0);
  best[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    next = best;
    for (std::uint64_t v = 0; v < cols; ++v) pred[(i + 1) * cols + v] = static_cast<std::uint32_t>(v);
    const BigInt& p = inst.items[i].size;
    const BigInt capped = std::min<BigInt>(inst.items[i].weight, BigInt(W));
    const auto wi = static_cast<std::uint64_t>(capped);
    for (std::uint64_t v = 0; v < cols; ++v) {
      if (best[v] < 0) continue;
      const std::uint64_t to = std::min<std::uint64_t>(W, v + wi);
      const BigInt cand = best[v] + p;
      if (cand > inst.capacity) continue;
      if (next[to] < 0 || cand < next[to]) {
        next[to] = cand;
        pred[(i + 1) * cols + to] = static_cast<std::uint32_t>(v);
        took[(i + 1) * cols + to] = 1;
      }
    }
    best.swap(next);
  }
  const std::uint64_t cells = (n + 1) * cols;
  if (best[W] < 0) return no_verdict("dp", cells);
  Subsequence sol;
  std::uint64_t v = W;
  for (std::size_t i = n; i > 0; --i) {
    if (took[i * cols + v]) sol.indices.push_back(i - 1);
    v = pred[i * cols + v];
  }
  std::reverse(sol.indices.begin(), sol.indices.end());
  return yes_verdict(sol, "dp", cells);
}

namespace {

Verdict ilp_bruteforce(const IlpInstance& inst, const SolverBudget& budget) {
  const std::size_t n = inst.columns.size(), m = inst.rows();
  if (n > budget.max_bruteforce_items) throw ResourceError("ilp: instance exceeds DP and brute-force budgets");
  std::vector<std::int64_t> sum(m, 0);
  std::uint64_t mask = 0;
  auto hit = [&] { return sum == inst.rhs; };
  if (hit()) return yes_verdict(BinaryVector{std::vector<int>(n, 0)}, "bruteforce", std::uint64_t{1} << n);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= std::uint64_t{1} << bit;
    const int sign = (mask >> bit & 1U) ? 1 : -1;
    for (std::size_t j = 0; j < m; ++j) sum[j] += sign * inst.columns[bit][j];
    if (hit()) {
      BinaryVector x{std::vector<int>(n, 0)};
      for (std::size_t i = 0; i < n; ++i) x.x[i] = static_cast<int>(mask >> i & 1U);
      return yes_verdict(x, "bruteforce", std::uint64_t{1} << n);
    }
  }
  return no_verdict("bruteforce", std::uint64_t{1} << n);
}

// Ax = b over x in {0,1}^n via layered reachable partial sums, pruned by
// what the remaining columns can still contribute.
Verdict ilp_standard(const IlpInstance& inst, const SolverBudget& budget) {
  const std::size_t n = inst.columns.size(), m = inst.rows();
  using State = std::vector<std::int64_t>;
  std::vector<State> pos(n + 1, State(m, 0)), neg(n + 1, State(m, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = 0; j < m; ++j) {
      pos[i][j] = pos[i + 1][j] + std::max(0, inst.columns[i][j]);
      neg[i][j] = neg[i + 1][j] + std::min(0, inst.columns[i][j]);
    }
  }
  auto viable = [&](const State& s, std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t need = inst.rhs[j] - s[j];
      if (need < neg[i][j] || need > pos[i][j]) return false;
    }
    return true;
  };
  struct Node {
    State s;
    std::uint32_t parent;
    bool took;
  };
  std::vector<std::vector<Node>> layers(n + 1);
  std::uint64_t total = 0;
  const std::uint64_t row_cost = std::max<std::size_t>(m, 1);
  if (viable(State(m, 0), 0)) layers[0].push_back({State(m, 0), 0, false});
  for (std::size_t i = 0; i < n && !layers[i].empty(); ++i) {
    std::unordered_map<State, std::uint32_t, VecHash> index;
    auto& next = layers[i + 1];
    for (std::uint32_t k = 0; k < layers[i].size(); ++k) {
      const State& s = layers[i][k].s;
      for (int take = 0; take < 2; ++take) {
        State t = s;
        if (take)
          for (std::size_t j = 0; j < m; ++j) t[j] += inst.columns[i][j];
        if (!viable(t, i + 1)) continue;
        if (index.emplace(t, static_cast<std::uint32_t>(next.size())).second) {
          next.push_back({std::move(t), k, take == 1});
        }
      }
    }
    total += next.size();
    if (total * row_cost > budget.max_dp_cells) return ilp_bruteforce(inst, budget);
  }
  const std::uint64_t states = total + layers[0].size();
  // Only the target state survives pruning at layer n.
  if (layers[n].empty()) return no_verdict("dp", states);
  BinaryVector x{std::vector<int>(n, 0)};
  std::uint32_t k = 0;
  for (std::size_t i = n; i > 0; --i) {
    const Node& node = layers[i][k];
    x.x[i - 1] = node.took ? 1 : 0;
    k = node.parent;
  }
  return yes_verdict(x, "dp", states);
}

}  // namespace

Verdict solve_ilp(const IlpInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  if (inst.variant != IlpVariant::ZeroSumNontrivial) return ilp_standard(inst, budget);
  // Nontrivial zero sum: some i has x_i = 1, i.e. A^{-i} y = -A^i is feasible.
  const std::size_t n = inst.columns.size();
  std::uint64_t states = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IlpInstance sub;
    sub.variant = IlpVariant::Standard;
    for (std::size_t l = 0; l < n; ++l)
      if (l != i) sub.columns.push_back(inst.columns[l]);
    for (int a : inst.columns[i]) sub.rhs.push_back(-a);
    Verdict v = ilp_standard(sub, budget);
    states += v.telemetry.states;
    if (v.yes) {
      const auto& y = std::get<BinaryVector>(*v.solution).x;
      BinaryVector x{std::vector<int>(n, 0)};
      x.x[i] = 1;
      for (std::size_t l = 0, c = 0; l < n; ++l)
        if (l != i) x.x[l] = y[c++];
      return yes_verdict(x, "observation+" + v.telemetry.method, states);
    }
  }
  return no_verdict("observation", states);
}

namespace {

Verdict group_bruteforce(const GroupSubsetSumInstance& inst, const SolverBudget& budget) {
  const std::size_t n = inst.elements.size();
  if (n > budget.max_bruteforce_items) throw ResourceError("group subset sum: exceeds budgets");
  // DFS in index order so products are formed left to right.
  std::vector<GroupElement> prefix{group_identity(inst.group)};
  std::vector<std::size_t> chosen;
  std::uint64_t visited = 0;
  std::optional<Subsequence> found;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (found) return;
    ++visited;
    if (i == n) {
      if (prefix.back() == inst.target) found = Subsequence{chosen};
      return;
    }
    self(self, i + 1);
    prefix.push_back(group_multiply(inst.group, prefix.back(), inst.elements[i]));
    chosen.push_back(i);
    self(self, i + 1);
    chosen.pop_back();
    prefix.pop_back();
  };
  dfs(dfs, 0);
  if (!found) return no_verdict("bruteforce", visited);
  return yes_verdict(*found, "bruteforce", visited);
}

}  // namespace

Verdict solve_group_ss(const GroupSubsetSumInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.elements.size();
  struct Node {
    std::uint32_t element;  // position in pool
    std::uint32_t parent;
    bool took;
  };
  // Reachable products of index-ordered subsequences: s -> s ∘ g_i. Each distinct product is stored
  // once in `pool`; layers refer to it by position.
  std::vector<GroupElement> pool{group_identity(inst.group)};
  const auto hash = [&](std::uint32_t p) { return VecHash{}(pool[p]); };
  const auto eq = [&](std::uint32_t a, std::uint32_t b) { return pool[a] == pool[b]; };
  std::unordered_set<std::uint32_t, decltype(hash), decltype(eq)> interned(16, hash, eq);
  interned.insert(0);
  std::vector<std::uint32_t> stamp{0};  // last layer each pool entry was added to
  std::vector<std::vector<Node>> layers(n + 1);
  layers[0].push_back({0, 0, false});
  const std::uint64_t width = std::max<std::size_t>(inst.target.size(), 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto layer = static_cast<std::uint32_t>(i + 1);
    auto& next = layers[i + 1];
    next.reserve(2 * layers[i].size());
    auto add = [&](std::uint32_t e, std::uint32_t parent, bool took) {
      if (stamp[e] == layer) return;
      stamp[e] = layer;
      next.push_back({e, parent, took});
    };
    for (std::uint32_t k = 0; k < layers[i].size(); ++k) {
      const std::uint32_t cur = layers[i][k].element;
      add(cur, k, false);
      pool.push_back(group_multiply(inst.group, pool[cur], inst.elements[i]));
      const auto [it, fresh] = interned.insert(static_cast<std::uint32_t>(pool.size() - 1));
      if (fresh) stamp.push_back(0);
      else pool.pop_back();
      add(*it, k, true);
    }
    total += next.size();
    if (total * width > budget.max_dp_cells) return group_bruteforce(inst, budget);
  }
  std::optional<std::uint32_t> hit;
  for (std::uint32_t k = 0; k < layers[n].size() && !hit; ++k)
    if (pool[layers[n][k].element] == inst.target) hit = k;
  if (!hit) return no_verdict("dp", total);
  Subsequence sol;
  auto k = *hit;
  for (std::size_t i = n; i > 0; --i) {
    if (layers[i][k].took) sol.indices.push_back(i - 1);
    k = layers[i][k].parent;
  }
  std::reverse(sol.indices.begin(), sol.indices.end());
  return yes_verdict(sol, "dp", total);
}

Verdict solve_counter_machine(const CounterMachineInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.vectors.size(), l = inst.dimension;
  if (l > 64) throw ResourceError("counter machine: dimension above 64");
  std::vector<std::uint64_t> plus(n, 0), minus(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      if (inst.vectors[i][j] > 0) plus[i] |= std::uint64_t{1} << j;
      if (inst.vectors[i][j] < 0) minus[i] |= std::uint64_t{1} << j;
    }
  struct Node {
    std::uint64_t state;
    std::uint32_t parent;
    bool took;
  };
  std::vector<std::vector<Node>> layers(n + 1);
  layers[0].push_back({0, 0, false});
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    auto& next = layers[i + 1];
    auto push = [&](std::uint64_t s, std::uint32_t parent, bool took) {
      if (index.emplace(s, static_cast<std::uint32_t>(next.size())).second) next.push_back({s, parent, took});
    };
    for (std::uint32_t k = 0; k < layers[i].size(); ++k) {
      const std::uint64_t s = layers[i][k].state;
      if (inst.flags[i] == Flag::Optional) push(s, k, false);
      if ((s & plus[i]) == 0 && (s & minus[i]) == minus[i]) push((s | plus[i]) & ~minus[i], k, true);
    }
    total += next.size();
    if (total > budget.max_dp_cells) throw ResourceError("counter machine: state budget exceeded");
    if (next.empty()) break;
  }
  const auto& last = layers[n];
  auto it = std::find_if(last.begin(), last.end(), [](const Node& nd) { return nd.state == 0; });
  if (it == last.end()) return no_verdict("dp", total);
  Subsequence sol;
  auto k = static_cast<std::uint32_t>(it - last.begin());
  for (std::size_t i = n; i > 0; --i) {
    if (layers[i][k].took) sol.indices.push_back(i - 1);
    k = layers[i][k].parent;
  }
  std::reverse(sol.indices.begin(), sol.indices.end());
  return yes_verdict(sol, "dp", total);
}

namespace {

std::vector<std::vector<std::size_t>> adjacency(const Graph& g) {
  std::vector<std::vector<std::size_t>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// Backtracking over a connectivity-first vertex order. nullopt when the node budget runs out.
std::optional<Verdict> coloring_backtrack(const Graph& g, std::uint64_t node_budget) {
  const std::size_t n = g.vertex_count;
  const auto adj = adjacency(g);
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (pick == n || links[v] > links[pick] ||
          (links[v] == links[pick] && adj[v].size() > adj[pick].size()))
        pick = v;
    }
    placed[pick] = true;
    order.push_back(pick);
    for (std::size_t u : adj[pick]) ++links[u];
  }
  std::vector<int> color(n, -1);
  std::uint64_t nodes = 0;
  bool exhausted = false;
  auto dfs = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == n) return true;
    if (++nodes > node_budget) {
      exhausted = true;
      return false;
    }
    const std::size_t v = order[pos];
    // First vertex of each component only needs one color up to symmetry; keep it simple.
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (std::size_t u : adj[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, pos + 1)) return true;
      if (exhausted) return false;
      color[v] = -1;
    }
    return false;
  };
  const bool ok = dfs(dfs, 0);
  if (exhausted) return std::nullopt;
  if (!ok) return no_verdict("backtracking", nodes);
  return yes_verdict(ColorMap{color}, "backtracking", nodes);
}

Verdict coloring_bag_dp(const ColoringInstance& inst, const SolverBudget& budget) {
  const auto nice = make_nice(inst.graph, inst.bags);
  const std::size_t n = inst.graph.vertex_count;
  // State: color per vertex, 3 = not live.
  using State = std::vector<std::uint8_t>;
  struct Node {
    State s;
    std::uint32_t parent;
  };
  std::vector<std::vector<Node>> layers(nice.commands.size() + 1);
  layers[0].push_back({State(n, 3), 0});
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < nice.commands.size(); ++c) {
    const Command& cmd = nice.commands[c];
    std::unordered_map<State, std::uint32_t, VecHash> index;
    auto& next = layers[c + 1];
    auto push = [&](State s, std::uint32_t parent) {
      if (index.emplace(s, static_cast<std::uint32_t>(next.size())).second) next.push_back({std::move(s), parent});
    };
    for (std::uint32_t k = 0; k < layers[c].size(); ++k) {
      const State& s = layers[c][k].s;
      switch (cmd.type) {
        case Command::Type::Introduce:
          for (std::uint8_t col = 0; col < 3; ++col) {
            State t = s;
            t[cmd.u] = col;
            push(std::move(t), k);
          }
          break;
        case Command::Type::Edge:
          if (s[cmd.u] != s[cmd.v]) push(s, k);
          break;
        case Command::Type::Forget: {
          State t = s;
          t[cmd.u] = 3;
          push(std::move(t), k);
          break;
        }
      }
    }
    total += next.size();
    if (total * std::max<std::size_t>(n, 1) > budget.max_dp_cells)
      throw ResourceError("coloring: bag DP exceeds budget");
    if (next.empty()) return no_verdict("bag-dp", total);
  }
  ColorMap sol{std::vector<int>(n, 0)};
  std::uint32_t k = 0;
  for (std::size_t c = nice.commands.size(); c > 0; --c) {
    const Command& cmd = nice.commands[c - 1];
    const Node& node = layers[c][k];
    if (cmd.type == Command::Type::Introduce) sol.colors[cmd.u] = node.s[cmd.u];
    k = node.parent;
  }
  return yes_verdict(sol, "bag-dp", total);
}

}  // namespace

Verdict solve_coloring(const ColoringInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.graph.vertex_count;
  if (n <= 15) return *coloring_backtrack(inst.graph, UINT64_MAX);
  // Prefer the bag DP when its table is small; otherwise budgeted backtracking.
  BigInt cells = 0;
  for (const auto& bag : inst.bags) cells += pow_big(3, bag.size()) * n;
  if (cells <= budget.max_dp_cells) return coloring_bag_dp(inst, budget);
  if (auto v = coloring_backtrack(inst.graph, budget.max_search_nodes)) return *v;
  throw ResourceError("coloring: search budget exceeded");
}

namespace {

std::vector<std::size_t> due_order(const SchedulingInstance& inst) {
  std::vector<std::size_t> order(inst.jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inst.jobs[a].due < inst.jobs[b].due; });
  return order;
}

Schedule schedule_from_on_time(const SchedulingInstance& inst, const std::vector<bool>& on_time) {
  Schedule s;
  for (std::size_t j : due_order(inst))
    if (on_time[j]) s.order.push_back(j);
  for (std::size_t j = 0; j < inst.jobs.size(); ++j)
    if (!on_time[j]) s.order.push_back(j);
  return s;
}

BigInt total_weight(const SchedulingInstance& inst) {
  BigInt w = 0;
  for (const auto& j : inst.jobs) w += j.weight;
  return w;
}

}  // namespace

BigInt tardy_weight(const SchedulingInstance& inst, const std::vector<std::size_t>& order) {
  BigInt time = 0, tardy = 0;
  for (std::size_t j : order) {
    time += inst.jobs[j].processing;
    if (time > inst.jobs[j].due) tardy += inst.jobs[j].weight;
  }
  return tardy;
}

Verdict solve_scheduling_exhaustive(const SchedulingInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.jobs.size();
  if (n > budget.max_bruteforce_items) throw ResourceError("scheduling: too many jobs for exhaustive search");
  const auto order = due_order(inst);
  const BigInt total = total_weight(inst);
  std::vector<BigInt> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + inst.jobs[order[i]].weight;
  std::vector<bool> on_time(n, false);
  std::uint64_t nodes = 0;
  // Every on-time set is feasible iff its due-date order meets all due dates.
  auto dfs = [&](auto&& self, std::size_t i, const BigInt& time, const BigInt& kept) -> bool {
    ++nodes;
    if (total - kept - suffix[i] > inst.tardy_budget) return false;
    if (i == n) return true;
    const Job& job = inst.jobs[order[i]];
    if (time + job.processing <= job.due) {
      on_time[order[i]] = true;
      if (self(self, i + 1, time + job.processing, kept + job.weight)) return true;
      on_time[order[i]] = false;
    }
    return self(self, i + 1, time, kept);
  };
  if (!dfs(dfs, 0, BigInt(0), BigInt(0))) return no_verdict("exhaustive", nodes);
  return yes_verdict(schedule_from_on_time(inst, on_time), "exhaustive", nodes);
}

Verdict solve_scheduling_permutations(const SchedulingInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.jobs.size();
  if (n > budget.max_permutation_jobs) throw ResourceError("scheduling: too many jobs for permutation search");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::uint64_t count = 0;
  do {
    ++count;
    if (tardy_weight(inst, order) <= inst.tardy_budget) return yes_verdict(Schedule{order}, "permutations", count);
  } while (std::next_permutation(order.begin(), order.end()));
  return no_verdict("permutations", count);
}

Verdict solve_scheduling(const SchedulingInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.jobs.size();
  BigInt dmax = 0;
  for (const auto& j : inst.jobs) dmax = std::max(dmax, j.due);
  auto d64 = to_u64(dmax);
  if (!d64 || BigInt(n + 1) * (*d64 + 1) > budget.max_dp_cells) {
    if (n <= budget.max_bruteforce_items) return solve_scheduling_exhaustive(inst, budget);
    throw ResourceError("scheduling: exceeds DP and exhaustive budgets");
  }
  // Lawler-Moore: on-time jobs run in due-date order; f[t] = best on-time weight finishing at t.
  const std::uint64_t D = *d64;
  const auto order = due_order(inst);
  std::vector<BigInt> f(D + 1, -1);
  std::vector<std::uint8_t> keep(n * (D + 1), 0);
  f[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Job& job = inst.jobs[order[i]];
    if (job.processing > job.due) continue;
    const auto p = static_cast<std::uint64_t>(job.processing);
    const auto d = static_cast<std::uint64_t>(job.due);
    for (std::uint64_t t = d; t >= p; --t) {
      if (f[t - p] >= 0 && f[t - p] + job.weight > f[t]) {
        f[t] = f[t - p] + job.weight;
        keep[i * (D + 1) + t] = 1;
      }
      if (t == 0) break;
    }
  }
  std::uint64_t best_t = 0;
  for (std::uint64_t t = 0; t <= D; ++t)
    if (f[t] > f[best_t]) best_t = t;
  const std::uint64_t cells = n * (D + 1);
  if (total_weight(inst) - f[best_t] > inst.tardy_budget) return no_verdict("lawler-moore", cells);
  std::vector<bool> on_time(n, false);
  std::uint64_t t = best_t;
  for (std::size_t i = n; i-- > 0;) {
    if (keep[i * (D + 1) + t]) {
      on_time[order[i]] = true;
      t -= static_cast<std::uint64_t>(inst.jobs[order[i]].processing);
    }
  }
  return yes_verdict(schedule_from_on_time(inst, on_time), "lawler-moore", cells);
}

bool satisfies(const CnfInstance& f, const std::vector<bool>& values) {
  for (const auto& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const std::size_t var = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
      if (var < values.size() && values[var] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

Verdict solve_cnf(const CnfInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t k = inst.num_vars;
  if (k > budget.max_sat_vars || k > 63) throw ResourceError("cnf: too many variables");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
  for (const auto& clause : inst.clauses) {
    std::uint64_t pos = 0, neg = 0;
    for (int lit : clause) {
      const int var = (lit < 0 ? -lit : lit) - 1;
      (lit > 0 ? pos : neg) |= std::uint64_t{1} << var;
    }
    masks.emplace_back(pos, neg);
  }
  const std::uint64_t all = k == 0 ? 0 : (~std::uint64_t{0} >> (64 - k));
  for (std::uint64_t a = 0; a <= all; ++a) {
    bool ok = true;
    for (const auto& [pos, neg] : masks) {
      if (((a & pos) | (~a & neg)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment sol{std::vector<bool>(k)};
      for (std::size_t i = 0; i < k; ++i) sol.values[i] = a >> i & 1U;
      return yes_verdict(sol, "bruteforce", a + 1);
    }
    if (a == all) break;
  }
  return no_verdict("bruteforce", all + 1);
}

Verdict solve_and_sat(const AndSatInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  AssignmentList list;
  std::uint64_t states = 0;
  for (const auto& f : inst.formulas) {
    Verdict v = solve_cnf(f, budget);
    states += v.telemetry.states;
    if (!v.yes) return no_verdict("bruteforce", states);
    list.per_formula.push_back(std::get<Assignment>(*v.solution));
  }
  return yes_verdict(list, "bruteforce", states);
}

Verdict solve_unbounded_ss(const UnboundedSubsetSumInstance& inst, const SolverBudget& budget) {
  require_valid(inst);
  const std::size_t n = inst.items.size();
  if (inst.target == 0) return yes_verdict(Multiplicities{std::vector<BigInt>(n, 0)}, "trivial", 1);
  auto t64 = to_u64(inst.target);
  if (!t64 || *t64 + 1 > budget.max_dp_cells) throw ResourceError("unbounded subset sum: target exceeds DP budget");
  const std::uint64_t t = *t64;
  // via[s] = 1 + index of an item whose removal keeps s reachable; 0 = unreachable.
  std::vector<std::uint32_t> via(t + 1, 0);
  std::vector<bool> reach(t + 1, false);
  reach[0] = true;
  for (std::uint64_t s = 1; s <= t; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (inst.items[i] > s) continue;
      const auto p = static_cast<std::uint64_t>(inst.items[i]);
      if (reach[s - p]) {
        reach[s] = true;
        via[s] = static_cast<std::uint32_t>(i + 1);
        break;
      }
    }
  }
  if (!reach[t]) return no_verdict("dp", t + 1);
  Multiplicities m{std::vector<BigInt>(n, 0)};
  for (std::uint64_t s = t; s > 0;) {
    const std::size_t i = via[s] - 1;
    m.counts[i] += 1;
    s -= static_cast<std::uint64_t>(inst.items[i]);
  }
  return yes_verdict(m, "dp", t + 1);
}

Verdict solve(const ProblemInstance& inst, const SolverBudget& budget) {
  return std::visit(
      [&](const auto& x) -> Verdict {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SubsetSumInstance>) return solve_subset_sum(x, budget);
        else if constexpr (std::is_same_v<T, KnapsackInstance>) return solve_knapsack(x, budget);
        else if constexpr (std::is_same_v<T, IlpInstance>) return solve_ilp(x, budget);
        else if constexpr (std::is_same_v<T, GroupSubsetSumInstance>) return solve_group_ss(x, budget);
        else if constexpr (std::is_same_v<T, CounterMachineInstance>) return solve_counter_machine(x, budget);
        else if constexpr (std::is_same_v<T, ColoringInstance>) return solve_coloring(x, budget);
        else if constexpr (std::is_same_v<T, SchedulingInstance>) return solve_scheduling(x, budget);
        else if constexpr (std::is_same_v<T, CnfInstance>) return solve_cnf(x, budget);
        else if constexpr (std::is_same_v<T, AndSatInstance>) return solve_and_sat(x, budget);
        else return solve_unbounded_ss(x, budget);
      },
      inst);
}

namespace {

bool increasing_in_range(const std::vector<std::size_t>& idx, std::size_t n) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n) return false;
    if (i > 0 && idx[i] <= idx[i - 1]) return false;
  }
  return true;
}

}  // namespace

bool check_solution(const ProblemInstance& inst, const Solution& solution) {
  if (!validate(inst).empty()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SubsetSumInstance>) {
          const auto* s = std::get_if<Subsequence>(&solution);
          if (!s || !increasing_in_range(s->indices, x.items.size())) return false;
          BigInt sum = 0;
          for (auto i : s->indices) sum += x.items[i];
          return x.modulus ? sum % *x.modulus == x.target : sum == x.target;
        } else if constexpr (std::is_same_v<T, KnapsackInstance>) {
          const auto* s = std::get_if<Subsequence>(&solution);
          if (!s || !increasing_in_range(s->indices, x.items.size())) return false;
          BigInt p = 0, w = 0;
          for (auto i : s->indices) {
            p += x.items[i].size;
            w += x.items[i].weight;
          }
          return p <= x.capacity && w >= x.demand;
        } else if constexpr (std::is_same_v<T, IlpInstance>) {
          const auto* b = std::get_if<BinaryVector>(&solution);
          if (!b || b->x.size() != x.columns.size()) return false;
          std::vector<std::int64_t> sum(x.rows(), 0);
          bool nonzero = false;
          for (std::size_t i = 0; i < b->x.size(); ++i) {
            if (b->x[i] != 0 && b->x[i] != 1) return false;
            if (b->x[i] == 1) {
              nonzero = true;
              for (std::size_t j = 0; j < x.rows(); ++j) sum[j] += x.columns[i][j];
            }
          }
          if (x.variant == IlpVariant::ZeroSumNontrivial && !nonzero) return false;
          return sum == x.rhs;
        } else if constexpr (std::is_same_v<T, GroupSubsetSumInstance>) {
          const auto* s = std::get_if<Subsequence>(&solution);
          if (!s || !increasing_in_range(s->indices, x.elements.size())) return false;
          GroupElement acc = group_identity(x.group);
          for (auto i : s->indices) acc = group_multiply(x.group, acc, x.elements[i]);
          return acc == x.target;
        } else if constexpr (std::is_same_v<T, CounterMachineInstance>) {
          const auto* s = std::get_if<Subsequence>(&solution);
          if (!s || !increasing_in_range(s->indices, x.vectors.size())) return false;
          std::vector<bool> picked(x.vectors.size(), false);
          for (auto i : s->indices) picked[i] = true;
          for (std::size_t i = 0; i < x.vectors.size(); ++i)
            if (x.flags[i] == Flag::Required && !picked[i]) return false;
          std::vector<int> counter(x.dimension, 0);
          for (auto i : s->indices) {
            for (std::size_t j = 0; j < x.dimension; ++j) {
              counter[j] += x.vectors[i][j];
              if (counter[j] < 0 || counter[j] > 1) return false;
            }
          }
          return std::all_of(counter.begin(), counter.end(), [](int c) { return c == 0; });
        } else if constexpr (std::is_same_v<T, ColoringInstance>) {
          const auto* c = std::get_if<ColorMap>(&solution);
          if (!c || c->colors.size() != x.graph.vertex_count) return false;
          for (int col : c->colors)
            if (col < 0 || col > 2) return false;
          for (const auto& [u, v] : x.graph.edges)
            if (c->colors[u] == c->colors[v]) return false;
          return true;
        } else if constexpr (std::is_same_v<T, SchedulingInstance>) {
          const auto* s = std::get_if<Schedule>(&solution);
          if (!s || s->order.size() != x.jobs.size()) return false;
          std::vector<bool> seen(x.jobs.size(), false);
          for (auto j : s->order) {
            if (j >= x.jobs.size() || seen[j]) return false;
            seen[j] = true;
          }
          return tardy_weight(x, s->order) <= x.tardy_budget;
        } else if constexpr (std::is_same_v<T, CnfInstance>) {
          const auto* a = std::get_if<Assignment>(&solution);
          return a && a->values.size() == x.num_vars && satisfies(x, a->values);
        } else if constexpr (std::is_same_v<T, AndSatInstance>) {
          const auto* a = std::get_if<AssignmentList>(&solution);
          if (!a || a->per_formula.size() != x.formulas.size()) return false;
          for (std::size_t i = 0; i < x.formulas.size(); ++i) {
            const auto& vals = a->per_formula[i].values;
            if (vals.size() != x.formulas[i].num_vars || !satisfies(x.formulas[i], vals)) return false;
          }
          return true;
        } else {
          const auto* m = std::get_if<Multiplicities>(&solution);
          if (!m || m->counts.size() != x.items.size()) return false;
          BigInt sum = 0;
          for (std::size_t i = 0; i < x.items.size(); ++i) {
            if (m->counts[i] < 0) return false;
            sum += m->counts[i] * x.items[i];
          }
          return sum == x.target;
        }
      },
      inst);
}

}  // namespace certkit
