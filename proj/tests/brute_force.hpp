#pragma once

// Deliberately naive reference oracles for tests. They share nothing with the library's
// solvers beyond the instance structs: plain enumeration, no pruning, no DP.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "certkit/instances.hpp"

namespace bf {

using certkit::BigInt;

inline bool subset_sum(const std::vector<BigInt>& items, const BigInt& t, const BigInt* q = nullptr) {
  const std::size_t n = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s += items[i];
    if (q) s %= *q;
    if (s == t) return true;
  }
  return false;
}

inline bool subset_sum(const certkit::SubsetSumInstance& in) {
  return subset_sum(in.items, in.target, in.modulus ? &*in.modulus : nullptr);
}

inline bool knapsack(const certkit::KnapsackInstance& in) {
  const std::size_t n = in.items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    BigInt p = 0, w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) {
        p += in.items[i].size;
        w += in.items[i].weight;
      }
    if (p <= in.capacity && w >= in.demand) return true;
  }
  return false;
}

inline bool ilp(const certkit::IlpInstance& in) {
  const std::size_t n = in.columns.size(), m = in.rows();
  const bool nontrivial = in.variant == certkit::IlpVariant::ZeroSumNontrivial;
  for (std::uint64_t mask = nontrivial ? 1 : 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) s += in.columns[i][j];
      ok = s == in.rhs[j];
    }
    if (ok) return true;
  }
  return false;
}

// Group product written out per group, left to right in index order.
inline certkit::GroupElement mul(const certkit::GroupKind& g, const certkit::GroupElement& a,
                                 const certkit::GroupElement& b) {
  certkit::GroupElement r(a.size());
  if (auto c = std::get_if<certkit::CyclicGroup>(&g)) {
    r[0] = (a[0] + b[0]) % c->order;
  } else if (auto p = std::get_if<certkit::ProductGroup>(&g)) {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p->k;
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];  // (a ∘ b)(i) = a(b(i))
  }
  return r;
}

inline certkit::GroupElement identity(const certkit::GroupKind& g) {
  if (std::get_if<certkit::CyclicGroup>(&g)) return {0};
  if (auto p = std::get_if<certkit::ProductGroup>(&g)) return certkit::GroupElement(p->k, 0);
  certkit::GroupElement e(std::get<certkit::SymmetricGroup>(g).degree);
  std::iota(e.begin(), e.end(), 0);
  return e;
}

inline bool group_ss(const certkit::GroupSubsetSumInstance& in) {
  const std::size_t n = in.elements.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto acc = identity(in.group);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) acc = mul(in.group, acc, in.elements[i]);
    if (acc == in.target) return true;
  }
  return false;
}

inline bool is_run(const std::vector<std::vector<int>>& seq, std::size_t l) {
  std::vector<int> s(l, 0);
  for (const auto& v : seq)
    for (std::size_t j = 0; j < l; ++j) {
      s[j] += v[j];
      if (s[j] != 0 && s[j] != 1) return false;
    }
  return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
}

inline bool counter_machine(const certkit::CounterMachineInstance& in) {
  const std::size_t n = in.vectors.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::vector<int>> seq;
    bool restricted = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) seq.push_back(in.vectors[i]);
      else if (in.flags[i] == certkit::Flag::Required) restricted = false;
    }
    if (restricted && is_run(seq, in.dimension)) return true;
  }
  return false;
}

inline bool three_colorable(const certkit::Graph& g) {
  const std::size_t n = g.vertex_count;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  std::vector<int> c(n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (auto& v : c) {
      v = static_cast<int>(x % 3);
      x /= 3;
    }
    if (std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) { return c[e.first] != c[e.second]; }))
      return true;
  }
  return false;
}

inline bool scheduling(const certkit::SchedulingInstance& in) {
  std::vector<std::size_t> order(in.jobs.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    BigInt time = 0, tardy = 0;
    for (auto j : order) {
      time += in.jobs[j].processing;
      if (time > in.jobs[j].due) tardy += in.jobs[j].weight;
    }
    if (tardy <= in.tardy_budget) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

inline bool cnf(const certkit::CnfInstance& f) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << f.num_vars); ++a) {
    bool all = true;
    for (const auto& cl : f.clauses) {
      bool sat = false;
      for (int lit : cl) {
        const bool val = a >> (std::abs(lit) - 1) & 1U;
        sat |= lit > 0 ? val : !val;
      }
      all &= sat;
    }
    if (all) return true;
  }
  return false;
}

inline bool and_sat(const certkit::AndSatInstance& a) {
  return std::all_of(a.formulas.begin(), a.formulas.end(), [](const auto& f) { return cnf(f); });
}

// Reachability table up to t, built by repeated addition.
inline bool unbounded_ss(const certkit::UnboundedSubsetSumInstance& in) {
  const auto t = static_cast<std::size_t>(in.target);
  std::vector<bool> reach(t + 1, false);
  reach[0] = true;
  for (std::size_t s = 0; s <= t; ++s) {
    if (!reach[s]) continue;
    for (const auto& p : in.items) {
      if (p == 0) continue;
      const auto next = s + static_cast<std::size_t>(p);
      if (next <= t) reach[next] = true;
    }
  }
  return reach[t];
}

inline bool solve(const certkit::ProblemInstance& inst) {
  return std::visit(
      [](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, certkit::SubsetSumInstance>) return subset_sum(x);
        else if constexpr (std::is_same_v<T, certkit::KnapsackInstance>) return knapsack(x);
        else if constexpr (std::is_same_v<T, certkit::IlpInstance>) return ilp(x);
        else if constexpr (std::is_same_v<T, certkit::GroupSubsetSumInstance>) return group_ss(x);
        else if constexpr (std::is_same_v<T, certkit::CounterMachineInstance>) return counter_machine(x);
        else if constexpr (std::is_same_v<T, certkit::ColoringInstance>) return three_colorable(x.graph);
        else if constexpr (std::is_same_v<T, certkit::SchedulingInstance>) return scheduling(x);
        else if constexpr (std::is_same_v<T, certkit::CnfInstance>) return cnf(x);
        else if constexpr (std::is_same_v<T, certkit::AndSatInstance>) return and_sat(x);
        else return unbounded_ss(x);
      },
      inst);
}

}  // namespace bf
