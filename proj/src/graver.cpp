#include "certkit/graver.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "certkit/errors.hpp"

namespace certkit {

std::vector<std::vector<int>> binary_counter_candidate(std::size_t k) {
  std::vector<std::vector<int>> seq;
  const std::uint64_t top = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t i = 0; i < top; ++i) {
    std::vector<int> v(k);
    for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<int>((i + 1) >> j & 1U) - static_cast<int>(i >> j & 1U);
    seq.push_back(std::move(v));
  }
  seq.emplace_back(k, -1);
  return seq;
}

bool graver_basic_properties(const std::vector<std::vector<int>>& seq, std::size_t k) {
  std::vector<long> sum(k, 0);
  for (const auto& v : seq) {
    if (v.size() != k) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (v[j] < -1 || v[j] > 1) return false;
      sum[j] += v[j];
    }
  }
  for (long s : sum)
    if (s != 0) return false;
  return !seq.empty();
}

bool graver_minimal_exhaustive(const std::vector<std::vector<int>>& seq) {
  const std::size_t n = seq.size();
  if (n > 24) throw std::invalid_argument("graver_minimal_exhaustive: sequence too long");
  if (n == 0) return true;
  const std::size_t k = seq[0].size();
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<long> sum(k, 0);
  std::uint64_t mask = 0;
  for (std::uint64_t step = 1; step <= full; ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= std::uint64_t{1} << bit;
    const int sign = (mask >> bit & 1U) ? 1 : -1;
    bool zero = true;
    for (std::size_t j = 0; j < k; ++j) {
      sum[j] += sign * seq[bit][j];
      if (sum[j] != 0) zero = false;
    }
    if (zero && mask != 0 && mask != full) return false;
  }
  return true;
}

bool graver_minimal_sampled(const std::vector<std::vector<int>>& seq, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = seq.size();
  if (n == 0) return true;
  const std::size_t k = seq[0].size();
  // Windows: P_a == P_b for a < b, (a, b) != (0, n) gives a zero-sum window.
  std::vector<std::vector<long>> prefix(n + 1, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) prefix[i + 1][j] = prefix[i][j] + seq[i][j];
  std::set<std::vector<long>> head(prefix.begin(), prefix.end() - 1), tail(prefix.begin() + 1, prefix.end());
  if (head.size() != n || tail.size() != n) return false;

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<long> sum(k, 0);
    std::size_t picked = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!coin(rng)) continue;
      ++picked;
      for (std::size_t j = 0; j < k; ++j) sum[j] += seq[i][j];
    }
    if (picked == 0 || picked == n) continue;
    bool zero = true;
    for (long x : sum)
      if (x != 0) zero = false;
    if (zero) return false;
  }
  return true;
}

namespace {

using Vec = std::vector<int>;

struct Search {
  std::size_t k, length;
  std::uint64_t budget, nodes = 0;
  std::vector<Vec> alphabet;  // nonzero vectors of {-1,0,1}^k
  std::vector<Vec> chosen;

  // counts[s] = number of nonempty subsets of the prefix summing to s
  bool dfs(const std::map<Vec, std::uint64_t>& counts, const Vec& total) {
    if (++nodes > budget) return false;
    if (chosen.size() + 1 == length) {
      Vec last(k);
      for (std::size_t j = 0; j < k; ++j) {
        last[j] = -total[j];
        if (last[j] < -1 || last[j] > 1) return false;
      }
      bool nonzero = false;
      for (int x : last) nonzero |= x != 0;
      if (!nonzero) return false;
      auto it = counts.find(total);
      if (it == counts.end() || it->second != 1) return false;
      chosen.push_back(last);
      return true;
    }
    for (const Vec& v : alphabet) {
      Vec neg(k);
      for (std::size_t j = 0; j < k; ++j) neg[j] = -v[j];
      if (counts.count(neg)) continue;
      std::map<Vec, std::uint64_t> next = counts;
      for (const auto& [s, c] : counts) {
        Vec t = s;
        for (std::size_t j = 0; j < k; ++j) t[j] += v[j];
        next[t] += c;
      }
      next[v] += 1;
      Vec t = total;
      for (std::size_t j = 0; j < k; ++j) t[j] += v[j];
      chosen.push_back(v);
      if (dfs(next, t)) return true;
      chosen.pop_back();
      if (nodes > budget) return false;
    }
    return false;
  }
};

bool validated(const std::vector<Vec>& seq, std::size_t k, ValidationLevel& level) {
  if (!graver_basic_properties(seq, k)) return false;
  if (seq.size() <= 16) {
    level = ValidationLevel::Exhaustive;
    return graver_minimal_exhaustive(seq);
  }
  level = ValidationLevel::Sampled;
  return graver_minimal_sampled(seq, 20000, 0x5eed + k);
}

}  // namespace

namespace detail {

GraverSequence validate_or_search(std::size_t k, std::vector<std::vector<int>> candidate, std::uint64_t node_budget) {
  GraverSequence g;
  g.k = k;
  if (validated(candidate, k, g.level)) {
    g.vectors = std::move(candidate);
    return g;
  }
  const std::size_t length = std::size_t{1} << k;
  Search s{k, length, node_budget, 0, {}, {}};
  for (int code = 0; code < 1 << (2 * static_cast<int>(k)); ++code) {
    Vec v(k);
    bool ok = true;
    for (std::size_t j = 0; j < k; ++j) {
      const int d = (code >> (2 * j)) & 3;
      if (d == 3) ok = false;
      v[j] = d - 1;
    }
    bool nonzero = false;
    for (int x : v) nonzero |= x != 0;
    if (ok && nonzero) s.alphabet.push_back(v);
  }
  if (length >= 2 && s.dfs({}, Vec(k, 0)) && validated(s.chosen, k, g.level)) {
    g.vectors = std::move(s.chosen);
    g.from_fallback = true;
    return g;
  }
  throw ConstructionError("graver_sequence: candidate failed validation and fallback search found nothing for k=" +
                          std::to_string(k));
}

}  // namespace detail

GraverSequence graver_sequence(std::size_t k) {
  if (k < 1 || k > 16) throw std::invalid_argument("graver_sequence: k must lie in [1, 16]");
  return detail::validate_or_search(k, binary_counter_candidate(k), 1'000'000);
}

}  // namespace certkit
