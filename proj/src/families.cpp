#include "certkit/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace certkit {

namespace {

// Every nondecreasing sequence over [0, alphabet) of length 0..n_max.
void for_each_multiset(std::size_t alphabet, std::size_t n_max, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    f(cur);
    if (cur.size() == n_max) return;
    for (std::size_t a = from; a < alphabet; ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(0);
}

// Every sequence over [0, alphabet) of length 0..n_max.
void for_each_sequence(std::size_t alphabet, std::size_t n_max, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> cur;
  std::function<void()> rec = [&] {
    f(cur);
    if (cur.size() == n_max) return;
    for (std::size_t a = 0; a < alphabet; ++a) {
      cur.push_back(a);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

// All vectors of {lo..hi}^m in lexicographic order.
std::vector<std::vector<int>> all_vectors(std::size_t m, int lo, int hi) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& v : out)
      for (int x = lo; x <= hi; ++x) {
        auto w = v;
        w.push_back(x);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<ProblemInstance> ss_grid(std::size_t n_max, std::uint64_t item_max, std::uint64_t target_max) {
  std::vector<ProblemInstance> out;
  for_each_multiset(item_max + 1, n_max, [&](const std::vector<std::size_t>& ms) {
    std::vector<BigInt> items(ms.begin(), ms.end());
    for (std::uint64_t t = 0; t <= target_max; ++t) out.push_back(SubsetSumInstance{items, t, std::nullopt});
  });
  return out;
}

std::vector<ProblemInstance> knapsack_grid(std::size_t n_max, std::uint64_t value_max) {
  std::vector<ProblemInstance> out;
  const std::size_t v = value_max;
  for_each_multiset(v * v, n_max, [&](const std::vector<std::size_t>& ms) {
    std::vector<KnapsackItem> items;
    for (auto code : ms) items.push_back({code / v + 1, code % v + 1});
    for (std::uint64_t t = 0; t <= value_max; ++t)
      for (std::uint64_t w = 0; w <= value_max; ++w) out.push_back(KnapsackInstance{items, t, w});
  });
  return out;
}

std::vector<ProblemInstance> ilp_grid(std::size_t m_max, std::size_t n_max, IlpVariant variant) {
  std::vector<ProblemInstance> out;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto cols = all_vectors(m, variant == IlpVariant::Monotone ? 0 : -1, 1);
    for_each_multiset(cols.size(), n_max, [&](const std::vector<std::size_t>& ms) {
      std::vector<std::vector<int>> columns;
      for (auto c : ms) columns.push_back(cols[c]);
      const int n = static_cast<int>(ms.size());
      std::vector<std::vector<int>> rhs_set;
      switch (variant) {
        case IlpVariant::Standard: rhs_set = all_vectors(m, -(n + 1), n + 1); break;
        case IlpVariant::Monotone: rhs_set = all_vectors(m, -1, n + 1); break;
        case IlpVariant::ZeroSumNontrivial: rhs_set = {std::vector<int>(m, 0)}; break;
      }
      for (const auto& b : rhs_set)
        out.push_back(IlpInstance{columns, std::vector<std::int64_t>(b.begin(), b.end()), variant});
    });
  }
  return out;
}

std::vector<ProblemInstance> zq_grid(std::uint64_t q_max, std::size_t n_max) {
  std::vector<ProblemInstance> out;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    for_each_multiset(q, n_max, [&](const std::vector<std::size_t>& ms) {
      std::vector<BigInt> items(ms.begin(), ms.end());
      for (std::uint64_t t = 0; t < q; ++t) out.push_back(SubsetSumInstance{items, t, BigInt(q)});
    });
  }
  return out;
}

std::vector<ProblemInstance> cm_grid(std::size_t l_max, std::size_t n_max) {
  std::vector<ProblemInstance> out;
  for (std::size_t l = 1; l <= l_max; ++l) {
    const auto vecs = all_vectors(l, -1, 1);
    for_each_sequence(2 * vecs.size(), n_max, [&](const std::vector<std::size_t>& seq) {
      CounterMachineInstance cm{l, {}, {}};
      for (auto code : seq) {
        cm.vectors.push_back(vecs[code / 2]);
        cm.flags.push_back(code % 2 ? Flag::Required : Flag::Optional);
      }
      out.push_back(std::move(cm));
    });
  }
  return out;
}

std::vector<ProblemInstance> zkk_grid(std::uint32_t k, std::size_t n_max) {
  std::vector<GroupElement> elems;
  std::size_t G = 1;
  for (std::uint32_t i = 0; i < k; ++i) G *= k;
  for (std::size_t code = 0; code < G; ++code) {
    GroupElement e(k);
    std::size_t c = code;
    for (auto& x : e) {
      x = c % k;
      c /= k;
    }
    elems.push_back(std::move(e));
  }
  std::vector<ProblemInstance> out;
  for_each_multiset(G, n_max, [&](const std::vector<std::size_t>& ms) {
    std::vector<GroupElement> picked;
    for (auto c : ms) picked.push_back(elems[c]);
    for (const auto& t : elems) out.push_back(GroupSubsetSumInstance{ProductGroup{k}, picked, t});
  });
  return out;
}

std::vector<ProblemInstance> unbounded_grid(std::size_t n_max, std::uint64_t item_max, std::uint64_t target_max) {
  std::vector<ProblemInstance> out;
  for_each_multiset(item_max, n_max, [&](const std::vector<std::size_t>& ms) {
    std::vector<BigInt> items;
    for (auto v : ms) items.push_back(BigInt(v) + 1);
    for (std::uint64_t t = 0; t <= target_max; ++t) out.push_back(UnboundedSubsetSumInstance{items, t});
  });
  return out;
}

std::vector<ProblemInstance> random_ss(std::size_t count, std::size_t n_max, std::uint64_t value_max,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, n_max);
  std::uniform_int_distribution<std::uint64_t> val(0, value_max);
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    SubsetSumInstance s;
    s.items.resize(len(rng));
    for (auto& p : s.items) p = val(rng);
    s.target = val(rng);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ProblemInstance> random_cm(std::size_t count, std::size_t l, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-1, 1), flag(0, 1);
  std::vector<ProblemInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    CounterMachineInstance cm{l, {}, {}};
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<int> v(l);
      for (auto& x : v) x = entry(rng);
      cm.vectors.push_back(std::move(v));
      cm.flags.push_back(flag(rng) ? Flag::Required : Flag::Optional);
    }
    out.push_back(std::move(cm));
  }
  return out;
}

std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (pairs.size() > 20) throw std::invalid_argument("all_graphs: too many vertices");
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g{n, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1U) g.edges.push_back(pairs[i]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Bag> canonical_decomposition(const Graph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::size_t> last_nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v) last_nbr[v] = v;
  for (const auto& [u, v] : g.edges) {
    last_nbr[u] = std::max(last_nbr[u], v);
    last_nbr[v] = std::max(last_nbr[v], u);
  }
  std::vector<Bag> bags;
  for (std::size_t i = 0; i < n; ++i) {
    Bag b;
    for (std::size_t u = 0; u < i; ++u)
      if (last_nbr[u] >= i) b.push_back(u);
    b.push_back(i);
    bags.push_back(std::move(b));
  }
  std::vector<Bag> kept;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    const bool covered = i + 1 < bags.size() && std::includes(bags[i + 1].begin(), bags[i + 1].end(),
                                                             bags[i].begin(), bags[i].end());
    if (!covered) kept.push_back(bags[i]);
  }
  return kept;
}

ColoringInstance with_canonical_decomposition(const Graph& g) { return {g, canonical_decomposition(g)}; }

ColoringInstance named_graph(const std::string& name) {
  auto arg = [&](const std::string& prefix) -> std::size_t {
    const std::string rest = name.substr(prefix.size());
    std::size_t pos = 0;
    const unsigned long v = std::stoul(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument("bad graph size in '" + name + "'");
    return v;
  };
  Graph g;
  auto path = [](std::size_t n) {
    Graph p{n, {}};
    for (std::size_t v = 0; v + 1 < n; ++v) p.edges.emplace_back(v, v + 1);
    return p;
  };
  auto cycle = [&](std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph c = path(n);
    c.edges.emplace_back(0, n - 1);
    return c;
  };
  if (name == "k3") g = complete_graph(3);
  else if (name == "k4") g = complete_graph(4);
  else if (name == "c5") g = cycle(5);
  else if (name == "p4") g = path(4);
  else if (name.rfind("path:", 0) == 0) g = path(arg("path:"));
  else if (name.rfind("cycle:", 0) == 0) g = cycle(arg("cycle:"));
  else if (name.rfind("complete:", 0) == 0) g = complete_graph(arg("complete:"));
  else if (name.rfind("star:", 0) == 0) {
    const std::size_t n = arg("star:");
    g = Graph{n, {}};
    for (std::size_t v = 1; v < n; ++v) g.edges.emplace_back(0, v);
  } else {
    throw std::invalid_argument("unknown graph '" + name + "'");
  }
  return with_canonical_decomposition(g);
}

std::vector<ProblemInstance> parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  std::map<std::string, std::string> kv;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    for (std::string part; std::getline(ss, part, ',');) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("family option '" + part + "' is not key=value");
      kv[part.substr(0, eq)] = part.substr(eq + 1);
    }
  }
  auto num = [&](const std::string& key, std::uint64_t fallback) -> std::uint64_t {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::size_t pos = 0;
    const auto v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("family option " + key + " is not a number");
    kv.erase(it);
    return v;
  };
  auto str = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  std::vector<ProblemInstance> out;
  if (family == "ss-grid") {
    const auto n = num("n", 3), mx = num("max", 4), t = num("t", 10);
    out = ss_grid(n, mx, t);
  } else if (family == "knapsack-grid") {
    const auto n = num("n", 2), mx = num("max", 3);
    out = knapsack_grid(n, mx);
  } else if (family == "ilp-grid") {
    const auto m = num("m", 1), n = num("n", 3);
    const auto variant = str("variant", "standard");
    IlpVariant v;
    if (variant == "standard") v = IlpVariant::Standard;
    else if (variant == "monotone") v = IlpVariant::Monotone;
    else if (variant == "zero_sum") v = IlpVariant::ZeroSumNontrivial;
    else throw std::invalid_argument("unknown ilp variant '" + variant + "'");
    out = ilp_grid(m, n, v);
  } else if (family == "zq-grid") {
    const auto q = num("q", 5), n = num("n", 3);
    out = zq_grid(q, n);
  } else if (family == "cm-grid") {
    const auto l = num("l", 1), n = num("n", 3);
    out = cm_grid(l, n);
  } else if (family == "zkk-grid") {
    const auto k = num("k", 2), n = num("n", 3);
    out = zkk_grid(static_cast<std::uint32_t>(k), n);
  } else if (family == "unbounded-grid") {
    const auto n = num("n", 2), mx = num("max", 5), t = num("t", 10);
    out = unbounded_grid(n, mx, t);
  } else if (family == "random-ss") {
    const auto count = num("count", 100), n = num("n", 6), mx = num("max", 30), seed = num("seed", 1);
    out = random_ss(count, n, mx, seed);
  } else if (family == "random-cm") {
    const auto count = num("count", 100), l = num("l", 2), n = num("n", 5), seed = num("seed", 1);
    out = random_cm(count, l, n, seed);
  } else if (family == "graphs") {
    const auto n_max = num("n", 4);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (const auto& g : all_graphs(n)) out.push_back(with_canonical_decomposition(g));
  } else if (family == "graph") {
    out.push_back(named_graph(str("name", "k3")));
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  if (!kv.empty()) throw std::invalid_argument("unknown family option '" + kv.begin()->first + "'");
  return out;
}

}  // namespace certkit
