#include "certkit/path_decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "certkit/errors.hpp"

namespace certkit {

std::vector<std::string> decomposition_violations(const Graph& graph, const std::vector<Bag>& bags) {
  std::vector<std::string> out;
  const std::size_t n = graph.vertex_count;
  for (const auto& [u, v] : graph.edges) {
    if (u >= n || v >= n) {
      out.push_back("edge endpoint out of range");
      return out;
    }
    if (u == v) out.push_back("self-loop");
  }
  {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : graph.edges) {
      if (u > v) std::swap(u, v);
      if (!seen.insert({u, v}).second) {
        out.push_back("duplicate edge");
        break;
      }
    }
  }
  std::vector<std::size_t> first(n, bags.size()), last(n, 0), count(n, 0);
  for (std::size_t b = 0; b < bags.size(); ++b) {
    std::set<std::size_t> members;
    for (std::size_t v : bags[b]) {
      if (v >= n) {
        out.push_back("bag vertex out of range");
        return out;
      }
      if (!members.insert(v).second) out.push_back("duplicate vertex in bag");
      if (first[v] == bags.size()) first[v] = b;
      last[v] = b;
      ++count[v];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (count[v] == 0) {
      out.push_back("vertex uncovered");
    } else if (last[v] - first[v] + 1 != count[v]) {
      out.push_back("vertex bag interval not contiguous");
    }
  }
  for (const auto& [u, v] : graph.edges) {
    const bool covered = std::any_of(bags.begin(), bags.end(), [&](const Bag& bag) {
      return std::find(bag.begin(), bag.end(), u) != bag.end() &&
             std::find(bag.begin(), bag.end(), v) != bag.end();
    });
    if (!covered) out.push_back("edge uncovered");
  }
  return out;
}

std::size_t decomposition_width(const std::vector<Bag>& bags) {
  std::size_t w = 0;
  for (const auto& bag : bags) w = std::max(w, bag.size());
  return w == 0 ? 0 : w - 1;
}

NiceDecomposition make_nice(const Graph& graph, const std::vector<Bag>& bags) {
  if (auto v = decomposition_violations(graph, bags); !v.empty()) {
    throw ValidationError("path decomposition", v);
  }
  const std::size_t n = graph.vertex_count;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : graph.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  NiceDecomposition nice;
  nice.width = decomposition_width(bags);
  std::vector<std::size_t> live;  // in introduction order
  std::vector<bool> present(n, false);
  std::set<std::pair<std::size_t, std::size_t>> emitted;
  nice.bags.push_back({});

  auto snapshot = [&] {
    Bag b = live;
    std::sort(b.begin(), b.end());
    nice.bags.push_back(std::move(b));
  };
  auto forget = [&](std::size_t v) {
    nice.commands.push_back({Command::Type::Forget, v, 0});
    present[v] = false;
    live.erase(std::find(live.begin(), live.end(), v));
    snapshot();
  };

  for (const auto& bag : bags) {
    std::vector<bool> in_bag(n, false);
    for (std::size_t v : bag) in_bag[v] = true;
    std::vector<std::size_t> leaving;
    for (auto it = live.rbegin(); it != live.rend(); ++it)
      if (!in_bag[*it]) leaving.push_back(*it);
    for (std::size_t v : leaving) forget(v);
    Bag fresh;
    for (std::size_t v : bag)
      if (!present[v]) fresh.push_back(v);
    std::sort(fresh.begin(), fresh.end());
    for (std::size_t v : fresh) {
      nice.commands.push_back({Command::Type::Introduce, v, 0});
      present[v] = true;
      live.push_back(v);
      snapshot();
      std::vector<std::size_t> nbrs = adj[v];
      std::sort(nbrs.begin(), nbrs.end());
      for (std::size_t u : nbrs) {
        if (!present[u] || u == v) continue;
        auto key = std::minmax(u, v);
        if (emitted.insert({key.first, key.second}).second) {
          nice.commands.push_back({Command::Type::Edge, u, v});
        }
      }
    }
  }
  while (!live.empty()) forget(live.back());
  return nice;
}

std::vector<std::size_t> greedy_labels(const std::vector<Command>& commands,
                                       std::size_t vertex_count, std::size_t width) {
  std::vector<std::size_t> label(vertex_count, 0);
  std::vector<bool> used(width + 2, false);
  for (const auto& c : commands) {
    if (c.type == Command::Type::Introduce) {
      std::size_t pick = 0;
      for (std::size_t l = 1; l <= width + 1; ++l) {
        if (!used[l]) {
          pick = l;
          break;
        }
      }
      if (pick == 0) throw std::logic_error("greedy_labels: width bound exceeded");
      label[c.u] = pick;
      used[pick] = true;
    } else if (c.type == Command::Type::Forget) {
      used[label[c.u]] = false;
    }
  }
  return label;
}

}  // namespace certkit
