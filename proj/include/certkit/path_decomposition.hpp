#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "certkit/instances.hpp"

namespace certkit {

struct Command {
  enum class Type { Introduce, Forget, Edge };
  Type type = Type::Introduce;
  std::size_t u = 0;
  std::size_t v = 0;  // only meaningful for Edge

  bool operator==(const Command&) const = default;
};

struct NiceDecomposition {
  std::vector<Bag> bags;  // consecutive bags differ by exactly one vertex
  std::vector<Command> commands;
  std::size_t width = 0;
};

// Checks the three path-decomposition axioms; empty iff valid.
std::vector<std::string> decomposition_violations(const Graph& graph, const std::vector<Bag>& bags);

// Max bag size minus one; 0 for no bags.
std::size_t decomposition_width(const std::vector<Bag>& bags);

NiceDecomposition make_nice(const Graph& graph, const std::vector<Bag>& bags);

// label[v] in [1, width+1]; vertices sharing a bag get distinct labels.
std::vector<std::size_t> greedy_labels(const std::vector<Command>& commands,
                                       std::size_t vertex_count, std::size_t width);

}  // namespace certkit
