#include "certkit/registry.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "certkit/numeric_reductions.hpp"
#include "certkit/pathwidth_reductions.hpp"
#include "certkit/sat_reductions.hpp"

namespace certkit {

namespace {

const std::map<std::string, std::function<Reduction()>>& table() {
  static const std::map<std::string, std::function<Reduction()>> t = {
      {"ss-to-knapsack", ss_to_knapsack},
      {"knapsack-to-ss", knapsack_to_ss},
      {"ss-to-monotone", ss_to_monotone},
      {"monotone-to-ss", monotone_to_ss},
      {"monotone-to-zerosum", monotone_to_zerosum},
      {"zerosum-to-ilp", zerosum_to_ilp},
      {"ilp-to-monotone", ilp_to_monotone},
      {"ss-to-zq", ss_to_zq},
      {"zq-to-ss", zq_to_ss},
      {"coloring-to-cm", coloring_to_cm},
      {"cm-to-permss", cm_to_permss},
      {"tsat-to-ss", tsat_to_ss},
      {"andsat-to-scheduling", andsat_to_scheduling},
      {"cnf-to-coloring", cnf_to_coloring},
      {"mutant-ss-shift", mutant_ss_shift},
  };
  return t;
}

}  // namespace

Reduction mutant_ss_shift() {
  Reduction r = identity_reduction(ProblemKind::SubsetSum);
  r.name = "mutant-ss-shift";
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    auto out = std::get<SubsetSumInstance>(src);
    out.target += 1;
    return out;
  };
  r.parameter_bound = nullptr;
  return r;
}

std::optional<Reduction> find_reduction(const std::string& name) {
  if (name == "identity") return identity_reduction(ProblemKind::SubsetSum);
  if (name.rfind("identity:", 0) == 0) {
    const auto kind = parse_kind(name.substr(9));
    if (!kind) return std::nullopt;
    return identity_reduction(*kind);
  }
  auto it = table().find(name);
  if (it == table().end()) return std::nullopt;
  return it->second();
}

std::vector<std::string> reduction_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : table()) names.push_back(name);
  names.push_back("identity");
  return names;
}

Reduction parse_pipeline(const std::string& spec) {
  std::stringstream ss(spec);
  std::optional<Reduction> acc;
  for (std::string part; std::getline(ss, part, ',');) {
    auto r = find_reduction(part);
    if (!r) throw std::invalid_argument("unknown reduction '" + part + "'");
    acc = acc ? compose(*acc, *r) : *r;
  }
  if (!acc) throw std::invalid_argument("empty pipeline");
  return *acc;
}

}  // namespace certkit
