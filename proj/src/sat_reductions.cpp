#include "certkit/sat_reductions.hpp"

#include <algorithm>
#include <set>

#include "certkit/errors.hpp"
#include "certkit/path_decomposition.hpp"

namespace certkit {

SubsetSumInstance three_sat_to_subset_sum(const CnfInstance& f) {
  const std::size_t k = f.num_vars, c = f.clauses.size();
  for (const auto& cl : f.clauses)
    if (cl.size() > 3) throw ValidationError("tsat-to-ss: clause with more than 3 literals");
  std::vector<BigInt> digit(k + c);
  BigInt p = 1;
  for (auto& d : digit) {
    d = p;
    p *= 10;
  }
  SubsetSumInstance out;
  for (std::size_t i = 1; i <= k; ++i) {
    for (int sign : {1, -1}) {
      const int lit = sign * static_cast<int>(i);
      BigInt item = digit[i - 1];
      for (std::size_t j = 0; j < c; ++j)
        if (std::find(f.clauses[j].begin(), f.clauses[j].end(), lit) != f.clauses[j].end()) item += digit[k + j];
      out.items.push_back(item);
    }
  }
  for (std::size_t j = 0; j < c; ++j) {
    out.items.push_back(digit[k + j]);
    out.items.push_back(2 * digit[k + j]);
  }
  for (std::size_t i = 0; i < k; ++i) out.target += digit[i];
  for (std::size_t j = 0; j < c; ++j) out.target += 4 * digit[k + j];
  return out;
}

Reduction tsat_to_ss() {
  Reduction r;
  r.name = "tsat-to-ss";
  r.source = ProblemKind::Cnf;
  r.target = ProblemKind::SubsetSum;
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    return three_sat_to_subset_sum(std::get<CnfInstance>(src));
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& f = std::get<CnfInstance>(src);
    return std::max(BigInt(4 * (f.num_vars + f.clauses.size())), BigInt(3));
  };
  return r;
}

Reduction andsat_to_scheduling() {
  Reduction r;
  r.name = "andsat-to-scheduling";
  r.source = ProblemKind::AndSat;
  r.target = ProblemKind::Scheduling;
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& in = std::get<AndSatInstance>(src);
    const std::size_t n = in.formulas.size();
    if (in.k < 64 && (std::uint64_t{1} << in.k) <= n) return decided(ProblemKind::Scheduling, solve_and_sat(in).yes);
    SchedulingInstance out;
    BigInt prefix = 0, total = 0, threshold = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const auto ss = three_sat_to_subset_sum(in.formulas[j - 1]);
      prefix += ss.target;
      const BigInt mult = n + 1 - j;
      for (const auto& p : ss.items) {
        out.jobs.push_back({p, p * mult, prefix});
        total += p * mult;
      }
      threshold += ss.target * mult;
    }
    out.tardy_budget = total - threshold;
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<AndSatInstance>(src);
    std::size_t cmax = 0;
    for (const auto& f : in.formulas) cmax = std::max(cmax, f.clauses.size());
    return std::max(BigInt(4 * (in.k + cmax) + 2 * ceil_log2(BigInt(in.formulas.size()) + 1) + 4), BigInt(3));
  };
  return r;
}

Reduction cnf_to_coloring() {
  Reduction r;
  r.name = "cnf-to-coloring";
  r.source = ProblemKind::Cnf;
  r.target = ProblemKind::Coloring;
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    const auto& f = std::get<CnfInstance>(src);
    for (const auto& cl : f.clauses)
      if (cl.empty()) return decided(ProblemKind::Coloring, false);
    const std::size_t k = f.num_vars;
    ColoringInstance out;
    Graph& g = out.graph;
    g.vertex_count = 2 * k + 2;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto edge = [&](std::size_t u, std::size_t v) {
      if (seen.insert(std::minmax(u, v)).second) g.edges.emplace_back(u, v);
    };
    edge(kBaseVertex, kFalseVertex);
    for (std::size_t i = 1; i <= k; ++i) {
      const auto y = literal_vertex(static_cast<int>(i)), no = literal_vertex(-static_cast<int>(i));
      edge(y, kBaseVertex);
      edge(no, kBaseVertex);
      edge(y, no);  // consistency: x^Y and x^N take opposite truth colors
    }
    Bag base(2 * k + 2);
    for (std::size_t v = 0; v < base.size(); ++v) base[v] = v;
    std::size_t max_arity = 1;
    for (const auto& cl : f.clauses) {
      max_arity = std::max(max_arity, cl.size());
      Bag bag = base;
      std::size_t out_v = literal_vertex(cl[0]);
      for (std::size_t t = 1; t < cl.size(); ++t) {
        const std::size_t u = out_v, v = literal_vertex(cl[t]);
        const std::size_t u2 = g.vertex_count, v2 = u2 + 1, o = u2 + 2;
        g.vertex_count += 3;
        edge(u, u2);
        edge(v, v2);
        edge(u2, v2);
        edge(o, u2);
        edge(o, v2);
        edge(o, kBaseVertex);
        bag.insert(bag.end(), {u2, v2, o});
        out_v = o;
      }
      edge(out_v, kFalseVertex);
      out.bags.push_back(std::move(bag));
    }
    if (out.bags.empty()) out.bags.push_back(base);
    if (!decomposition_violations(g, out.bags).empty() ||
        decomposition_width(out.bags) > 2 * k + 2 + 3 * (max_arity - 1))
      throw std::logic_error("cnf-to-coloring: emitted decomposition broken");
    return out;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& f = std::get<CnfInstance>(src);
    std::size_t d = 1;
    for (const auto& cl : f.clauses) d = std::max(d, cl.size());
    return std::max(BigInt(2 * f.num_vars + 2 + 3 * (d - 1)), BigInt(3));
  };
  return r;
}

}  // namespace certkit
