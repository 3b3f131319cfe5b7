#include "certkit/pathwidth_reductions.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "certkit/errors.hpp"
#include "certkit/numeric_reductions.hpp"
#include "certkit/uq_group.hpp"

namespace certkit {

std::size_t CounterLayout::z(int c, int d) const {
  if (c == d || c < 1 || c > 3 || d < 1 || d > 3) throw std::invalid_argument("CounterLayout::z: need distinct colors");
  // (1,2) (1,3) (2,1) (2,3) (3,1) (3,2)
  const int rank = 2 * (c - 1) + (d < c ? d - 1 : d - 2);
  return 3 * k + 1 + static_cast<std::size_t>(rank);
}

bool is_run(const std::vector<std::vector<int>>& vectors) {
  if (vectors.empty()) return true;
  const std::size_t l = vectors[0].size();
  std::vector<int> sum(l, 0);
  for (const auto& v : vectors) {
    if (v.size() != l) throw std::invalid_argument("is_run: ragged vectors");
    for (std::size_t j = 0; j < l; ++j) {
      sum[j] += v[j];
      if (sum[j] < 0 || sum[j] > 1) return false;
    }
  }
  for (int s : sum)
    if (s != 0) return false;
  return true;
}

ColoringToCm coloring_to_cm_trace(const ColoringInstance& inst) {
  require_valid(ProblemInstance{inst});
  ColoringToCm out;
  out.nice = make_nice(inst.graph, inst.bags);
  const CounterLayout lay{out.nice.width + 1};
  out.labels = greedy_labels(out.nice.commands, inst.graph.vertex_count, out.nice.width);
  auto& cm = out.instance;
  cm.dimension = lay.dimension();

  using Moves = std::vector<std::pair<std::size_t, int>>;
  auto emit = [&](const Moves& moves, Flag f) {
    std::vector<int> v(cm.dimension, 0);
    for (auto [idx, d] : moves) v[idx] += d;
    cm.vectors.push_back(std::move(v));
    cm.flags.push_back(f);
  };
  const std::size_t S = lay.s();
  static constexpr std::pair<int, int> kPairs[] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};

  for (const auto& cmd : out.nice.commands) {
    CmBlock blk{cmd, cm.vectors.size(), 0};
    const std::size_t x = out.labels[cmd.u];
    switch (cmd.type) {
      case Command::Type::Introduce:
      case Command::Type::Forget: {
        const int dir = cmd.type == Command::Type::Introduce ? 1 : -1;
        for (int c = 1; c <= 3; ++c) emit({{lay.x(x, c), dir}, {S, 1}}, Flag::Optional);
        emit({{S, -1}}, Flag::Required);
        break;
      }
      case Command::Type::Edge: {
        const std::size_t y = out.labels[cmd.v];
        for (auto [c, d] : kPairs) emit({{lay.x(x, c), -1}, {lay.x(y, d), -1}, {lay.z(c, d), 1}, {S, 1}}, Flag::Optional);
        emit({{S, -1}}, Flag::Required);
        emit({{S, 1}}, Flag::Required);
        for (auto [c, d] : kPairs) emit({{lay.x(x, c), 1}, {lay.x(y, d), 1}, {lay.z(c, d), -1}, {S, -1}}, Flag::Optional);
        emit({{S, 1}}, Flag::Required);
        emit({{S, -1}}, Flag::Required);
        break;
      }
    }
    blk.length = cm.vectors.size() - blk.first;
    out.blocks.push_back(blk);
  }
  if (cm.dimension != 3 * (out.nice.width + 1) + 7) throw std::logic_error("coloring_to_cm: dimension identity broken");
  return out;
}

Reduction coloring_to_cm() {
  Reduction r;
  r.name = "coloring-to-cm";
  r.source = ProblemKind::Coloring;
  r.target = ProblemKind::CounterMachine;
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
  r.transform = [](const ProblemInstance& src, const Witness&) -> ProblemInstance {
    return coloring_to_cm_trace(std::get<ColoringInstance>(src)).instance;
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    return std::max(BigInt(3) * (parameter(src) + 1) + 7, BigInt(3));
  };
  return r;
}

namespace {

std::optional<bool> plan_cm(const CounterMachineInstance& in) {
  if (in.vectors.empty()) return true;
  if (size_guard_fires(in.vectors.size(), in.dimension)) return solve_counter_machine(in).yes;
  return std::nullopt;
}

GroupElement as_element(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

// Everything the transform needs that depends only on n, as raw images; the contract check calls it
// once per witness.
struct PermssTables {
  std::size_t degree;
  GroupElement id;
  GroupElement hat[3];
  GroupElement distinguished;
  std::vector<GroupElement> powers;  // distinguished^c for c = 0..n
};

const PermssTables& permss_tables(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<PermssTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    const ChiEmbedding ctx = chi_context(n);
    slot = std::make_unique<PermssTables>(
        PermssTables{ctx.degree(),
                     as_element(Permutation::identity(ctx.degree())),
                     {as_element(ctx.gamma_hat(-1)), as_element(ctx.gamma_hat(0)), as_element(ctx.gamma_hat(1))},
                     as_element(ctx.distinguished()),
                     {}});
    for (std::size_t c = 0; c <= n; ++c) slot->powers.push_back(as_element(ctx.power_of_distinguished(c)));
  }
  return *slot;
}

// Block-diagonal product, appended one block at a time.
void append_block(GroupElement& e, const GroupElement& block) {
  const std::uint64_t shift = e.size();
  for (auto x : block) e.push_back(x + shift);
}

}  // namespace

Reduction cm_to_permss() {
  Reduction r;
  r.name = "cm-to-permss";
  r.source = ProblemKind::CounterMachine;
  r.target = ProblemKind::GroupSubsetSum;
  r.witness_length = [](const ProblemInstance& src) -> std::size_t {
    const auto& in = std::get<CounterMachineInstance>(src);
    if (plan_cm(in)) return 0;
    return in.dimension * field_width(BigInt(in.vectors.size()) + 1);
  };
  r.transform = [](const ProblemInstance& src, const Witness& w) -> ProblemInstance {
    const auto& in = std::get<CounterMachineInstance>(src);
    if (auto d = plan_cm(in)) return decided(ProblemKind::GroupSubsetSum, *d);
    const std::size_t n = in.vectors.size(), l = in.dimension;
    WitnessReader rd(w);
    std::vector<BigInt> counts;
    for (std::size_t j = 0; j < l; ++j) {
      auto c = rd.take(BigInt(n) + 1);
      if (!c) return decided(ProblemKind::GroupSubsetSum, false);
      counts.push_back(*c);
    }
    const PermssTables& tab = permss_tables(n);
    const std::size_t degree = (l + 1) * tab.degree;

    GroupSubsetSumInstance out;
    out.group = SymmetricGroup{static_cast<std::uint32_t>(degree)};
    out.elements.reserve(n);
    std::size_t required = 0;
    for (std::size_t i = 0; i < n; ++i) {
      GroupElement e;
      e.reserve(degree);
      for (int v : in.vectors[i]) append_block(e, tab.hat[v + 1]);
      const bool req = in.flags[i] == Flag::Required;
      required += req;
      append_block(e, req ? tab.distinguished : tab.id);
      out.elements.push_back(std::move(e));
    }
    out.target.reserve(degree);
    for (const auto& c : counts) append_block(out.target, tab.powers[static_cast<std::size_t>(c)]);
    append_block(out.target, tab.powers[required]);
    return out;
  };
  r.synthesize = [](const ProblemInstance& src, const Solution& sol) {
    const auto& in = std::get<CounterMachineInstance>(src);
    if (plan_cm(in)) return Witness{};
    std::vector<std::uint64_t> counts(in.dimension, 0);
    for (std::size_t i : std::get<Subsequence>(sol).indices)
      for (std::size_t j = 0; j < in.dimension; ++j) counts[j] += in.vectors[i][j] != 0;
    return cm_to_permss_witness(in, counts);
  };
  r.parameter_bound = [](const ProblemInstance& src) {
    const auto& in = std::get<CounterMachineInstance>(src);
    const auto r_max = static_cast<std::uint64_t>(std::ceil(landau_degree_bound(in.vectors.size())));
    return std::max(BigInt(in.dimension + 1) * 2 * r_max, BigInt(3));
  };
  return r;
}

Witness cm_to_permss_witness(const CounterMachineInstance& inst, const std::vector<std::uint64_t>& n_j) {
  if (plan_cm(inst)) throw std::logic_error("cm_to_permss_witness: instance decided without a guess");
  if (n_j.size() != inst.dimension) throw std::out_of_range("cm_to_permss_witness: need one count per counter");
  const BigInt count = BigInt(inst.vectors.size()) + 1;
  WitnessWriter ww;
  for (auto c : n_j) {
    if (c > inst.vectors.size()) throw std::out_of_range("cm_to_permss_witness: count above n");
    ww.put(c, count);
  }
  return ww.finish();
}

}  // namespace certkit
