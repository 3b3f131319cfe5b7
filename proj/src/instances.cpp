#include "certkit/instances.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "certkit/errors.hpp"
#include "certkit/path_decomposition.hpp"

namespace certkit {

ValidationError::ValidationError(const std::string& context,
                                 const std::vector<std::string>& violations)
    : std::invalid_argument([&] {
        std::string msg = context + ":";
        for (std::size_t i = 0; i < violations.size(); ++i) {
          msg += (i == 0 ? " " : "; ") + violations[i];
        }
        return msg;
      }()) {}

GroupElement group_identity(const GroupKind& group) {
  return std::visit(
      [](const auto& g) -> GroupElement {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, CyclicGroup>) {
          return {0};
        } else if constexpr (std::is_same_v<G, ProductGroup>) {
          return GroupElement(g.k, 0);
        } else {
          GroupElement e(g.degree);
          for (std::uint32_t i = 0; i < g.degree; ++i) e[i] = i;
          return e;
        }
      },
      group);
}

GroupElement group_multiply(const GroupKind& group, const GroupElement& a, const GroupElement& b) {
  return std::visit(
      [&](const auto& g) -> GroupElement {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, CyclicGroup>) {
          // order may be near 2^64; avoid overflow
          const std::uint64_t s = a[0] + b[0];
          return {(s < a[0] || s >= g.order) ? s - g.order : s};
        } else if constexpr (std::is_same_v<G, ProductGroup>) {
          GroupElement r(g.k);
          for (std::uint32_t i = 0; i < g.k; ++i) r[i] = (a[i] + b[i]) % g.k;
          return r;
        } else {
          GroupElement r(g.degree);
          for (std::uint32_t i = 0; i < g.degree; ++i) r[i] = a[b[i]];
          return r;
        }
      },
      group);
}

bool group_element_valid(const GroupKind& group, const GroupElement& e) {
  return std::visit(
      [&](const auto& g) -> bool {
        using G = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<G, CyclicGroup>) {
          return e.size() == 1 && e[0] < g.order;
        } else if constexpr (std::is_same_v<G, ProductGroup>) {
          return e.size() == g.k &&
                 std::all_of(e.begin(), e.end(), [&](std::uint64_t x) { return x < g.k; });
        } else {
          if (e.size() != g.degree) return false;
          std::vector<bool> seen(g.degree, false);
          for (std::uint64_t x : e) {
            if (x >= g.degree || seen[x]) return false;
            seen[x] = true;
          }
          return true;
        }
      },
      group);
}

ProblemKind kind_of(const ProblemInstance& inst) {
  struct V {
    ProblemKind operator()(const SubsetSumInstance& s) const {
      return s.modulus ? ProblemKind::ModularSubsetSum : ProblemKind::SubsetSum;
    }
    ProblemKind operator()(const KnapsackInstance&) const { return ProblemKind::Knapsack; }
    ProblemKind operator()(const IlpInstance& i) const {
      switch (i.variant) {
        case IlpVariant::Monotone: return ProblemKind::MonotoneIlp;
        case IlpVariant::ZeroSumNontrivial: return ProblemKind::ZeroSumIlp;
        default: return ProblemKind::Ilp;
      }
    }
    ProblemKind operator()(const GroupSubsetSumInstance&) const { return ProblemKind::GroupSubsetSum; }
    ProblemKind operator()(const CounterMachineInstance&) const { return ProblemKind::CounterMachine; }
    ProblemKind operator()(const ColoringInstance&) const { return ProblemKind::Coloring; }
    ProblemKind operator()(const SchedulingInstance&) const { return ProblemKind::Scheduling; }
    ProblemKind operator()(const CnfInstance&) const { return ProblemKind::Cnf; }
    ProblemKind operator()(const AndSatInstance&) const { return ProblemKind::AndSat; }
    ProblemKind operator()(const UnboundedSubsetSumInstance&) const {
      return ProblemKind::UnboundedSubsetSum;
    }
  };
  return std::visit(V{}, inst);
}

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 13> kKindNames{{
    {ProblemKind::SubsetSum, "subset_sum"},
    {ProblemKind::ModularSubsetSum, "modular_subset_sum"},
    {ProblemKind::Knapsack, "knapsack"},
    {ProblemKind::Ilp, "ilp"},
    {ProblemKind::MonotoneIlp, "monotone_ilp"},
    {ProblemKind::ZeroSumIlp, "zero_sum_ilp"},
    {ProblemKind::GroupSubsetSum, "group_subset_sum"},
    {ProblemKind::CounterMachine, "counter_machine"},
    {ProblemKind::Coloring, "coloring"},
    {ProblemKind::Scheduling, "scheduling"},
    {ProblemKind::Cnf, "cnf"},
    {ProblemKind::AndSat, "and_sat"},
    {ProblemKind::UnboundedSubsetSum, "unbounded_subset_sum"},
}};

void check_cnf(const CnfInstance& f, std::vector<std::string>& out) {
  for (const auto& clause : f.clauses) {
    if (clause.empty()) out.push_back("empty clause");
    if (f.arity_cap && clause.size() > *f.arity_cap) out.push_back("clause exceeds arity cap");
    for (int lit : clause) {
      const auto var = static_cast<std::size_t>(lit < 0 ? -static_cast<long>(lit) : lit);
      if (lit == 0 || var > f.num_vars) {
        out.push_back("literal variable out of range");
        break;
      }
    }
  }
}

bool signed_unit(int x) { return x >= -1 && x <= 1; }

}  // namespace

std::string_view kind_name(ProblemKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<ProblemKind> parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames)
    if (n == name) return k;
  return std::nullopt;
}

std::vector<std::string> validate(const ProblemInstance& inst) {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SubsetSumInstance>) {
          if (std::any_of(x.items.begin(), x.items.end(), [](const BigInt& p) { return p < 0; }))
            out.push_back("negative item");
          if (x.target < 0) out.push_back("negative target");
          if (x.modulus) {
            const BigInt& q = *x.modulus;
            if (q <= 0) {
              out.push_back("modulus not positive");
            } else {
              if (std::any_of(x.items.begin(), x.items.end(), [&](const BigInt& p) { return p >= q; }))
                out.push_back("item outside [0,q)");
              if (x.target >= q) out.push_back("target outside [0,q)");
            }
          }
        } else if constexpr (std::is_same_v<T, KnapsackInstance>) {
          for (const auto& it : x.items) {
            if (it.size <= 0 || it.weight <= 0) {
              out.push_back("knapsack item not positive");
              break;
            }
          }
          if (x.capacity < 0 || x.demand < 0) out.push_back("negative capacity or demand");
        } else if constexpr (std::is_same_v<T, IlpInstance>) {
          const std::size_t m = x.rhs.size();
          if (m == 0) out.push_back("ilp has no rows");
          for (const auto& col : x.columns) {
            if (col.size() != m) {
              out.push_back("column length differs from rhs length");
              break;
            }
          }
          bool bad_entry = false, bad_monotone = false;
          for (const auto& col : x.columns)
            for (int a : col) {
              if (!signed_unit(a)) bad_entry = true;
              if (a < 0) bad_monotone = true;
            }
          if (bad_entry) out.push_back("entry out of {-1,0,1}");
          if (x.variant == IlpVariant::Monotone && bad_monotone)
            out.push_back("monotone entry out of {0,1}");
          if (x.variant == IlpVariant::ZeroSumNontrivial &&
              std::any_of(x.rhs.begin(), x.rhs.end(), [](std::int64_t b) { return b != 0; }))
            out.push_back("zero-sum rhs not zero");
        } else if constexpr (std::is_same_v<T, GroupSubsetSumInstance>) {
          const bool group_ok = std::visit(
              [](const auto& g) {
                using G = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<G, CyclicGroup>) return g.order >= 1;
                else if constexpr (std::is_same_v<G, ProductGroup>) return g.k >= 1;
                else return g.degree >= 1;
              },
              x.group);
          if (!group_ok) {
            out.push_back("degenerate group");
            return;
          }
          for (const auto& e : x.elements) {
            if (!group_element_valid(x.group, e)) {
              out.push_back("element invalid for group");
              break;
            }
          }
          if (!group_element_valid(x.group, x.target)) out.push_back("target invalid for group");
        } else if constexpr (std::is_same_v<T, CounterMachineInstance>) {
          if (x.dimension < 1) out.push_back("dimension must be at least 1");
          if (x.vectors.size() != x.flags.size()) out.push_back("vectors and flags differ in length");
          for (const auto& v : x.vectors) {
            if (v.size() != x.dimension) {
              out.push_back("vector dimension not uniform");
              break;
            }
            if (!std::all_of(v.begin(), v.end(), signed_unit)) {
              out.push_back("vector entry out of {-1,0,1}");
              break;
            }
          }
        } else if constexpr (std::is_same_v<T, ColoringInstance>) {
          auto v = decomposition_violations(x.graph, x.bags);
          out.insert(out.end(), v.begin(), v.end());
        } else if constexpr (std::is_same_v<T, SchedulingInstance>) {
          for (const auto& j : x.jobs) {
            if (j.processing <= 0 || j.weight <= 0 || j.due <= 0) {
              out.push_back("job field not positive");
              break;
            }
          }
          if (x.tardy_budget < 0) out.push_back("negative tardy budget");
        } else if constexpr (std::is_same_v<T, CnfInstance>) {
          check_cnf(x, out);
        } else if constexpr (std::is_same_v<T, AndSatInstance>) {
          for (const auto& f : x.formulas) {
            if (f.num_vars > x.k) out.push_back("formula exceeds shared variable bound");
            check_cnf(f, out);
          }
        } else if constexpr (std::is_same_v<T, UnboundedSubsetSumInstance>) {
          if (std::any_of(x.items.begin(), x.items.end(), [](const BigInt& p) { return p <= 0; }))
            out.push_back("item not positive");
          if (x.target < 0) out.push_back("negative target");
        }
      },
      inst);
  return out;
}

void require_valid(const ProblemInstance& inst) {
  if (auto v = validate(inst); !v.empty()) throw ValidationError(std::string(kind_name(kind_of(inst))), v);
}

Graph complete_graph(std::size_t n) {
  Graph g{n, {}};
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

ProblemInstance trivial_instance(ProblemKind kind, bool yes) {
  switch (kind) {
    case ProblemKind::SubsetSum:
      return SubsetSumInstance{{}, yes ? 0 : 1, std::nullopt};
    case ProblemKind::ModularSubsetSum:
      return SubsetSumInstance{{}, yes ? 0 : 1, BigInt(2)};
    case ProblemKind::Knapsack:
      return KnapsackInstance{{}, 0, yes ? 0 : 1};
    case ProblemKind::Ilp:
      return IlpInstance{{}, {yes ? 0 : 1}, IlpVariant::Standard};
    case ProblemKind::MonotoneIlp:
      return IlpInstance{{}, {yes ? 0 : 1}, IlpVariant::Monotone};
    case ProblemKind::ZeroSumIlp:
      if (yes) return IlpInstance{{{0}}, {0}, IlpVariant::ZeroSumNontrivial};
      return IlpInstance{{}, {0}, IlpVariant::ZeroSumNontrivial};
    case ProblemKind::GroupSubsetSum:
      if (yes) return GroupSubsetSumInstance{SymmetricGroup{1}, {}, {0}};
      return GroupSubsetSumInstance{SymmetricGroup{2}, {}, {1, 0}};
    case ProblemKind::CounterMachine:
      if (yes) return CounterMachineInstance{1, {}, {}};
      return CounterMachineInstance{1, {{1}}, {Flag::Required}};
    case ProblemKind::Coloring:
      if (yes) return ColoringInstance{};
      return ColoringInstance{complete_graph(4), {{0, 1, 2, 3}}};
    case ProblemKind::Scheduling:
      if (yes) return SchedulingInstance{{}, 0};
      return SchedulingInstance{{Job{2, 1, 1}}, 0};
    case ProblemKind::Cnf:
      if (yes) return CnfInstance{1, {}, std::nullopt};
      return CnfInstance{1, {{1}, {-1}}, std::nullopt};
    case ProblemKind::AndSat:
      if (yes) return AndSatInstance{1, {}};
      return AndSatInstance{1, {CnfInstance{1, {{1}, {-1}}, 3}}};
    case ProblemKind::UnboundedSubsetSum:
      return UnboundedSubsetSumInstance{{}, yes ? 0 : 1};
  }
  throw std::logic_error("trivial_instance: unknown kind");
}

BigInt parameter(const ProblemInstance& inst) {
  struct V {
    BigInt operator()(const SubsetSumInstance& s) const {
      return bit_length(s.modulus ? *s.modulus : s.target);
    }
    BigInt operator()(const KnapsackInstance& k) const { return bit_length(k.capacity + k.demand); }
    BigInt operator()(const IlpInstance& i) const { return i.rhs.size(); }
    BigInt operator()(const GroupSubsetSumInstance& g) const {
      return std::visit(
          [](const auto& grp) -> BigInt {
            using G = std::decay_t<decltype(grp)>;
            if constexpr (std::is_same_v<G, CyclicGroup>) return bit_length(grp.order);
            else if constexpr (std::is_same_v<G, ProductGroup>) return grp.k;
            else return grp.degree;
          },
          g.group);
    }
    BigInt operator()(const CounterMachineInstance& c) const { return c.dimension; }
    BigInt operator()(const ColoringInstance& c) const { return decomposition_width(c.bags); }
    BigInt operator()(const SchedulingInstance& s) const {
      BigInt dmax = 0, wmax = 0;
      for (const auto& j : s.jobs) {
        dmax = std::max(dmax, j.due);
        wmax = std::max(wmax, j.weight);
      }
      return bit_length(dmax + wmax);
    }
    BigInt operator()(const CnfInstance& c) const { return c.num_vars; }
    BigInt operator()(const AndSatInstance& a) const { return a.k; }
    BigInt operator()(const UnboundedSubsetSumInstance& u) const { return bit_length(u.target); }
  };
  return std::visit(V{}, inst);
}

std::size_t instance_size(const ProblemInstance& inst) {
  struct V {
    std::size_t operator()(const SubsetSumInstance& s) const { return s.items.size(); }
    std::size_t operator()(const KnapsackInstance& k) const { return k.items.size(); }
    std::size_t operator()(const IlpInstance& i) const { return i.columns.size(); }
    std::size_t operator()(const GroupSubsetSumInstance& g) const { return g.elements.size(); }
    std::size_t operator()(const CounterMachineInstance& c) const { return c.vectors.size(); }
    std::size_t operator()(const ColoringInstance& c) const { return c.graph.vertex_count; }
    std::size_t operator()(const SchedulingInstance& s) const { return s.jobs.size(); }
    std::size_t operator()(const CnfInstance& c) const { return c.clauses.size(); }
    std::size_t operator()(const AndSatInstance& a) const { return a.formulas.size(); }
    std::size_t operator()(const UnboundedSubsetSumInstance& u) const { return u.items.size(); }
  };
  return std::visit(V{}, inst);
}

}  // namespace certkit
