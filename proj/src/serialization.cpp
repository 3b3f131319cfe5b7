#include "certkit/serialization.hpp"

#include "certkit/errors.hpp"

namespace certkit {
namespace {

Json big(const BigInt& x) { return to_decimal(x); }

BigInt read_big(const Json& j, const char* field) {
  if (!j.is_string()) throw ValidationError(std::string(field) + ": expected decimal string");
  auto v = parse_decimal(j.get<std::string>());
  if (!v) throw ValidationError(std::string(field) + ": malformed integer");
  return *v;
}

const Json& at(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) throw ValidationError(std::string("missing field: ") + field);
  return j.at(field);
}

template <typename T>
T read_as(const Json& j, const char* field) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(field) + ": wrong type");
  }
}

std::vector<BigInt> read_big_list(const Json& j, const char* field) {
  if (!j.is_array()) throw ValidationError(std::string(field) + ": expected array");
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(read_big(e, field));
  return out;
}

Json big_list(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

Json cnf_body(const CnfInstance& f) {
  Json j;
  j["num_vars"] = f.num_vars;
  j["clauses"] = f.clauses;
  if (f.arity_cap) j["arity_cap"] = *f.arity_cap;
  return j;
}

CnfInstance read_cnf(const Json& j) {
  CnfInstance f;
  f.num_vars = read_as<std::size_t>(at(j, "num_vars"), "num_vars");
  f.clauses = read_as<std::vector<std::vector<int>>>(at(j, "clauses"), "clauses");
  if (j.contains("arity_cap")) f.arity_cap = read_as<std::size_t>(j.at("arity_cap"), "arity_cap");
  return f;
}

Json group_json(const GroupKind& g) {
  return std::visit(
      [](const auto& x) -> Json {
        using G = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<G, CyclicGroup>) return {{"kind", "cyclic"}, {"order", big(x.order)}};
        else if constexpr (std::is_same_v<G, ProductGroup>) return {{"kind", "product"}, {"k", x.k}};
        else return {{"kind", "symmetric"}, {"degree", x.degree}};
      },
      g);
}

Json element_json(const GroupKind& g, const GroupElement& e) {
  if (std::holds_alternative<CyclicGroup>(g)) return big(e.empty() ? 0 : e[0]);
  return e;
}

GroupElement read_element(const GroupKind& g, const Json& j) {
  if (std::holds_alternative<CyclicGroup>(g)) {
    auto v = to_u64(read_big(j, "element"));
    if (!v) throw ValidationError("element: residue out of range");
    return {*v};
  }
  return read_as<GroupElement>(j, "element");
}

}  // namespace

Json instance_to_json(const ProblemInstance& inst) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json j;
        if constexpr (std::is_same_v<T, SubsetSumInstance>) {
          j["problem"] = "subset_sum";
          j["items"] = big_list(x.items);
          j["target"] = big(x.target);
          if (x.modulus) j["modulus"] = big(*x.modulus);
        } else if constexpr (std::is_same_v<T, KnapsackInstance>) {
          j["problem"] = "knapsack";
          j["items"] = Json::array();
          for (const auto& it : x.items) j["items"].push_back({{"size", big(it.size)}, {"weight", big(it.weight)}});
          j["capacity"] = big(x.capacity);
          j["demand"] = big(x.demand);
        } else if constexpr (std::is_same_v<T, IlpInstance>) {
          j["problem"] = "ilp";
          j["variant"] = x.variant == IlpVariant::Standard   ? "standard"
                         : x.variant == IlpVariant::Monotone ? "monotone"
                                                             : "zero_sum";
          j["columns"] = x.columns;
          j["rhs"] = x.rhs;
        } else if constexpr (std::is_same_v<T, GroupSubsetSumInstance>) {
          j["problem"] = "group_subset_sum";
          j["group"] = group_json(x.group);
          j["elements"] = Json::array();
          for (const auto& e : x.elements) j["elements"].push_back(element_json(x.group, e));
          j["target"] = element_json(x.group, x.target);
        } else if constexpr (std::is_same_v<T, CounterMachineInstance>) {
          j["problem"] = "counter_machine";
          j["dimension"] = x.dimension;
          j["vectors"] = x.vectors;
          j["flags"] = Json::array();
          for (Flag f : x.flags) j["flags"].push_back(f == Flag::Required ? "R" : "O");
        } else if constexpr (std::is_same_v<T, ColoringInstance>) {
          j["problem"] = "coloring";
          j["n"] = x.graph.vertex_count;
          j["edges"] = Json::array();
          for (const auto& [u, v] : x.graph.edges) j["edges"].push_back({u, v});
          j["bags"] = x.bags;
        } else if constexpr (std::is_same_v<T, SchedulingInstance>) {
          j["problem"] = "scheduling";
          j["jobs"] = Json::array();
          for (const auto& job : x.jobs)
            j["jobs"].push_back({{"processing", big(job.processing)}, {"weight", big(job.weight)}, {"due", big(job.due)}});
          j["tardy_budget"] = big(x.tardy_budget);
        } else if constexpr (std::is_same_v<T, CnfInstance>) {
          j["problem"] = "cnf";
          const Json body = cnf_body(x);
          for (auto& [key, val] : body.items()) j[key] = val;
        } else if constexpr (std::is_same_v<T, AndSatInstance>) {
          j["problem"] = "and_sat";
          j["k"] = x.k;
          j["formulas"] = Json::array();
          for (const auto& f : x.formulas) j["formulas"].push_back(cnf_body(f));
        } else {
          j["problem"] = "unbounded_subset_sum";
          j["items"] = big_list(x.items);
          j["target"] = big(x.target);
        }
        return j;
      },
      inst);
}

ProblemInstance instance_from_json(const Json& j) {
  const auto problem = read_as<std::string>(at(j, "problem"), "problem");
  ProblemInstance inst;
  if (problem == "subset_sum") {
    SubsetSumInstance s;
    s.items = read_big_list(at(j, "items"), "items");
    s.target = read_big(at(j, "target"), "target");
    if (j.contains("modulus")) s.modulus = read_big(j.at("modulus"), "modulus");
    inst = s;
  } else if (problem == "knapsack") {
    KnapsackInstance k;
    const Json& items = at(j, "items");
    if (!items.is_array()) throw ValidationError("items: expected array");
    for (const auto& it : items) k.items.push_back({read_big(at(it, "size"), "size"), read_big(at(it, "weight"), "weight")});
    k.capacity = read_big(at(j, "capacity"), "capacity");
    k.demand = read_big(at(j, "demand"), "demand");
    inst = k;
  } else if (problem == "ilp") {
    IlpInstance i;
    const auto variant = read_as<std::string>(at(j, "variant"), "variant");
    if (variant == "standard") i.variant = IlpVariant::Standard;
    else if (variant == "monotone") i.variant = IlpVariant::Monotone;
    else if (variant == "zero_sum") i.variant = IlpVariant::ZeroSumNontrivial;
    else throw ValidationError("variant: unknown value " + variant);
    i.columns = read_as<std::vector<std::vector<int>>>(at(j, "columns"), "columns");
    i.rhs = read_as<std::vector<std::int64_t>>(at(j, "rhs"), "rhs");
    inst = i;
  } else if (problem == "group_subset_sum") {
    GroupSubsetSumInstance g;
    const Json& grp = at(j, "group");
    const auto kind = read_as<std::string>(at(grp, "kind"), "group.kind");
    if (kind == "cyclic") {
      auto q = to_u64(read_big(at(grp, "order"), "order"));
      if (!q) throw ValidationError("order: out of range");
      g.group = CyclicGroup{*q};
    } else if (kind == "product") {
      g.group = ProductGroup{read_as<std::uint32_t>(at(grp, "k"), "k")};
    } else if (kind == "symmetric") {
      g.group = SymmetricGroup{read_as<std::uint32_t>(at(grp, "degree"), "degree")};
    } else {
      throw ValidationError("group.kind: unknown value " + kind);
    }
    const Json& elems = at(j, "elements");
    if (!elems.is_array()) throw ValidationError("elements: expected array");
    for (const auto& e : elems) g.elements.push_back(read_element(g.group, e));
    g.target = read_element(g.group, at(j, "target"));
    inst = g;
  } else if (problem == "counter_machine") {
    CounterMachineInstance c;
    c.dimension = read_as<std::size_t>(at(j, "dimension"), "dimension");
    c.vectors = read_as<std::vector<std::vector<int>>>(at(j, "vectors"), "vectors");
    for (const auto& f : read_as<std::vector<std::string>>(at(j, "flags"), "flags")) {
      if (f == "R") c.flags.push_back(Flag::Required);
      else if (f == "O") c.flags.push_back(Flag::Optional);
      else throw ValidationError("flags: expected \"O\" or \"R\"");
    }
    inst = c;
  } else if (problem == "coloring") {
    ColoringInstance c;
    c.graph.vertex_count = read_as<std::size_t>(at(j, "n"), "n");
    for (const auto& e : read_as<std::vector<std::vector<std::size_t>>>(at(j, "edges"), "edges")) {
      if (e.size() != 2) throw ValidationError("edges: expected pairs");
      c.graph.edges.emplace_back(e[0], e[1]);
    }
    c.bags = read_as<std::vector<Bag>>(at(j, "bags"), "bags");
    inst = c;
  } else if (problem == "scheduling") {
    SchedulingInstance s;
    const Json& jobs = at(j, "jobs");
    if (!jobs.is_array()) throw ValidationError("jobs: expected array");
    for (const auto& job : jobs)
      s.jobs.push_back({read_big(at(job, "processing"), "processing"), read_big(at(job, "weight"), "weight"),
                        read_big(at(job, "due"), "due")});
    s.tardy_budget = read_big(at(j, "tardy_budget"), "tardy_budget");
    inst = s;
  } else if (problem == "cnf") {
    inst = read_cnf(j);
  } else if (problem == "and_sat") {
    AndSatInstance a;
    a.k = read_as<std::size_t>(at(j, "k"), "k");
    const Json& fs = at(j, "formulas");
    if (!fs.is_array()) throw ValidationError("formulas: expected array");
    for (const auto& f : fs) a.formulas.push_back(read_cnf(f));
    inst = a;
  } else if (problem == "unbounded_subset_sum") {
    UnboundedSubsetSumInstance u;
    u.items = read_big_list(at(j, "items"), "items");
    u.target = read_big(at(j, "target"), "target");
    inst = u;
  } else {
    throw ValidationError("problem: unknown kind " + problem);
  }
  require_valid(inst);
  return inst;
}

std::string dump_instance(const ProblemInstance& inst) { return instance_to_json(inst).dump(); }

ProblemInstance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

Json solution_to_json(const Solution& sol) {
  return std::visit(
      [](const auto& s) -> Json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Subsequence>) return {{"type", "subsequence"}, {"indices", s.indices}};
        else if constexpr (std::is_same_v<S, BinaryVector>) return {{"type", "binary_vector"}, {"x", s.x}};
        else if constexpr (std::is_same_v<S, Schedule>) return {{"type", "schedule"}, {"order", s.order}};
        else if constexpr (std::is_same_v<S, ColorMap>) return {{"type", "coloring"}, {"colors", s.colors}};
        else if constexpr (std::is_same_v<S, Assignment>) return {{"type", "assignment"}, {"values", s.values}};
        else if constexpr (std::is_same_v<S, AssignmentList>) {
          Json a = Json::array();
          for (const auto& x : s.per_formula) a.push_back(x.values);
          return {{"type", "assignment_list"}, {"values", a}};
        } else {
          return {{"type", "multiplicities"}, {"counts", big_list(s.counts)}};
        }
      },
      sol);
}

Solution solution_from_json(const Json& j) {
  const auto type = read_as<std::string>(at(j, "type"), "type");
  if (type == "subsequence") return Subsequence{read_as<std::vector<std::size_t>>(at(j, "indices"), "indices")};
  if (type == "binary_vector") return BinaryVector{read_as<std::vector<int>>(at(j, "x"), "x")};
  if (type == "schedule") return Schedule{read_as<std::vector<std::size_t>>(at(j, "order"), "order")};
  if (type == "coloring") return ColorMap{read_as<std::vector<int>>(at(j, "colors"), "colors")};
  if (type == "assignment") return Assignment{read_as<std::vector<bool>>(at(j, "values"), "values")};
  if (type == "assignment_list") {
    AssignmentList l;
    for (const auto& v : read_as<std::vector<std::vector<bool>>>(at(j, "values"), "values")) l.per_formula.push_back({v});
    return l;
  }
  if (type == "multiplicities") return Multiplicities{read_big_list(at(j, "counts"), "counts")};
  throw ValidationError("solution type unknown: " + type);
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["answer"] = v.yes ? "yes" : "no";
  j["solution"] = v.solution ? solution_to_json(*v.solution) : Json(nullptr);
  j["telemetry"] = {{"method", v.telemetry.method}, {"states", v.telemetry.states}};
  return j;
}

}  // namespace certkit
