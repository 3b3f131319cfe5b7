// certkit: generate, solve, reduce and verify parameterized problem instances.
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 usage or invalid input, 3 resource limit, 4 partial.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include "certkit/certificates.hpp"
#include "certkit/contract_check.hpp"
#include "certkit/errors.hpp"
#include "certkit/families.hpp"
#include "certkit/pathwidth_reductions.hpp"
#include "certkit/registry.hpp"
#include "certkit/serialization.hpp"

using namespace certkit;

namespace {

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kResource = 3, kPartial = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text << '\n';
}

// FNV-1a over the canonical dump; stable across runs and platforms.
std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// ---- gen

struct GenOptions {
  std::string kind;
  std::size_t n = 5, m = 2, l = 2, k = 2, clauses = 3, arity = 3, formulas = 2;
  std::uint64_t max = 20, q = 16, seed = 1;
  std::string graph, from_coloring, out;
};

ProblemInstance generate(const GenOptions& o) {
  std::mt19937_64 rng(o.seed);
  auto uni = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  auto sum = [](const std::vector<BigInt>& v) {
    BigInt s = 0;
    for (const auto& x : v) s += x;
    return s;
  };
  auto random_cnf = [&](std::size_t vars, std::size_t count, std::size_t arity) {
    if (vars == 0 && count > 0) throw std::invalid_argument("clauses need at least one variable");
    CnfInstance f{vars, {}, arity};
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<int> cl;
      const std::size_t len = uni(1, std::min(arity, vars));
      while (cl.size() < len) {
        const int v = static_cast<int>(uni(1, vars));
        if (std::find_if(cl.begin(), cl.end(), [&](int x) { return std::abs(x) == v; }) != cl.end()) continue;
        cl.push_back(uni(0, 1) ? v : -v);
      }
      f.clauses.push_back(std::move(cl));
    }
    return f;
  };

  const std::string& kind = o.kind;
  if (kind == "subset-sum") {
    SubsetSumInstance s;
    for (std::size_t i = 0; i < o.n; ++i) s.items.push_back(uni(0, o.max));
    s.target = BigInt(uni(0, static_cast<std::uint64_t>(sum(s.items))));
    return s;
  }
  if (kind == "modular-subset-sum") {
    if (o.q < 1) throw std::invalid_argument("--q must be positive");
    SubsetSumInstance s;
    for (std::size_t i = 0; i < o.n; ++i) s.items.push_back(uni(0, o.q - 1));
    s.target = uni(0, o.q - 1);
    s.modulus = BigInt(o.q);
    return s;
  }
  if (kind == "knapsack") {
    if (o.max < 1) throw std::invalid_argument("--max must be positive");
    KnapsackInstance s;
    for (std::size_t i = 0; i < o.n; ++i) s.items.push_back({uni(1, o.max), uni(1, o.max)});
    s.capacity = uni(0, o.max * o.n / 2);
    s.demand = uni(0, o.max * o.n / 2);
    return s;
  }
  if (kind == "ilp" || kind == "monotone-ilp" || kind == "zero-sum-ilp") {
    if (o.m < 1) throw std::invalid_argument("--m must be positive");
    const IlpVariant v = kind == "ilp" ? IlpVariant::Standard
                         : kind == "monotone-ilp" ? IlpVariant::Monotone
                                                  : IlpVariant::ZeroSumNontrivial;
    IlpInstance s{{}, std::vector<std::int64_t>(o.m, 0), v};
    for (std::size_t i = 0; i < o.n; ++i) {
      std::vector<int> col(o.m);
      for (auto& a : col) a = v == IlpVariant::Monotone ? static_cast<int>(uni(0, 1)) : static_cast<int>(uni(0, 2)) - 1;
      s.columns.push_back(std::move(col));
    }
    // Right-hand side of a random 0/1 vector, so the instance is usually a yes-instance.
    if (v != IlpVariant::ZeroSumNontrivial)
      for (const auto& col : s.columns)
        if (uni(0, 1))
          for (std::size_t j = 0; j < o.m; ++j) s.rhs[j] += col[j];
    return s;
  }
  if (kind == "group-zkk") {
    if (o.k < 1) throw std::invalid_argument("--k must be positive");
    GroupSubsetSumInstance s{ProductGroup{static_cast<std::uint32_t>(o.k)}, {}, {}};
    auto elem = [&] {
      GroupElement e(o.k);
      for (auto& x : e) x = uni(0, o.k - 1);
      return e;
    };
    for (std::size_t i = 0; i < o.n; ++i) s.elements.push_back(elem());
    s.target = elem();
    return s;
  }
  if (kind == "cm") {
    if (!o.from_coloring.empty()) return coloring_to_cm_trace(named_graph(o.from_coloring)).instance;
    if (o.l < 1) throw std::invalid_argument("--l must be positive");
    return random_cm(1, o.l, o.n, o.seed).front();
  }
  if (kind == "coloring") {
    if (!o.graph.empty()) return named_graph(o.graph);
    Graph g{o.n, {}};
    for (std::size_t u = 0; u < o.n; ++u)
      for (std::size_t v = u + 1; v < o.n; ++v)
        if (uni(0, 1)) g.edges.emplace_back(u, v);
    return with_canonical_decomposition(g);
  }
  if (kind == "scheduling") {
    if (o.max < 1) throw std::invalid_argument("--max must be positive");
    SchedulingInstance s;
    BigInt total_p = 0, total_w = 0;
    for (std::size_t i = 0; i < o.n; ++i) {
      Job j{uni(1, o.max), uni(1, o.max), 0};
      total_p += j.processing;
      total_w += j.weight;
      s.jobs.push_back(j);
    }
    for (auto& j : s.jobs) j.due = uni(1, static_cast<std::uint64_t>(total_p));
    s.tardy_budget = uni(0, static_cast<std::uint64_t>(total_w));
    return s;
  }
  if (kind == "cnf") return random_cnf(o.k, o.clauses, o.arity);
  if (kind == "and-sat") {
    AndSatInstance a{o.k, {}};
    for (std::size_t i = 0; i < o.formulas; ++i) a.formulas.push_back(random_cnf(o.k, o.clauses, 3));
    return a;
  }
  if (kind == "unbounded-ss") {
    UnboundedSubsetSumInstance s;
    for (std::size_t i = 0; i < o.n; ++i) s.items.push_back(uni(1, std::max<std::uint64_t>(o.max, 1)));
    s.target = uni(0, 3 * o.max);
    return s;
  }
  throw std::invalid_argument("unknown kind '" + kind + "'");
}

// ---- reduce

struct ReduceOptions {
  std::string name, file, witness, out, sidecar;
  bool synth = false;
};

int run_reduce(const ReduceOptions& o) {
  const auto r = parse_pipeline(o.name);
  const ProblemInstance src = parse_instance(read_input(o.file));
  const std::size_t len = r.witness_length(src);
  Witness w;
  if (o.synth) {
    const Verdict v = solve(src);
    if (!v.yes) {
      std::cerr << "reduce: source is a no-instance; there is no witness to synthesize\n";
      return kNo;
    }
    w = synthesize(r, src, *v.solution);
  } else if (!o.witness.empty() || len == 0) {
    auto parsed = Witness::from_hex(o.witness, len);
    if (!parsed) {
      std::cerr << "reduce: witness must be " << len << " bits (" << (len + 3) / 4 << " hex digits, zero padding)\n";
      return kUsage;
    }
    w = *parsed;
  } else {
    std::cerr << "reduce: " << r.name << " needs a " << len << "-bit witness (--witness HEX or --synthesize)\n";
    return kUsage;
  }
  const ProblemInstance out = apply(r, src, w);
  const std::string src_dump = dump_instance(src);
  Json meta;
  meta["reduction"] = r.name;
  meta["source_hash"] = fnv1a_hex(src_dump);
  meta["witness"] = w.to_hex();
  meta["witness_bits"] = w.size();
  meta["parameter_before"] = to_decimal(parameter(src));
  meta["parameter_after"] = to_decimal(parameter(out));
  write_output(o.out, dump_instance(out));
  if (!o.sidecar.empty()) write_output(o.sidecar, meta.dump());
  else if (!o.out.empty() && o.out != "-") write_output(o.out + ".meta.json", meta.dump());
  else std::cerr << meta.dump() << '\n';
  return kYes;
}

// ---- verify

struct VerifyOptions {
  std::string pipeline, family;
  bool json = false;
  std::size_t max_bits = 20, workers = 0;
};

int run_verify(const VerifyOptions& o) {
  const auto r = parse_pipeline(o.pipeline);
  const auto family = parse_family_spec(o.family);
  ContractBudget budget;
  budget.max_witness_bits = o.max_bits;
  budget.workers = o.workers;
  const auto rep = nppt_contract_check(r, family, budget);
  if (o.json) std::cout << report_to_json(rep).dump(2) << '\n';
  else std::cout << report_summary(rep) << '\n' << (rep.clean() ? rep.skipped ? "PARTIAL" : "PASS" : "FAIL") << '\n';
  if (!rep.clean()) return kNo;
  return rep.skipped ? kPartial : kYes;
}

// ---- cert-check

struct CertOptions {
  std::string scheme, file, certificate;
  bool synth = false, exhaustive = false;
  std::size_t max_bits = 24;
};

int run_cert_check(const CertOptions& o) {
  const auto scheme = find_scheme(o.scheme);
  if (!scheme) throw std::invalid_argument("unknown scheme '" + o.scheme + "'");
  const ProblemInstance inst = parse_instance(read_input(o.file));
  if (kind_of(inst) != scheme->kind && !(scheme->kind == ProblemKind::SubsetSum && kind_of(inst) == ProblemKind::ModularSubsetSum))
    throw UnsupportedKindError(o.scheme + " does not read " + std::string(kind_name(kind_of(inst))));
  const std::size_t len = scheme->cert_len(inst);
  Json rep;
  rep["scheme"] = scheme->name;
  rep["cert_len"] = len;
  int code = kYes;
  if (o.exhaustive) {
    if (len > o.max_bits) throw ResourceError("cert-check: certificate space above 2^" + std::to_string(o.max_bits));
    std::uint64_t accepted = 0;
    std::optional<std::string> first;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
      const Witness w = Witness::from_index(i, len);
      if (scheme->verify(inst, w)) {
        ++accepted;
        if (!first) first = w.to_hex();
      }
    }
    const bool oracle = solve(inst).yes;
    rep["certificates"] = std::uint64_t{1} << len;
    rep["accepted"] = accepted;
    rep["first_accepted"] = first ? Json(*first) : Json(nullptr);
    rep["oracle"] = oracle ? "yes" : "no";
    rep["consistent"] = oracle == (accepted > 0);
    code = oracle == (accepted > 0) ? kYes : kNo;
  } else {
    Witness w;
    if (o.synth) {
      const Verdict v = solve(inst);
      if (!v.yes) {
        std::cerr << "cert-check: no-instance; there is no certificate to synthesize\n";
        return kNo;
      }
      w = scheme->synthesize(inst, *v.solution);
    } else {
      auto parsed = Witness::from_hex(o.certificate, len);
      if (!parsed) {
        std::cerr << "cert-check: certificate must be " << len << " bits\n";
        return kUsage;
      }
      w = *parsed;
    }
    const bool ok = scheme->verify(inst, w);
    rep["certificate"] = w.to_hex();
    rep["accepted"] = ok;
    code = ok ? kYes : kNo;
  }
  std::cout << rep.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certkit: parameterized reductions, oracles and certificate checks"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an instance (deterministic for a fixed seed)");
  g->add_option("kind", gen.kind,
                "subset-sum | modular-subset-sum | knapsack | ilp | monotone-ilp | zero-sum-ilp | group-zkk | cm | "
                "coloring | scheduling | cnf | and-sat | unbounded-ss")
      ->required();
  g->add_option("--n", gen.n, "Number of items / columns / vectors / vertices / jobs");
  g->add_option("--max", gen.max, "Largest value drawn");
  g->add_option("--q", gen.q, "Modulus");
  g->add_option("--m", gen.m, "ILP rows");
  g->add_option("--l", gen.l, "Counter machine dimension");
  g->add_option("--k", gen.k, "Group parameter or number of variables");
  g->add_option("--clauses", gen.clauses, "Clauses per formula");
  g->add_option("--arity", gen.arity, "Literals per clause (cnf)");
  g->add_option("--formulas", gen.formulas, "Formulas (and-sat)");
  g->add_option("--graph", gen.graph, "k3 | k4 | c5 | p4 | path:N | cycle:N | complete:N | star:N");
  g->add_option("--from-coloring", gen.from_coloring, "Counter machine from this named graph");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output file (default stdout)");

  std::string solve_file;
  bool solve_json = false;
  auto* s = app.add_subcommand("solve", "Decide an instance with the exact oracle");
  s->add_option("file", solve_file, "Instance JSON ('-' for stdin)")->required();
  s->add_flag("--json", solve_json, "Print the verdict as JSON");

  ReduceOptions red;
  auto* r = app.add_subcommand("reduce", "Apply a reduction (or comma-separated pipeline)");
  r->add_option("reduction", red.name, "Reduction name or pipeline")->required();
  r->add_option("file", red.file, "Instance JSON ('-' for stdin)")->required();
  auto* wopt = r->add_option("--witness", red.witness, "Witness as MSB-first hex");
  r->add_flag("--synthesize", red.synth, "Derive the witness from an oracle solution")->excludes(wopt);
  r->add_option("--out", red.out, "Target instance file (sidecar goes to <out>.meta.json)");
  r->add_option("--sidecar", red.sidecar, "Sidecar file");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Check the NPPT contract over an instance family");
  v->add_option("pipeline", ver.pipeline, "Reduction name or pipeline")->required();
  v->add_option("--family", ver.family, "Family spec, e.g. ss-grid:n=3,max=4,t=10")->required();
  v->add_option("--max-witness-bits", ver.max_bits, "Skip no-instances with longer witnesses");
  v->add_option("--workers", ver.workers, "Worker threads (0 = hardware concurrency)");
  v->add_flag("--json", ver.json, "Machine-readable report");

  CertOptions cert;
  auto* c = app.add_subcommand("cert-check", "Check a certificate scheme on an instance");
  c->add_option("scheme", cert.scheme, "unbounded-ss | zkk | subset-indicator")->required();
  c->add_option("file", cert.file, "Instance JSON ('-' for stdin)")->required();
  auto* copt = c->add_option("--certificate", cert.certificate, "Certificate as MSB-first hex");
  auto* csyn = c->add_flag("--synthesize", cert.synth, "Synthesize from an oracle solution")->excludes(copt);
  c->add_flag("--exhaustive", cert.exhaustive, "Try every certificate and compare with the oracle")
      ->excludes(copt)
      ->excludes(csyn);
  c->add_option("--max-bits", cert.max_bits, "Largest certificate length for --exhaustive");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) {
      write_output(gen.out, dump_instance(generate(gen)));
      return kYes;
    }
    if (*s) {
      const Verdict verdict = solve(parse_instance(read_input(solve_file)));
      if (solve_json) std::cout << verdict_to_json(verdict).dump() << '\n';
      else std::cout << (verdict.yes ? "yes" : "no") << " (" << verdict.telemetry.method << ", "
                     << verdict.telemetry.states << " states)\n";
      return verdict.yes ? kYes : kNo;
    }
    if (*r) return run_reduce(red);
    if (*v) return run_verify(ver);
    if (*c) return run_cert_check(cert);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
