#include "certkit/contract_check.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <thread>

#include "certkit/errors.hpp"

namespace certkit {

namespace {

enum class Outcome { Yes, No, Skipped };

struct InstanceResult {
  Outcome outcome = Outcome::Skipped;
  std::uint64_t witnesses = 0;
  std::optional<ContractViolation> violation;
};

InstanceResult check_one(const Reduction& r, const ProblemInstance& inst, std::size_t index,
                         const ContractBudget& budget) {
  InstanceResult res;
  auto violate = [&](const Witness& w, std::string what) {
    res.violation = ContractViolation{index, dump_instance(inst), w.to_hex(), std::move(what)};
  };
  Verdict src;
  try {
    src = solve(inst, budget.solver);
  } catch (const ResourceError&) {
    return res;
  }
  if (src.yes) {
    res.outcome = Outcome::Yes;
    Witness w;
    try {
      w = synthesize(r, inst, *src.solution);
      ++res.witnesses;
      const ProblemInstance out = apply(r, inst, w);
      if (!solve(out, budget.solver).yes) violate(w, "yes-instance mapped to a no target by the synthesized witness");
    } catch (const ResourceError&) {
      res.outcome = Outcome::Skipped;
    } catch (const std::exception& e) {
      violate(w, std::string("yes-instance: ") + e.what());
    }
    return res;
  }
  res.outcome = Outcome::No;
  std::size_t len = 0;
  try {
    len = r.witness_length(inst);
  } catch (const ResourceError&) {
    res.outcome = Outcome::Skipped;
    return res;
  }
  if (len > budget.max_witness_bits) {
    res.outcome = Outcome::Skipped;
    return res;
  }
  // apply() minus the per-call source checks, which do not depend on the witness.
  std::optional<BigInt> bound;
  if (r.parameter_bound) bound = r.parameter_bound(inst);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i) {
    const Witness w = Witness::from_index(i, len);
    ++res.witnesses;
    try {
      const ProblemInstance out = r.transform(inst, w);
      if (kind_of(out) != r.target) {
        violate(w, "wrong target kind");
        break;
      }
      if (bound && parameter(out) > *bound) {
        violate(w, "target parameter exceeds the declared bound");
        break;
      }
      if (solve(out, budget.solver).yes) {
        violate(w, "no-instance mapped to a yes target");
        break;
      }
    } catch (const ResourceError&) {
      res.outcome = Outcome::Skipped;
      break;
    } catch (const std::exception& e) {
      violate(w, std::string("no-instance: ") + e.what());
      break;
    }
  }
  return res;
}

}  // namespace

ContractReport nppt_contract_check(const Reduction& r, const std::vector<ProblemInstance>& family,
                                   const ContractBudget& budget) {
  std::vector<InstanceResult> results(family.size());
  std::size_t workers = budget.workers ? budget.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(family.size(), 1));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < family.size();) results[i] = check_one(r, family[i], i, budget);
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }

  // Merged in instance order, so the report does not depend on scheduling.
  ContractReport rep;
  rep.reduction = r.name;
  rep.instances = family.size();
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& res = results[i];
    rep.witnesses_checked += res.witnesses;
    switch (res.outcome) {
      case Outcome::Yes: ++rep.yes; break;
      case Outcome::No: ++rep.no; break;
      case Outcome::Skipped:
        ++rep.skipped;
        rep.skipped_indices.push_back(i);
        break;
    }
    if (res.violation) rep.violations.push_back(std::move(*res.violation));
  }
  return rep;
}

Json report_to_json(const ContractReport& rep) {
  Json j;
  j["reduction"] = rep.reduction;
  j["status"] = !rep.clean() ? "fail" : rep.skipped ? "partial" : "pass";
  j["instances"] = rep.instances;
  j["yes"] = rep.yes;
  j["no"] = rep.no;
  j["skipped"] = rep.skipped;
  j["witnesses_checked"] = rep.witnesses_checked;
  j["skipped_indices"] = rep.skipped_indices;
  Json v = Json::array();
  for (const auto& x : rep.violations) {
    v.push_back({{"index", x.instance_index},
                 {"instance", Json::parse(x.instance_json)},
                 {"witness", x.witness_hex},
                 {"description", x.description}});
  }
  j["violations"] = std::move(v);
  return j;
}

std::string report_summary(const ContractReport& rep) {
  std::ostringstream os;
  os << rep.reduction << ": " << rep.instances << " instances (" << rep.yes << " yes, " << rep.no << " no, "
     << rep.skipped << " skipped), " << rep.witnesses_checked << " witnesses, " << rep.violations.size()
     << " violations";
  for (const auto& v : rep.violations) {
    os << "\n  #" << v.instance_index << " " << v.instance_json << " witness=" << (v.witness_hex.empty() ? "-" : v.witness_hex)
       << ": " << v.description;
  }
  return os.str();
}

}  // namespace certkit
