#include "certkit/reduction.hpp"

#include <algorithm>

#include "certkit/errors.hpp"

namespace certkit {

ProblemInstance decided(ProblemKind target, bool yes) { return trivial_instance(target, yes); }

ProblemInstance apply(const Reduction& r, const ProblemInstance& inst, const Witness& w) {
  if (kind_of(inst) != r.source) {
    throw UnsupportedKindError(r.name + ": expected " + std::string(kind_name(r.source)) + ", got " +
                               std::string(kind_name(kind_of(inst))));
  }
  require_valid(inst);
  const std::size_t len = r.witness_length(inst);
  if (w.size() != len) {
    throw ValidationError(r.name + ": witness has " + std::to_string(w.size()) + " bits, expected " +
                          std::to_string(len));
  }
  ProblemInstance out = r.transform(inst, w);
  if (kind_of(out) != r.target) throw std::logic_error(r.name + ": produced wrong target kind");
  if (r.parameter_bound) {
    const BigInt bound = r.parameter_bound(inst);
    const BigInt got = parameter(out);
    if (got > bound) {
      throw ParameterBoundError(r.name + ": target parameter " + to_decimal(got) + " exceeds bound " +
                                to_decimal(bound));
    }
  }
  return out;
}

Witness synthesize(const Reduction& r, const ProblemInstance& inst, const Solution& sol) {
  if (kind_of(inst) != r.source) throw UnsupportedKindError(r.name + ": source kind mismatch");
  if (!check_solution(inst, sol)) throw ValidationError(r.name + ": synthesize needs a valid source solution");
  Witness w = r.synthesize(inst, sol);
  if (w.size() != r.witness_length(inst)) throw std::logic_error(r.name + ": synthesized witness has wrong length");
  return w;
}

namespace {

constexpr std::size_t kMaxFirstStageEnumeration = 20;

std::size_t second_stage_length(const Reduction& r1, const Reduction& r2, const ProblemInstance& inst,
                                std::size_t len1) {
  if (r2.ppt) return 0;
  if (len1 == 0) return r2.witness_length(r1.transform(inst, Witness{}));
  if (len1 > kMaxFirstStageEnumeration) {
    throw ResourceError(r1.name + "+" + r2.name + ": first-stage witness too long to bound second stage");
  }
  std::size_t best = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << len1); ++i) {
    best = std::max(best, r2.witness_length(r1.transform(inst, Witness::from_index(i, len1))));
  }
  return best;
}

}  // namespace

Reduction compose(const Reduction& r1, const Reduction& r2) {
  if (r1.target != r2.source) {
    throw UnsupportedKindError("compose: " + r1.name + " targets " + std::string(kind_name(r1.target)) +
                               " but " + r2.name + " reads " + std::string(kind_name(r2.source)));
  }
  Reduction c;
  c.name = r1.name + "+" + r2.name;
  c.source = r1.source;
  c.target = r2.target;
  c.ppt = r1.ppt && r2.ppt;
  c.witness_length = [r1, r2](const ProblemInstance& inst) {
    const std::size_t len1 = r1.witness_length(inst);
    return len1 + second_stage_length(r1, r2, inst, len1);
  };
  c.transform = [r1, r2](const ProblemInstance& inst, const Witness& w) {
    const std::size_t len1 = r1.witness_length(inst);
    WitnessReader reader(w);
    const Witness w1 = reader.take_bits(len1);
    const ProblemInstance mid = apply(r1, inst, w1);
    const std::size_t len2 = r2.witness_length(mid);
    if (reader.remaining() < len2) return decided(r2.target, false);
    const Witness w2 = reader.take_bits(len2);
    // Unused tail bits must be zero so each accepted witness has one spelling.
    if (!reader.rest_is_zero()) return decided(r2.target, false);
    return apply(r2, mid, w2);
  };
  c.synthesize = [r1, r2, len = c.witness_length](const ProblemInstance& inst, const Solution& sol) {
    const Witness w1 = synthesize(r1, inst, sol);
    WitnessWriter writer;
    writer.put_bits(w1);
    if (!r2.ppt) {
      const ProblemInstance mid = apply(r1, inst, w1);
      const Verdict v = solve(mid);
      if (!v.yes) throw std::logic_error(r1.name + ": synthesized witness led to a no-instance");
      writer.put_bits(synthesize(r2, mid, *v.solution));
    }
    writer.pad_to(len(inst));
    return writer.finish();
  };
  return c;
}

Reduction identity_reduction(ProblemKind kind) {
  Reduction r;
  r.name = "identity";
  r.source = r.target = kind;
  r.ppt = true;
  r.witness_length = [](const ProblemInstance&) { return std::size_t{0}; };
  r.transform = [](const ProblemInstance& inst, const Witness&) { return inst; };
  r.synthesize = [](const ProblemInstance&, const Solution&) { return Witness{}; };
  r.parameter_bound = [](const ProblemInstance& inst) { return parameter(inst); };
  return r;
}

}  // namespace certkit
