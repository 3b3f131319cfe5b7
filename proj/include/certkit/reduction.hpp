#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include "certkit/instances.hpp"
#include "certkit/oracles.hpp"
#include "certkit/witness.hpp"

namespace certkit {

// A (nondeterministic) polynomial parameter transformation.
//
// Contract: source yes => transform(I, synthesize(I, sol)) is yes;
//           source no  => transform(I, w) is no for every w of witness_length(I) bits.
// transform must be total over all bitstrings of the declared length.
struct Reduction {
  std::string name;
  ProblemKind source = ProblemKind::SubsetSum;
  ProblemKind target = ProblemKind::SubsetSum;
  bool ppt = false;  // witness_length == 0 everywhere

  std::function<std::size_t(const ProblemInstance&)> witness_length;
  std::function<ProblemInstance(const ProblemInstance&, const Witness&)> transform;
  std::function<Witness(const ProblemInstance&, const Solution&)> synthesize;
  // Upper bound on parameter(output) given the source; empty = checked per stage.
  std::function<BigInt(const ProblemInstance&)> parameter_bound;
};

// Kind check, validation, witness length check, transform, target kind and parameter-bound check.
ProblemInstance apply(const Reduction& r, const ProblemInstance& inst, const Witness& w);
Witness synthesize(const Reduction& r, const ProblemInstance& inst, const Solution& sol);

// Witness = w1 ++ w2, with w2 padded to the longest second-stage witness over all w1.
Reduction compose(const Reduction& r1, const Reduction& r2);

Reduction identity_reduction(ProblemKind kind);

// The transform of an instance already decided during normalization.
ProblemInstance decided(ProblemKind target, bool yes);

// Thrown by apply when an output exceeds its documented parameter bound.
class ParameterBoundError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace certkit
