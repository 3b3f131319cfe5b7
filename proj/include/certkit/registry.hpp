#pragma once

#include <optional>
#include <string>
#include <vector>

#include "certkit/reduction.hpp"

namespace certkit {

// Every named reduction, plus two harness self-checks: "identity[:<kind>]" (subset_sum by
// default) and "mutant-ss-shift", a deliberately broken SS -> SS map that adds 1 to the target.
std::optional<Reduction> find_reduction(const std::string& name);
std::vector<std::string> reduction_names();

// "a,b,c" composes left to right. Throws std::invalid_argument on an unknown name and
// UnsupportedKindError on a kind mismatch.
Reduction parse_pipeline(const std::string& spec);

Reduction mutant_ss_shift();

}  // namespace certkit
