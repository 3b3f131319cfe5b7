#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "certkit/instances.hpp"
#include "certkit/oracles.hpp"

namespace certkit {

using Json = nlohmann::ordered_json;

Json instance_to_json(const ProblemInstance& inst);
// Throws ValidationError on schema violations or failed invariants.
ProblemInstance instance_from_json(const Json& j);

std::string dump_instance(const ProblemInstance& inst);
ProblemInstance parse_instance(std::string_view text);

Json solution_to_json(const Solution& sol);
Solution solution_from_json(const Json& j);
Json verdict_to_json(const Verdict& v);

}  // namespace certkit
