#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "stressforge/model.hpp"
#include "stressforge/signature.hpp"
#include "stressforge/strata.hpp"
#include "stressforge/surgery.hpp"

namespace stressforge {

using Json = nlohmann::ordered_json;

struct ParsedModel {
    Framework framework;
    std::map<std::string, int> roles;
};

/// Exact model file: dimension, vertices as "p/q" strings or integers,
/// 1-based edge pairs, optional role map. Floating point literals are
/// rejected, never rounded.
ParsedModel parse_model_json(const Json& j);
ParsedModel parse_model(const std::string& path);

Json write_model(const Framework& f, const std::map<std::string, int>& roles = {});

/// Deterministic single-document report serialization.
std::string dump_report(const Json& report);

Json signature_to_json(const FiberSignature& sig);
Json stress_space_to_json(const StressSpace& space);
Json verdict_to_json(const SurgeryVerdict& v);
Json census_report_to_json(const CensusReport& r);
Json error_to_json(const Error& e);

} // namespace stressforge
