#pragma once

// nlohmann/json adapters shared by the serialization sources. Not installed.

#include <json.hpp>

#include "vlcsec/scenario.hpp"

namespace vlcsec {

using json = nlohmann::ordered_json;

json to_json_value(const ScenarioConfig& c);
// Overlays keys present in `j` onto `base`.
ScenarioConfig config_from_json_value(const json& j, ScenarioConfig base = {});

} // namespace vlcsec
