#pragma once

#include "riskfield/scene.hpp"

#include <string>
#include <vector>

namespace riskfield {

/// Applies one `section.field=value` override (sections: riskmap, planner) to
/// the scenario's parameter blocks. Throws std::invalid_argument on unknown
/// keys or unparseable values.
void apply_override(Scenario& scenario, const std::string& key, const std::string& value);

/// Splits "key=value" and applies each entry in order.
void apply_overrides(Scenario& scenario, const std::vector<std::string>& assignments);

/// Names accepted by apply_override, for diagnostics.
std::vector<std::string> override_keys();

}  // namespace riskfield
