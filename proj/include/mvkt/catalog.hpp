#pragma once

#include <string>
#include <vector>

#include "mvkt/scenario.hpp"

namespace mvkt {

/// Names of the built-in scenarios, in presentation order.
const std::vector<std::string>& catalog_names();

/// Built-in scenario by name; unknown names raise SchemaError listing
/// the available entries.
Scenario catalog_scenario(const std::string& name);

}  // namespace mvkt
