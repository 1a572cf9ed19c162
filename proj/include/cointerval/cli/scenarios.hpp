#pragma once

#include <string>
#include <vector>

#include "cointerval/cli/suite.hpp"

namespace cointerval::cli {

/// The fixed reproduction scenarios, in canonical order.
const std::vector<std::string>& scenario_names();

/// Runs a scenario under its pinned configuration. Each case records the
/// status it is expected to reach; the verdict passes when every case does.
/// Throws UnknownScenario.
Report reproduce(const std::string& name);

/// Where the golden payload for `name` lives by default.
std::string golden_path(const std::string& name);

}  // namespace cointerval::cli
