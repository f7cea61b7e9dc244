#pragma once

#include "chronometry/config.hpp"
#include "chronometry/report.hpp"

#include <string>
#include <vector>

namespace chronometry {

struct ExperimentInfo {
    std::string name;
    std::string description;
};

// Every runnable experiment, in display order.
const std::vector<ExperimentInfo>& experiment_catalog();

// Runs the named experiment with the given settings. Unknown names and
// unusable parameter combinations raise ConfigError; numeric breakdowns
// raise std::runtime_error. Each experiment substitutes documented defaults
// for parameters it reads that the config leaves unset.
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace chronometry
