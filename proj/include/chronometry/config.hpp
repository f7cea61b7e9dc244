#pragma once

#include "chronometry/grid.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chronometry {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, json };

// Parsed experiment settings. Optional fields were not mentioned in the
// input; each experiment substitutes its own defaults and reads only the
// parameter groups it declares.
struct ExperimentConfig {
    std::string experiment;

    // grid group
    std::optional<double> a;
    std::optional<double> b;
    std::optional<std::size_t> n;
    std::optional<Topology> topology;

    // particle group
    std::optional<double> mass;
    std::optional<double> momentum;
    std::optional<double> velocity;
    std::optional<double> hbar;

    // fock group
    std::optional<std::size_t> fock_dim;
    std::optional<double> omega;
    std::optional<double> p_eff;

    // scan group
    std::optional<std::size_t> doublings;
    std::optional<std::size_t> refinements;

    // tolerances group: per-quantity overrides, strictly positive
    std::map<std::string, double> tolerance_overrides;

    // output group
    OutputFormat format = OutputFormat::csv;
    std::string out;  // empty means stdout
};

// Parses the key=value config grammar: optional [grid]/[particle]/[fock]/
// [scan]/[tolerances]/[output] sections, '#' comments, flat keys allowed
// without a section. Unknown keys, unknown sections, bad values and
// nonpositive tolerances raise ConfigError with the line number.
ExperimentConfig parse_config(const std::string& text);

// Reads and parses a config file; a missing file raises ConfigError.
ExperimentConfig parse_config_file(const std::string& path);

// Applies key=value assignments (the --set flag) on top of a config using
// the same key grammar; tolerance overrides use the tol.<name> form.
void apply_overrides(ExperimentConfig& config, const std::vector<std::string>& assignments);

}  // namespace chronometry
