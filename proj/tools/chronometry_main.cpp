#include "CLI11.hpp"

#include "chronometry/config.hpp"
#include "chronometry/experiments.hpp"
#include "chronometry/kernels.hpp"
#include "chronometry/report.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace chronometry;

// Exit codes: 0 all criteria pass, 1 some criterion failed, 2 config or
// usage error, 3 runtime numeric error.
int main(int argc, char** argv) {
    CLI::App app{"Numerical workbench for a grid and ladder model of a quantum clock"};
    app.require_subcommand(1);

    std::string experiment;
    std::string config_path;
    std::string format_name;
    std::string out_path;
    std::vector<std::string> assignments;

    CLI::App* run = app.add_subcommand("run", "Run one experiment and emit its report");
    run->add_option("--experiment", experiment, "Experiment name (see 'list')");
    run->add_option("--config", config_path,
                    "Config file: key=value lines with optional [grid]/[particle]/"
                    "[fock]/[scan]/[tolerances]/[output] sections");
    run->add_option("--set", assignments,
                    "Override one key on top of the config file, e.g. --set n=512");
    run->add_option("--format", format_name, "Report format: csv or json");
    run->add_option("--out", out_path, "Write the report to this file instead of stdout");

    CLI::App* list = app.add_subcommand("list", "List the available experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list->parsed()) {
        for (const ExperimentInfo& info : experiment_catalog()) {
            std::cout << info.name << "  -  " << info.description << "\n";
        }
        return 0;
    }

    try {
        ExperimentConfig config;
        if (!config_path.empty()) {
            config = parse_config_file(config_path);
        }
        if (!experiment.empty()) {
            config.experiment = experiment;
        }
        apply_overrides(config, assignments);
        if (!format_name.empty()) {
            if (format_name == "csv") {
                config.format = OutputFormat::csv;
            } else if (format_name == "json") {
                config.format = OutputFormat::json;
            } else {
                throw ConfigError("invalid --format '" + format_name +
                                  "' (expected csv or json)");
            }
        }
        if (!out_path.empty()) {
            config.out = out_path;
        }
        // resolve the kernel lane up front so a bad CHRONOMETRY_KERNELS value
        // is diagnosed even for experiments that never touch a kernel
        kernels::active();
        ExperimentReport report = run_experiment(config);
        write_report(report, config.format, config.out);
        return report.all_pass() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
}
