#pragma once

#include "chronometry/config.hpp"

#include <string>
#include <vector>

namespace chronometry {

// One verified quantity: a computed value against its reference, with the
// provenance of the reference (closed_form, discrete_symbol, exact_zero,
// quadrature_bound, fit) and the acceptance tolerance.
struct ReportRow {
    std::string quantity;
    double computed = 0.0;
    double reference = 0.0;
    std::string provenance;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Outcome of one experiment: the echoed inputs and one row per criterion.
struct ExperimentReport {
    std::string experiment;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ReportRow> rows;
    bool all_pass() const;
};

// Builds a row; residual = |computed - reference|, pass = residual <= tolerance.
ReportRow make_row(std::string quantity, double computed, double reference,
                   std::string provenance, double tolerance);

// CSV with the pinned header quantity,computed,reference,residual,tolerance,pass,
// values at 17 significant digits, one line per row, trailing newline.
std::string to_csv(const ExperimentReport& report);

// JSON object mirroring the report fields (inputs echo, rows, overall pass).
std::string to_json(const ExperimentReport& report);

// Serializes to the chosen format; empty path writes to stdout.
void write_report(const ExperimentReport& report, OutputFormat format, const std::string& path);

}  // namespace chronometry
