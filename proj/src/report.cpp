#include "chronometry/report.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace chronometry {
namespace {

std::string format_value(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

}  // namespace

bool ExperimentReport::all_pass() const {
    for (const ReportRow& row : rows) {
        if (!row.pass) {
            return false;
        }
    }
    return true;
}

ReportRow make_row(std::string quantity, double computed, double reference,
                   std::string provenance, double tolerance) {
    ReportRow row;
    row.quantity = std::move(quantity);
    row.computed = computed;
    row.reference = reference;
    row.provenance = std::move(provenance);
    row.residual = std::abs(computed - reference);
    row.tolerance = tolerance;
    row.pass = row.residual <= tolerance;
    return row;
}

std::string to_csv(const ExperimentReport& report) {
    std::string out = "quantity,computed,reference,residual,tolerance,pass\n";
    for (const ReportRow& row : report.rows) {
        out += row.quantity;
        out += ',';
        out += format_value(row.computed);
        out += ',';
        out += format_value(row.reference);
        out += ',';
        out += format_value(row.residual);
        out += ',';
        out += format_value(row.tolerance);
        out += ',';
        out += row.pass ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string to_json(const ExperimentReport& report) {
    nlohmann::ordered_json j;
    j["experiment"] = report.experiment;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.inputs) {
        inputs[key] = value;
    }
    j["inputs"] = inputs;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::ordered_json r;
        r["quantity"] = row.quantity;
        r["computed"] = row.computed;
        r["reference"] = row.reference;
        r["provenance"] = row.provenance;
        r["residual"] = row.residual;
        r["tolerance"] = row.tolerance;
        r["pass"] = row.pass;
        rows.push_back(r);
    }
    j["rows"] = rows;
    j["pass"] = report.all_pass();
    return j.dump(2) + "\n";
}

void write_report(const ExperimentReport& report, OutputFormat format, const std::string& path) {
    std::string text = format == OutputFormat::csv ? to_csv(report) : to_json(report);
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write report file: " + path);
    }
    out << text;
    if (!out) {
        throw ConfigError("cannot write report file: " + path);
    }
}

}  // namespace chronometry
