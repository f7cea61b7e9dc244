#include "chronometry/config.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace chronometry {
namespace {

enum class Section { none, grid, particle, fock, scan, tolerances, output };

std::string trim(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return "";
    }
    std::size_t last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& message, const std::string& where) {
    throw ConfigError(message + " (" + where + ")");
}

double parse_double(const std::string& key, const std::string& value, const std::string& where) {
    try {
        std::size_t pos = 0;
        double parsed = std::stod(value, &pos);
        if (pos == value.size() && !value.empty()) {
            return parsed;
        }
    } catch (const std::exception&) {
    }
    fail("invalid value for key '" + key + "': '" + value + "'", where);
}

std::size_t parse_count(const std::string& key, const std::string& value, const std::string& where) {
    if (!value.empty() && value.front() != '-') {
        try {
            std::size_t pos = 0;
            unsigned long long parsed = std::stoull(value, &pos);
            if (pos == value.size()) {
                return static_cast<std::size_t>(parsed);
            }
        } catch (const std::exception&) {
        }
    }
    fail("invalid value for key '" + key + "': '" + value + "'", where);
}

Topology parse_topology(const std::string& value, const std::string& where) {
    if (value == "closed") {
        return Topology::closed;
    }
    if (value == "periodic") {
        return Topology::periodic;
    }
    fail("invalid value for key 'topology': '" + value + "' (expected closed or periodic)", where);
}

OutputFormat parse_format(const std::string& value, const std::string& where) {
    if (value == "csv") {
        return OutputFormat::csv;
    }
    if (value == "json") {
        return OutputFormat::json;
    }
    fail("invalid value for key 'format': '" + value + "' (expected csv or json)", where);
}

void set_tolerance(ExperimentConfig& config, const std::string& name, const std::string& value,
                   const std::string& where) {
    double tol = parse_double("tol." + name, value, where);
    if (tol <= 0.0) {
        fail("tolerance '" + name + "' must be strictly positive", where);
    }
    config.tolerance_overrides[name] = tol;
}

// Assigns one key inside the given section scope; Section::none admits every
// key (the flat form), a named section admits only its own group.
void assign(ExperimentConfig& config, Section section, const std::string& key,
            const std::string& value, const std::string& where) {
    bool flat = section == Section::none;
    if (section == Section::tolerances) {
        set_tolerance(config, key, value, where);
        return;
    }
    if (flat && key.rfind("tol.", 0) == 0 && key.size() > 4) {
        set_tolerance(config, key.substr(4), value, where);
        return;
    }
    if (flat && key == "experiment") {
        config.experiment = value;
        return;
    }
    if (flat || section == Section::grid) {
        if (key == "a") { config.a = parse_double(key, value, where); return; }
        if (key == "b") { config.b = parse_double(key, value, where); return; }
        if (key == "n") { config.n = parse_count(key, value, where); return; }
        if (key == "topology") { config.topology = parse_topology(value, where); return; }
    }
    if (flat || section == Section::particle) {
        if (key == "m") { config.mass = parse_double(key, value, where); return; }
        if (key == "p") { config.momentum = parse_double(key, value, where); return; }
        if (key == "v") { config.velocity = parse_double(key, value, where); return; }
        if (key == "hbar") { config.hbar = parse_double(key, value, where); return; }
    }
    if (flat || section == Section::fock) {
        if (key == "dim") { config.fock_dim = parse_count(key, value, where); return; }
        if (key == "omega") { config.omega = parse_double(key, value, where); return; }
        if (key == "p_eff") { config.p_eff = parse_double(key, value, where); return; }
    }
    if (flat || section == Section::scan) {
        if (key == "doublings") { config.doublings = parse_count(key, value, where); return; }
        if (key == "refinements") { config.refinements = parse_count(key, value, where); return; }
    }
    if (flat || section == Section::output) {
        if (key == "format") { config.format = parse_format(value, where); return; }
        if (key == "out") { config.out = value; return; }
    }
    if (flat) {
        fail("unknown key '" + key + "'", where);
    }
    static const char* names[] = {"", "grid", "particle", "fock", "scan", "tolerances", "output"};
    fail("unknown key '" + key + "' in section [" + names[static_cast<int>(section)] + "]", where);
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    Section section = Section::none;
    std::istringstream stream(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string where = "line " + std::to_string(line_no);
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                fail("unterminated section header '" + line + "'", where);
            }
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name == "grid") section = Section::grid;
            else if (name == "particle") section = Section::particle;
            else if (name == "fock") section = Section::fock;
            else if (name == "scan") section = Section::scan;
            else if (name == "tolerances") section = Section::tolerances;
            else if (name == "output") section = Section::output;
            else fail("unknown section '[" + name + "]'", where);
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail("expected key=value, got '" + line + "'", where);
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            fail("empty key", where);
        }
        assign(config, section, key, value, where);
    }
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void apply_overrides(ExperimentConfig& config, const std::vector<std::string>& assignments) {
    for (const std::string& assignment : assignments) {
        std::string where = "--set '" + assignment + "'";
        std::size_t eq = assignment.find('=');
        if (eq == std::string::npos) {
            fail("expected key=value", where);
        }
        std::string key = trim(assignment.substr(0, eq));
        std::string value = trim(assignment.substr(eq + 1));
        if (key.empty()) {
            fail("empty key", where);
        }
        assign(config, Section::none, key, value, where);
    }
}

}  // namespace chronometry
