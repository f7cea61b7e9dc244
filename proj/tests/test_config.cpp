#include "doctest.h"

#include "chronometry/config.hpp"

#include <string>

using namespace chronometry;

namespace {

std::string message_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("flat key=value lines populate the config") {
    ExperimentConfig c = parse_config(
        "experiment=massless\n"
        "m=0\n"
        "p=1.5\n"
        "n=64\n"
        "topology=closed\n"
        "format=json\n");
    CHECK(c.experiment == "massless");
    REQUIRE(c.mass.has_value());
    CHECK(*c.mass == 0.0);
    CHECK(*c.momentum == 1.5);
    CHECK(*c.n == 64);
    CHECK(*c.topology == Topology::closed);
    CHECK(c.format == OutputFormat::json);
    CHECK_FALSE(c.a.has_value());
    CHECK_FALSE(c.hbar.has_value());
}

TEST_CASE("section headers scope keys to their parameter group") {
    ExperimentConfig c = parse_config(
        "experiment=hermiticity\n"
        "[grid]\n"
        "a=0\n"
        "b=4\n"
        "[particle]\n"
        "hbar=0.5\n"
        "[fock]\n"
        "dim=16\n"
        "omega=2\n"
        "p_eff=3\n"
        "[scan]\n"
        "doublings=4\n"
        "refinements=2\n"
        "[output]\n"
        "out=report.csv\n");
    CHECK(*c.a == 0.0);
    CHECK(*c.b == 4.0);
    CHECK(*c.hbar == 0.5);
    CHECK(*c.fock_dim == 16);
    CHECK(*c.omega == 2.0);
    CHECK(*c.p_eff == 3.0);
    CHECK(*c.doublings == 4);
    CHECK(*c.refinements == 2);
    CHECK(c.out == "report.csv");
}

TEST_CASE("comments and blank lines are ignored, inline comments stripped") {
    ExperimentConfig c = parse_config(
        "# full-line comment\n"
        "\n"
        "experiment=jump_time   # trailing comment\n"
        "n=128 # also fine\n");
    CHECK(c.experiment == "jump_time");
    CHECK(*c.n == 128);
}

TEST_CASE("unknown keys are hard errors that cite the line") {
    std::string msg = message_of("experiment=massless\nm=0\nbogus=1\n");
    CHECK(msg.find("bogus") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
}

TEST_CASE("a key in the wrong section is rejected") {
    std::string msg = message_of("[grid]\nm=1\n");
    CHECK(msg.find("'m'") != std::string::npos);
    CHECK(msg.find("[grid]") != std::string::npos);
}

TEST_CASE("unparseable numbers cite key and line") {
    std::string msg = message_of("a=abc\n");
    CHECK(msg.find("'a'") != std::string::npos);
    CHECK(msg.find("line 1") != std::string::npos);
}

TEST_CASE("enumerated values reject unknown spellings") {
    CHECK(message_of("topology=twisted\n").find("topology") != std::string::npos);
    CHECK(message_of("format=xml\n").find("format") != std::string::npos);
    CHECK(message_of("[nowhere]\n").find("nowhere") != std::string::npos);
}

TEST_CASE("missing separators and negative counts are parse errors") {
    CHECK(message_of("just words\n").find("line 1") != std::string::npos);
    CHECK(message_of("n=-4\n").find("'n'") != std::string::npos);
}

TEST_CASE("tolerance overrides must be strictly positive") {
    ExperimentConfig c = parse_config("tol.reading=1e-9\n[tolerances]\nslope=1e-6\n");
    CHECK(c.tolerance_overrides.at("reading") == 1e-9);
    CHECK(c.tolerance_overrides.at("slope") == 1e-6);
    CHECK(message_of("tol.reading=0\n").find("positive") != std::string::npos);
    CHECK(message_of("tol.reading=-1\n").find("positive") != std::string::npos);
}

TEST_CASE("later assignments win over earlier ones") {
    ExperimentConfig c = parse_config("p=1\np=2\n");
    CHECK(*c.momentum == 2.0);
}

TEST_CASE("command-line overrides reuse the key grammar") {
    ExperimentConfig c = parse_config("experiment=displacement\nn=128\n");
    apply_overrides(c, {"n=512", "tol.reading=1e-4", "out=x.json"});
    CHECK(*c.n == 512);
    CHECK(c.tolerance_overrides.at("reading") == 1e-4);
    CHECK(c.out == "x.json");
    CHECK_THROWS_AS(apply_overrides(c, {"zzz=1"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(c, {"no_separator"}), ConfigError);
}

TEST_CASE("empty input yields an unset config") {
    ExperimentConfig c = parse_config("");
    CHECK(c.experiment.empty());
    CHECK_FALSE(c.n.has_value());
    CHECK(c.format == OutputFormat::csv);
    CHECK(c.out.empty());
    CHECK(c.tolerance_overrides.empty());
}
