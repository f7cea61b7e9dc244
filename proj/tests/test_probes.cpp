#include "doctest.h"

#include "chronometry/canonical.hpp"
#include "chronometry/grid.hpp"
#include "chronometry/operators.hpp"
#include "chronometry/probes.hpp"

#include <cmath>
#include <stdexcept>

using namespace chronometry;

TEST_CASE("gaussian probe peaks at its center with unit amplitude") {
    Grid g = make_uniform_grid(0.0, 4.0, 17, Topology::closed);
    Wavefunction f = gaussian_probe(g, 2.0, 0.5);
    CHECK(f[8].real() == 1.0);
    CHECK(f[8].imag() == 0.0);
    CHECK(f[4].real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(f[0].real() < 1e-3);
}

TEST_CASE("tapered probe vanishes exactly at both boundary points") {
    Grid g = make_uniform_grid(0.0, 4.0, 256, Topology::closed);
    Wavefunction f = tapered_gaussian_probe(g, 2.5, 1.0);
    CHECK(f.front() == cdouble(0.0, 0.0));
    CHECK(f.back() == cdouble(0.0, 0.0));
    for (std::size_t j = 1; j + 1 < g.n; ++j) {
        CHECK(f[j].real() > 0.0);
        CHECK(f[j].imag() == 0.0);
    }
}

TEST_CASE("closed probe set holds six boundary-decayed states of nonzero norm") {
    Grid g = make_uniform_grid(0.0, 4.0, 257, Topology::closed);
    auto probes = closed_probe_set(g);
    REQUIRE(probes.size() == 6);
    for (std::size_t i = 0; i < probes.size(); ++i) {
        const auto& f = probes[i];
        REQUIRE(f.size() == g.n);
        CHECK(norm(g, f) > 0.0);
        double edge = std::max(std::abs(f.front()), std::abs(f.back()));
        if (i == 0) {
            // the one plain Gaussian keeps a small boundary tail on purpose;
            // it is what exercises the corner defect of closed stencils
            CHECK(edge > 0.0);
            CHECK(edge <= 1e-3);
        } else {
            CHECK(edge <= 1e-10);
        }
    }
}

TEST_CASE("periodic probe set holds six states and keeps symmetry defects tiny") {
    Grid g = make_uniform_grid(0.0, 4.0, 256, Topology::periodic);
    auto probes = periodic_probe_set(g, 1.0);
    REQUIRE(probes.size() == 6);
    for (const auto& f : probes) {
        REQUIRE(f.size() == g.n);
        CHECK(norm(g, f) > 0.0);
    }
    LinearOperator t = time_operator(g, 1.0, 2.0, 1.0);
    HermiticityResidual r = hermiticity_residual(t, probes);
    CHECK(r.pairwise_max <= 1e-12);
    CHECK(r.adjoint_gap_max == 0.0);
}

TEST_CASE("closed-grid symmetry defect of the time reading shrinks about fourfold per halving") {
    auto residual = [](std::size_t n) {
        Grid g = make_uniform_grid(0.0, 4.0, n, Topology::closed);
        LinearOperator t = time_operator(g, 1.0, 2.0, 1.0);
        return hermiticity_residual(t, closed_probe_set(g)).pairwise_max;
    };
    double coarse = residual(256);
    double fine = residual(512);
    CHECK(coarse > 0.0);
    double ratio = coarse / fine;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("probe constructors reject degenerate widths") {
    Grid g = make_uniform_grid(0.0, 4.0, 17, Topology::closed);
    CHECK_THROWS_AS(gaussian_probe(g, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tapered_gaussian_probe(g, 2.0, -1.0), std::invalid_argument);
}
