#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chronometry/grid.hpp"

using chronometry::cdouble;
using chronometry::Grid;
using chronometry::Topology;
using chronometry::Wavefunction;

TEST_CASE("a closed grid carries trapezoid weights that sum to the length") {
    Grid g = chronometry::make_uniform_grid(0.0, 4.0, 5, Topology::closed);
    CHECK(g.spacing == doctest::Approx(1.0));
    REQUIRE(g.points.size() == 5);
    CHECK(g.points.front() == doctest::Approx(0.0));
    CHECK(g.points.back() == doctest::Approx(4.0));
    CHECK(g.weights.front() == doctest::Approx(0.5));
    CHECK(g.weights[2] == doctest::Approx(1.0));
    CHECK(g.weights.back() == doctest::Approx(0.5));
    double total = 0.0;
    for (double w : g.weights) total += w;
    CHECK(total == doctest::Approx(4.0));
}

TEST_CASE("a periodic grid has uniform weights and omits the right endpoint") {
    Grid g = chronometry::make_uniform_grid(0.0, 4.0, 4, Topology::periodic);
    CHECK(g.spacing == doctest::Approx(1.0));
    REQUIRE(g.points.size() == 4);
    CHECK(g.points.back() == doctest::Approx(3.0));
    for (double w : g.weights) CHECK(w == doctest::Approx(1.0));
}

TEST_CASE("grid construction rejects degenerate parameters") {
    CHECK_THROWS_AS(chronometry::make_uniform_grid(1.0, 1.0, 8, Topology::closed),
                    std::invalid_argument);
    CHECK_THROWS_AS(chronometry::make_uniform_grid(2.0, 1.0, 8, Topology::closed),
                    std::invalid_argument);
    CHECK_THROWS_AS(chronometry::make_uniform_grid(0.0, 1.0, 2, Topology::periodic),
                    std::invalid_argument);
}

TEST_CASE("normalizing a constant amplitude three on a length-four box gives one half") {
    Grid g = chronometry::make_uniform_grid(0.0, 4.0, 33, Topology::closed);
    Wavefunction f = chronometry::sample(g, [](double) { return cdouble(3.0, 0.0); });
    CHECK(chronometry::norm(g, f) == doctest::Approx(6.0));
    Wavefunction u = chronometry::normalized(g, f);
    CHECK(u[7].real() == doctest::Approx(0.5));
    CHECK(u[7].imag() == doctest::Approx(0.0));
    CHECK(chronometry::norm(g, u) == doctest::Approx(1.0));
}

TEST_CASE("trapezoid quadrature integrates a linear function exactly") {
    Grid g = chronometry::make_uniform_grid(0.0, 1.0, 11, Topology::closed);
    Wavefunction one = chronometry::sample(g, [](double) { return cdouble(1.0, 0.0); });
    Wavefunction x = chronometry::sample(g, [](double t) { return cdouble(t, 0.0); });
    cdouble integral = chronometry::inner_product(g, one, x);
    CHECK(integral.real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integral.imag() == 0.0);
}

TEST_CASE("trapezoid quadrature is spectrally accurate for a decayed gaussian") {
    Grid g = chronometry::make_uniform_grid(-12.0, 12.0, 513, Topology::closed);
    Wavefunction f =
        chronometry::sample(g, [](double t) { return cdouble(std::exp(-t * t), 0.0); });
    Wavefunction one = chronometry::sample(g, [](double) { return cdouble(1.0, 0.0); });
    double integral = chronometry::inner_product(g, one, f).real();
    CHECK(std::abs(integral - std::sqrt(std::numbers::pi)) <= 1e-13);
}

TEST_CASE("plane wave samples take frozen complex values") {
    Grid g = chronometry::make_uniform_grid(0.0, 4.0, 4, Topology::periodic);
    Wavefunction pw = chronometry::sample_plane_wave(g, 1.0, 1.0);
    // exp(i*1) with x = points[1] = 1
    CHECK(pw[1].real() == doctest::Approx(0.5403023058681398).epsilon(1e-15));
    CHECK(pw[1].imag() == doctest::Approx(0.8414709848078965).epsilon(1e-15));
}

TEST_CASE("commensurate plane waves are orthonormal under periodic quadrature") {
    const double length = 2.0 * std::numbers::pi;
    Grid g = chronometry::make_uniform_grid(0.0, length, 64, Topology::periodic);
    Wavefunction k1 = chronometry::sample_plane_wave(g, 1.0, 1.0);
    Wavefunction k2 = chronometry::sample_plane_wave(g, 2.0, 1.0);
    CHECK(chronometry::inner_product(g, k1, k1).real() ==
          doctest::Approx(length).epsilon(1e-13));
    CHECK(std::abs(chronometry::inner_product(g, k1, k2)) <= 1e-12);
}

TEST_CASE("normalizing the zero function is reported as an error") {
    Grid g = chronometry::make_uniform_grid(0.0, 1.0, 8, Topology::closed);
    Wavefunction z(g.n, cdouble(0.0, 0.0));
    CHECK_THROWS_AS(chronometry::normalized(g, z), std::runtime_error);
}

TEST_CASE("inner products validate the sample count") {
    Grid g = chronometry::make_uniform_grid(0.0, 1.0, 8, Topology::closed);
    Wavefunction short_vec(5, cdouble(1.0, 0.0));
    Wavefunction full(8, cdouble(1.0, 0.0));
    CHECK_THROWS_AS(chronometry::inner_product(g, short_vec, full),
                    std::invalid_argument);
}
