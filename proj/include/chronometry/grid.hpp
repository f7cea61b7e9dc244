#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "chronometry/matrix.hpp"

namespace chronometry {

// closed: both endpoints are grid points and quadrature is the trapezoid
// rule. periodic: the right endpoint is identified with the left one, the
// last point sits one spacing before it, and quadrature weights are uniform.
enum class Topology { closed, periodic };

struct Grid {
    double a = 0.0;
    double b = 0.0;
    std::size_t n = 0;
    Topology topology = Topology::closed;
    double spacing = 0.0;
    std::vector<double> points;
    std::vector<double> weights;
};

Grid make_uniform_grid(double a, double b, std::size_t n, Topology topology);

using Wavefunction = std::vector<cdouble>;

Wavefunction sample(const Grid& grid, const std::function<cdouble(double)>& f);

// exp(i p x / hbar) at each grid point
Wavefunction sample_plane_wave(const Grid& grid, double p, double hbar);

// sum over j of weight_j * conj(f_j) * g_j
cdouble inner_product(const Grid& grid, const Wavefunction& f,
                      const Wavefunction& g);

double norm(const Grid& grid, const Wavefunction& f);

// f scaled to unit norm; throws std::runtime_error when the norm vanishes
Wavefunction normalized(const Grid& grid, const Wavefunction& f);

}  // namespace chronometry
