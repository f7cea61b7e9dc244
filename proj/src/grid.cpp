#include "chronometry/grid.hpp"

#include <cmath>
#include <stdexcept>

#include "chronometry/kernels.hpp"

namespace chronometry {

Grid make_uniform_grid(double a, double b, std::size_t n, Topology topology) {
    if (!(b > a)) throw std::invalid_argument("grid requires b > a");
    if (n < 3) throw std::invalid_argument("grid requires at least 3 points");
    Grid g;
    g.a = a;
    g.b = b;
    g.n = n;
    g.topology = topology;
    const double length = b - a;
    g.spacing = topology == Topology::closed ? length / static_cast<double>(n - 1)
                                             : length / static_cast<double>(n);
    g.points.resize(n);
    g.weights.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        g.points[j] = a + static_cast<double>(j) * g.spacing;
        g.weights[j] = g.spacing;
    }
    if (topology == Topology::closed) {
        g.points.back() = b;  // pin the endpoint against rounding drift
        g.weights.front() = 0.5 * g.spacing;
        g.weights.back() = 0.5 * g.spacing;
    }
    return g;
}

Wavefunction sample(const Grid& grid, const std::function<cdouble(double)>& f) {
    Wavefunction out(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) out[j] = f(grid.points[j]);
    return out;
}

Wavefunction sample_plane_wave(const Grid& grid, double p, double hbar) {
    if (hbar == 0.0) throw std::invalid_argument("plane wave requires hbar != 0");
    Wavefunction out(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double phase = p * grid.points[j] / hbar;
        out[j] = cdouble(std::cos(phase), std::sin(phase));
    }
    return out;
}

cdouble inner_product(const Grid& grid, const Wavefunction& f,
                      const Wavefunction& g) {
    if (f.size() != grid.n || g.size() != grid.n)
        throw std::invalid_argument("sample count does not match the grid");
    return kernels::active().dot_weighted(grid.weights.data(), f.data(), g.data(),
                                          grid.n);
}

double norm(const Grid& grid, const Wavefunction& f) {
    return std::sqrt(inner_product(grid, f, f).real());
}

Wavefunction normalized(const Grid& grid, const Wavefunction& f) {
    const double len = norm(grid, f);
    if (!(len > 0.0)) throw std::runtime_error("cannot normalize a zero function");
    Wavefunction out(f.size());
    kernels::active().scale(cdouble(1.0 / len, 0.0), f.data(), out.data(), f.size());
    return out;
}

}  // namespace chronometry
