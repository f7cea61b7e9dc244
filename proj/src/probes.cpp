#include "chronometry/probes.hpp"

#include "chronometry/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chronometry {

Wavefunction gaussian_probe(const Grid& grid, double center, double sigma) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("gaussian probe needs sigma > 0");
    }
    Wavefunction f(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        double u = (grid.points[j] - center) / sigma;
        f[j] = cdouble(std::exp(-0.5 * u * u), 0.0);
    }
    return f;
}

Wavefunction tapered_gaussian_probe(const Grid& grid, double center, double sigma) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("tapered probe needs sigma > 0");
    }
    double half = 0.5 * (grid.b - grid.a);
    double scale = 1.0 / (half * half * half * half);
    Wavefunction f(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        double x = grid.points[j];
        // (x - a) and (b - x) are exact zeros at the pinned endpoints, so the
        // window kills the probe there without any rounding residue.
        double w = (x - grid.a) * (grid.b - x);
        double u = (x - center) / sigma;
        f[j] = cdouble(w * w * scale * std::exp(-0.5 * u * u), 0.0);
    }
    return f;
}

std::vector<Wavefunction> periodic_probe_set(const Grid& grid, double hbar) {
    if (hbar <= 0.0) {
        throw std::invalid_argument("periodic probe set needs hbar > 0");
    }
    double length = grid.b - grid.a;
    double center = 0.5 * (grid.a + grid.b);
    std::vector<Wavefunction> probes;
    probes.reserve(6);
    for (int k = 1; k <= 3; ++k) {
        double p = 2.0 * std::numbers::pi * static_cast<double>(k) * hbar / length;
        probes.push_back(sample_plane_wave(grid, p, hbar));
    }
    probes.push_back(gaussian_probe(grid, center, length / 10.0));
    probes.push_back(gaussian_probe(grid, center - length / 8.0, length / 12.0));
    FockSpace tight = make_fock_space(8, 256.0 / (length * length), 1.0, 1.0, 1.0);
    probes.push_back(oscillator_eigenfunction(grid, 2, tight, center));
    return probes;
}

std::vector<Wavefunction> closed_probe_set(const Grid& grid) {
    double length = grid.b - grid.a;
    double center = 0.5 * (grid.a + grid.b);
    std::vector<Wavefunction> probes;
    probes.reserve(6);
    probes.push_back(gaussian_probe(grid, center, length / 8.0));
    probes.push_back(tapered_gaussian_probe(grid, center + length / 8.0, length / 4.0));
    probes.push_back(tapered_gaussian_probe(grid, center - length / 8.0, length / 5.0));
    probes.push_back(tapered_gaussian_probe(grid, center, length / 6.0));
    FockSpace tight = make_fock_space(8, 256.0 / (length * length), 1.0, 1.0, 1.0);
    probes.push_back(oscillator_eigenfunction(grid, 1, tight, center));
    probes.push_back(oscillator_eigenfunction(grid, 2, tight, center));
    return probes;
}

}  // namespace chronometry
