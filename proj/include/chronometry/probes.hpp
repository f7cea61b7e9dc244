#pragma once

#include "chronometry/grid.hpp"

#include <vector>

namespace chronometry {

// Unit-amplitude real Gaussian bump exp(-(x - center)^2 / (2 sigma^2)).
Wavefunction gaussian_probe(const Grid& grid, double center, double sigma);

// Gaussian bump multiplied by the window ((x - a)(b - x))^2 / (L/2)^4, which
// is exactly zero at both boundary points and order h^2 beside them.
Wavefunction tapered_gaussian_probe(const Grid& grid, double center, double sigma);

// Six probes for uniform-weight grids: three plane waves commensurate with
// the box, two Gaussians, and one oscillator eigenfunction.
std::vector<Wavefunction> periodic_probe_set(const Grid& grid, double hbar);

// Six boundary-decayed probes for closed grids: one centered Gaussian, three
// tapered Gaussians, and two tightly confined oscillator eigenfunctions.
std::vector<Wavefunction> closed_probe_set(const Grid& grid);

}  // namespace chronometry
