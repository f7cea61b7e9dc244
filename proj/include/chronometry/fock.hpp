#pragma once

#include <cstddef>

#include "chronometry/grid.hpp"
#include "chronometry/matrix.hpp"

namespace chronometry {

// Truncated number-state basis |0> .. |dim-1> for one oscillator mode.
// p_eff is the momentum scale converting the momentum ladder into the time
// ladder. mass may be negative here; only the ladder amplitude
// sqrt(m hbar omega / 2) insists on a positive mass. Results touching the
// top level |dim-1> carry truncation artifacts, so level-indexed operations
// accept n <= dim-2 only.
struct FockSpace {
    std::size_t dim = 0;
    double mass = 0.0;
    double omega = 0.0;
    double hbar = 0.0;
    double p_eff = 0.0;
};

FockSpace make_fock_space(std::size_t dim, double mass, double omega, double hbar,
                          double p_eff);

// a |n> = sqrt(n) |n-1>
DenseMatrix lowering(const FockSpace& space);

// a' |n> = sqrt(n+1) |n+1>, the exact conjugate transpose of lowering
DenseMatrix raising(const FockSpace& space);

// i sqrt(m hbar omega / 2) (a - a'); exactly hermitian by construction
DenseMatrix momentum_ladder(const FockSpace& space);

// (m / p_eff^2) times the momentum ladder; hermitian with a zero diagonal
DenseMatrix time_ladder(const FockSpace& space);

// <n| m |n> by direct basis indexing; n is guarded away from the truncation
// edge (n <= dim-2)
cdouble fock_expectation(const DenseMatrix& m, std::size_t n,
                         const FockSpace& space);

// smallest time window hbar / (2 delta_e) compatible with the energy-time
// inequality for a level gap delta_e
double jump_time_bound(double delta_e, double hbar);

struct JumpCheck {
    bool satisfied = false;
    double tau_j = 0.0;
    double delta_t = 0.0;
    double margin = 0.0;  // delta_t - tau_j
};

// true iff tau_j <= delta_t (inclusive); requires tau_j >= 0 and delta_t > 0
JumpCheck check_jump_inequality(double tau_j, double delta_t);

// Oscillator eigenfunction about `center`, sampled on a grid and
// renormalized under its quadrature. level is guarded to dim-2; throws
// std::runtime_error when the tail has not decayed below 1e-10 at the box
// edge.
Wavefunction oscillator_eigenfunction(const Grid& grid, std::size_t level,
                                      const FockSpace& space, double center = 0.0);

}  // namespace chronometry
