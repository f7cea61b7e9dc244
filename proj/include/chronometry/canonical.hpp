#pragma once

#include "chronometry/grid.hpp"
#include "chronometry/operators.hpp"

namespace chronometry {

// Sign branch of the velocity operator -+ (i hbar / m) d/dx. The minus
// branch gives a plane wave exp(i p x / hbar) the reading p / m.
enum class VelocityBranch { minus, plus };

// standard: (i / hbar) <[H, A]>. hbar_scaled: i hbar <[A, H]>, an alternate
// normalization that differs from the standard one by a factor -hbar^2.
enum class RateConvention { standard, hbar_scaled };

// -i hbar d/dx
LinearOperator momentum_operator(const Grid& grid, double hbar);

// -(hbar^2 / 2m) d^2/dx^2
LinearOperator kinetic_operator(const Grid& grid, double mass, double hbar);

// -(hbar^2 / p^2) d^2/dx^2, reading the traversed distance of a plane wave
LinearOperator displacement_operator(const Grid& grid, double momentum,
                                     double hbar);

// (m / p^2) times the momentum operator, i.e. -(i hbar m / p^2) d/dx.
// mass may be zero or negative; zero mass yields the zero operator.
LinearOperator time_operator(const Grid& grid, double mass, double momentum,
                             double hbar);

LinearOperator velocity_operator(const Grid& grid, double mass, double hbar,
                                 VelocityBranch branch);

// b - a
double expected_displacement(double a, double b);

// m (b - a) / p
double expected_time(double mass, double momentum, double a, double b);

// Evolution rate of <A> under H in the chosen convention, evaluated on f.
cdouble heisenberg_rate(const LinearOperator& hamiltonian,
                        const LinearOperator& observable, const Wavefunction& f,
                        double hbar, RateConvention convention);

}  // namespace chronometry
