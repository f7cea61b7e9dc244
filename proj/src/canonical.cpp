#include "chronometry/canonical.hpp"

#include "chronometry/kernels.hpp"

#include <stdexcept>

namespace chronometry {

namespace {

void require_hbar(double hbar) {
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
}

// Scales the stencil in place so building an operator never holds more than
// one dense matrix; rounding matches the out-of-place path entry for entry.
LinearOperator scaled_in_place(cdouble alpha, LinearOperator op) {
    std::size_t count = op.matrix.dim() * op.matrix.dim();
    kernels::active().scale(alpha, op.matrix.data(), op.matrix.data(), count);
    return op;
}

}  // namespace

LinearOperator momentum_operator(const Grid& grid, double hbar) {
    require_hbar(hbar);
    return scaled_in_place(cdouble(0.0, -hbar), first_derivative(grid));
}

LinearOperator kinetic_operator(const Grid& grid, double mass, double hbar) {
    require_hbar(hbar);
    if (mass == 0.0) throw std::invalid_argument("kinetic term requires mass != 0");
    return scaled_in_place(cdouble(-hbar * hbar / (2.0 * mass), 0.0),
                           second_derivative(grid));
}

LinearOperator displacement_operator(const Grid& grid, double momentum,
                                     double hbar) {
    require_hbar(hbar);
    if (momentum == 0.0)
        throw std::invalid_argument("displacement requires momentum != 0");
    return scaled_in_place(cdouble(-hbar * hbar / (momentum * momentum), 0.0),
                           second_derivative(grid));
}

LinearOperator time_operator(const Grid& grid, double mass, double momentum,
                             double hbar) {
    require_hbar(hbar);
    if (momentum == 0.0)
        throw std::invalid_argument("time operator requires momentum != 0");
    return scaled_in_place(cdouble(mass / (momentum * momentum), 0.0),
                           momentum_operator(grid, hbar));
}

LinearOperator velocity_operator(const Grid& grid, double mass, double hbar,
                                 VelocityBranch branch) {
    require_hbar(hbar);
    if (mass == 0.0) throw std::invalid_argument("velocity requires mass != 0");
    const double sign = branch == VelocityBranch::minus ? 1.0 : -1.0;
    return scaled_in_place(cdouble(sign / mass, 0.0),
                           momentum_operator(grid, hbar));
}

double expected_displacement(double a, double b) { return b - a; }

double expected_time(double mass, double momentum, double a, double b) {
    if (momentum == 0.0)
        throw std::invalid_argument("closed-form time requires momentum != 0");
    return mass * (b - a) / momentum;
}

cdouble heisenberg_rate(const LinearOperator& hamiltonian,
                        const LinearOperator& observable, const Wavefunction& f,
                        double hbar, RateConvention convention) {
    require_hbar(hbar);
    if (convention == RateConvention::standard) {
        LinearOperator bracket = commutator(hamiltonian, observable);
        return cdouble(0.0, 1.0 / hbar) * expectation(bracket, f);
    }
    LinearOperator bracket = commutator(observable, hamiltonian);
    return cdouble(0.0, hbar) * expectation(bracket, f);
}

}  // namespace chronometry
