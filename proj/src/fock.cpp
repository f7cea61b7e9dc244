#include "chronometry/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chronometry {

FockSpace make_fock_space(std::size_t dim, double mass, double omega, double hbar,
                          double p_eff) {
    if (dim < 3) throw std::invalid_argument("fock space requires dim >= 3");
    if (mass == 0.0) throw std::invalid_argument("fock space requires mass != 0");
    if (!(omega > 0.0)) throw std::invalid_argument("fock space requires omega > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("fock space requires hbar > 0");
    if (p_eff == 0.0) throw std::invalid_argument("fock space requires p_eff != 0");
    return {dim, mass, omega, hbar, p_eff};
}

DenseMatrix lowering(const FockSpace& space) {
    DenseMatrix a(space.dim);
    for (std::size_t n = 1; n < space.dim; ++n)
        a.at(n - 1, n) = cdouble(std::sqrt(static_cast<double>(n)), 0.0);
    return a;
}

DenseMatrix raising(const FockSpace& space) {
    return lowering(space).conj_transpose();
}

DenseMatrix momentum_ladder(const FockSpace& space) {
    if (!(space.mass > 0.0))
        throw std::invalid_argument(
            "momentum ladder requires a positive square-root argument; "
            "mass must be > 0");
    const double c = std::sqrt(space.mass * space.hbar * space.omega / 2.0);
    DenseMatrix m(space.dim);
    // i c (a - a'): the same product c*sqrt(n) lands on both triangles, so
    // hermiticity is exact rather than rounded.
    for (std::size_t n = 1; n < space.dim; ++n) {
        const double amp = c * std::sqrt(static_cast<double>(n));
        m.at(n - 1, n) = cdouble(0.0, amp);
        m.at(n, n - 1) = cdouble(0.0, -amp);
    }
    return m;
}

DenseMatrix time_ladder(const FockSpace& space) {
    const double factor = space.mass / (space.p_eff * space.p_eff);
    return scale(cdouble(factor, 0.0), momentum_ladder(space));
}

cdouble fock_expectation(const DenseMatrix& m, std::size_t n,
                         const FockSpace& space) {
    if (m.dim() != space.dim)
        throw std::invalid_argument("matrix dimension does not match the space");
    if (n + 1 >= space.dim)
        throw std::invalid_argument(
            "level sits in the truncation guard band (need n <= dim-2)");
    return m.at(n, n);
}

double jump_time_bound(double delta_e, double hbar) {
    if (!(delta_e > 0.0))
        throw std::invalid_argument("jump bound requires delta_e > 0");
    if (!(hbar > 0.0)) throw std::invalid_argument("jump bound requires hbar > 0");
    return hbar / (2.0 * delta_e);
}

JumpCheck check_jump_inequality(double tau_j, double delta_t) {
    if (tau_j < 0.0)
        throw std::invalid_argument("jump check requires tau_j >= 0");
    if (!(delta_t > 0.0))
        throw std::invalid_argument("jump check requires delta_t > 0");
    JumpCheck out;
    out.tau_j = tau_j;
    out.delta_t = delta_t;
    out.margin = delta_t - tau_j;
    out.satisfied = tau_j <= delta_t;
    return out;
}

Wavefunction oscillator_eigenfunction(const Grid& grid, std::size_t level,
                                      const FockSpace& space, double center) {
    if (level + 1 >= space.dim)
        throw std::invalid_argument(
            "level sits in the truncation guard band (need level <= dim-2)");
    if (!(space.mass > 0.0))
        throw std::invalid_argument("oscillator eigenfunction requires mass > 0");
    const double alpha = space.mass * space.omega / space.hbar;
    const double root_alpha = std::sqrt(alpha);
    const double amplitude =
        std::pow(alpha, 0.25) / std::pow(std::numbers::pi_v<double>, 0.25);
    Wavefunction out(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double xi = root_alpha * (grid.points[j] - center);
        double prev = 0.0;
        double cur = amplitude * std::exp(-0.5 * xi * xi);
        for (std::size_t k = 1; k <= level; ++k) {
            const double dk = static_cast<double>(k);
            double next = xi * std::sqrt(2.0 / dk) * cur -
                          std::sqrt((dk - 1.0) / dk) * prev;
            prev = cur;
            cur = next;
        }
        out[j] = cdouble(cur, 0.0);
    }
    if (std::abs(out.front()) > 1e-10 || std::abs(out.back()) > 1e-10)
        throw std::runtime_error(
            "oscillator eigenfunction has not decayed at the box edge; "
            "enlarge the grid");
    return normalized(grid, out);
}

}  // namespace chronometry
