#pragma once

#include <vector>

#include "chronometry/grid.hpp"
#include "chronometry/matrix.hpp"

namespace chronometry {

// A dense matrix acting on functions sampled over one grid. On closed grids
// the difference stencils treat off-grid neighbors as zero; on periodic
// grids the stencils wrap.
struct LinearOperator {
    DenseMatrix matrix;
    Grid grid;
};

LinearOperator first_derivative(const Grid& grid);
LinearOperator second_derivative(const Grid& grid);
LinearOperator position_operator(const Grid& grid);
LinearOperator identity_operator(const Grid& grid);

LinearOperator scale(cdouble alpha, const LinearOperator& a);
LinearOperator add_scaled(cdouble alpha, const LinearOperator& a, cdouble beta,
                          const LinearOperator& b);
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator commutator(const LinearOperator& a, const LinearOperator& b);

// Adjoint with respect to the grid quadrature: A* = W^-1 A^H W. With uniform
// weights this is exactly the conjugate transpose; trapezoid weight ratios
// are powers of two, so the corner corrections are exact as well.
LinearOperator adjoint(const LinearOperator& a);

Wavefunction apply(const LinearOperator& a, const Wavefunction& f);

// <f, A g> under the grid quadrature, no normalization
cdouble matrix_element(const LinearOperator& a, const Wavefunction& f,
                       const Wavefunction& g);

// <f, A f> / <f, f>
cdouble expectation(const LinearOperator& a, const Wavefunction& f);

struct HermiticityResidual {
    // max over probe pairs of |<f, A g> - <A f, g>| / (|f| |g|)
    double pairwise_max = 0.0;
    // max entry magnitude of A - A*
    double adjoint_gap_max = 0.0;
};

HermiticityResidual hermiticity_residual(const LinearOperator& a,
                                         const std::vector<Wavefunction>& probes);

}  // namespace chronometry
