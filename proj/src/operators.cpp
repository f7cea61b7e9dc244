#include "chronometry/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace chronometry {

namespace {

bool same_grid(const Grid& x, const Grid& y) {
    return x.n == y.n && x.topology == y.topology && x.a == y.a && x.b == y.b;
}

void require_same_grid(const LinearOperator& a, const LinearOperator& b) {
    if (!same_grid(a.grid, b.grid))
        throw std::invalid_argument("operators live on different grids");
}

void require_matching(const LinearOperator& a, const Wavefunction& f) {
    if (f.size() != a.grid.n)
        throw std::invalid_argument("sample count does not match the operator grid");
}

}  // namespace

LinearOperator first_derivative(const Grid& grid) {
    LinearOperator op{DenseMatrix(grid.n), grid};
    const double c = 1.0 / (2.0 * grid.spacing);
    const std::size_t n = grid.n;
    for (std::size_t j = 0; j < n; ++j) {
        if (j + 1 < n) op.matrix.at(j, j + 1) = cdouble(c, 0.0);
        if (j > 0) op.matrix.at(j, j - 1) = cdouble(-c, 0.0);
    }
    if (grid.topology == Topology::periodic) {
        op.matrix.at(0, n - 1) = cdouble(-c, 0.0);
        op.matrix.at(n - 1, 0) = cdouble(c, 0.0);
    }
    return op;
}

LinearOperator second_derivative(const Grid& grid) {
    LinearOperator op{DenseMatrix(grid.n), grid};
    const double c = 1.0 / (grid.spacing * grid.spacing);
    const double d = -2.0 * c;
    const std::size_t n = grid.n;
    for (std::size_t j = 0; j < n; ++j) {
        op.matrix.at(j, j) = cdouble(d, 0.0);
        if (j + 1 < n) op.matrix.at(j, j + 1) = cdouble(c, 0.0);
        if (j > 0) op.matrix.at(j, j - 1) = cdouble(c, 0.0);
    }
    if (grid.topology == Topology::periodic) {
        op.matrix.at(0, n - 1) = cdouble(c, 0.0);
        op.matrix.at(n - 1, 0) = cdouble(c, 0.0);
    }
    return op;
}

LinearOperator position_operator(const Grid& grid) {
    LinearOperator op{DenseMatrix(grid.n), grid};
    for (std::size_t j = 0; j < grid.n; ++j)
        op.matrix.at(j, j) = cdouble(grid.points[j], 0.0);
    return op;
}

LinearOperator identity_operator(const Grid& grid) {
    return {DenseMatrix::identity(grid.n), grid};
}

LinearOperator scale(cdouble alpha, const LinearOperator& a) {
    return {scale(alpha, a.matrix), a.grid};
}

LinearOperator add_scaled(cdouble alpha, const LinearOperator& a, cdouble beta,
                          const LinearOperator& b) {
    require_same_grid(a, b);
    return {add_scaled(alpha, a.matrix, beta, b.matrix), a.grid};
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
    require_same_grid(a, b);
    return {multiply(a.matrix, b.matrix), a.grid};
}

LinearOperator commutator(const LinearOperator& a, const LinearOperator& b) {
    require_same_grid(a, b);
    return {commutator(a.matrix, b.matrix), a.grid};
}

LinearOperator adjoint(const LinearOperator& a) {
    DenseMatrix out = a.matrix.conj_transpose();
    const std::vector<double>& w = a.grid.weights;
    bool uniform = true;
    for (double wi : w)
        if (wi != w[0]) uniform = false;
    if (!uniform) {
        for (std::size_t i = 0; i < a.grid.n; ++i) {
            for (std::size_t j = 0; j < a.grid.n; ++j) {
                const double r = w[j] / w[i];
                if (r != 1.0) out.at(i, j) *= r;
            }
        }
    }
    return {out, a.grid};
}

Wavefunction apply(const LinearOperator& a, const Wavefunction& f) {
    require_matching(a, f);
    return apply(a.matrix, f);
}

cdouble matrix_element(const LinearOperator& a, const Wavefunction& f,
                       const Wavefunction& g) {
    require_matching(a, f);
    require_matching(a, g);
    return inner_product(a.grid, f, apply(a.matrix, g));
}

cdouble expectation(const LinearOperator& a, const Wavefunction& f) {
    require_matching(a, f);
    const double norm2 = inner_product(a.grid, f, f).real();
    if (!(norm2 > 0.0))
        throw std::runtime_error("expectation requires a nonzero state");
    cdouble raw = inner_product(a.grid, f, apply(a.matrix, f));
    return raw / norm2;
}

HermiticityResidual hermiticity_residual(const LinearOperator& a,
                                         const std::vector<Wavefunction>& probes) {
    if (probes.empty())
        throw std::invalid_argument("hermiticity residual requires probes");
    HermiticityResidual res;
    std::vector<Wavefunction> images;
    std::vector<double> norms;
    images.reserve(probes.size());
    norms.reserve(probes.size());
    for (const auto& f : probes) {
        require_matching(a, f);
        images.push_back(apply(a.matrix, f));
        norms.push_back(norm(a.grid, f));
        if (!(norms.back() > 0.0))
            throw std::invalid_argument("hermiticity probes must be nonzero");
    }
    for (std::size_t i = 0; i < probes.size(); ++i) {
        for (std::size_t j = i; j < probes.size(); ++j) {
            cdouble left = inner_product(a.grid, probes[i], images[j]);
            cdouble right = inner_product(a.grid, images[i], probes[j]);
            double val = std::abs(left - right) / (norms[i] * norms[j]);
            if (val > res.pairwise_max) res.pairwise_max = val;
        }
    }
    res.adjoint_gap_max = max_abs_diff(a.matrix, adjoint(a).matrix);
    return res;
}

}  // namespace chronometry
