#include "chronometry/matrix.hpp"

#include <stdexcept>

#include "chronometry/kernels.hpp"

namespace chronometry {

namespace {

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("matrix dimensions do not match");
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = cdouble(1.0, 0.0);
    return m;
}

DenseMatrix DenseMatrix::conj_transpose() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_dim(a, b);
    DenseMatrix c(a.dim());
    kernels::active().gemm(a.data(), b.data(), c.data(), a.dim());
    return c;
}

DenseMatrix add_scaled(cdouble alpha, const DenseMatrix& a, cdouble beta,
                       const DenseMatrix& b) {
    require_same_dim(a, b);
    DenseMatrix out(a.dim());
    kernels::active().axpby(alpha, a.data(), beta, b.data(), out.data(),
                            a.dim() * a.dim());
    return out;
}

DenseMatrix scale(cdouble alpha, const DenseMatrix& a) {
    DenseMatrix out(a.dim());
    kernels::active().scale(alpha, a.data(), out.data(), a.dim() * a.dim());
    return out;
}

DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_dim(a, b);
    DenseMatrix ab = multiply(a, b);
    DenseMatrix ba = multiply(b, a);
    return add_scaled(cdouble(1.0, 0.0), ab, cdouble(-1.0, 0.0), ba);
}

std::vector<cdouble> apply(const DenseMatrix& a, const std::vector<cdouble>& x) {
    if (x.size() != a.dim())
        throw std::invalid_argument("vector length does not match matrix dimension");
    std::vector<cdouble> y(x.size());
    kernels::active().matvec(a.data(), x.data(), y.data(), a.dim());
    return y;
}

double max_abs(const DenseMatrix& a) {
    return kernels::active().max_abs(a.data(), a.dim() * a.dim());
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    require_same_dim(a, b);
    return kernels::active().max_abs_diff(a.data(), b.data(), a.dim() * a.dim());
}

}  // namespace chronometry
