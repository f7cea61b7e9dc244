#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chronometry {

using cdouble = std::complex<double>;

// Dense square complex matrix, row-major. All algebra below routes through
// the active kernel lane.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, cdouble(0.0, 0.0)) {}

    static DenseMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    cdouble& at(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const {
        return entries_[i * dim_ + j];
    }
    cdouble* data() { return entries_.data(); }
    const cdouble* data() const { return entries_.data(); }

    DenseMatrix conj_transpose() const;

private:
    std::size_t dim_ = 0;
    std::vector<cdouble> entries_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add_scaled(cdouble alpha, const DenseMatrix& a, cdouble beta,
                       const DenseMatrix& b);
DenseMatrix scale(cdouble alpha, const DenseMatrix& a);

// multiply(a, b) - multiply(b, a)
DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b);

std::vector<cdouble> apply(const DenseMatrix& a, const std::vector<cdouble>& x);

double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace chronometry
