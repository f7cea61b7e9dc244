#pragma once

#include <complex>
#include <cstddef>

namespace chronometry::kernels {

using cdouble = std::complex<double>;

// One lane of array kernels. All lanes implement the semantics documented in
// kernels_scalar.cpp. gemm, axpby, scale, max_abs and max_abs_diff are
// bitwise identical across lanes (same per-element arithmetic, same
// accumulation order); dot_weighted and matvec may differ from the scalar
// lane only in summation order.
struct KernelTable {
    const char* name;

    // sum over i of w[i] * conj(f[i]) * g[i]
    cdouble (*dot_weighted)(const double* w, const cdouble* f, const cdouble* g,
                            std::size_t n);
    // y = A x, A row-major n by n; y must not alias A or x
    void (*matvec)(const cdouble* a, const cdouble* x, cdouble* y, std::size_t n);
    // C = A B, all row-major n by n; C must not alias A or B
    void (*gemm)(const cdouble* a, const cdouble* b, cdouble* c, std::size_t n);
    // out[i] = alpha*x[i] + beta*y[i]; out may alias x or y
    void (*axpby)(cdouble alpha, const cdouble* x, cdouble beta, const cdouble* y,
                  cdouble* out, std::size_t n);
    // out[i] = alpha*x[i]; out may alias x
    void (*scale)(cdouble alpha, const cdouble* x, cdouble* out, std::size_t n);
    // max over i of |x[i]|
    double (*max_abs)(const cdouble* x, std::size_t n);
    // max over i of |x[i] - y[i]|
    double (*max_abs_diff)(const cdouble* x, const cdouble* y, std::size_t n);
};

const KernelTable& scalar_table();

// AVX2 lane baked into this binary, or nullptr when it was not compiled in.
const KernelTable* avx2_table_or_null();

// True when the running CPU can execute the AVX2 lane.
bool avx2_cpu_supported();

// Lane picked once per process: CHRONOMETRY_KERNELS=scalar|avx2|auto (default
// auto prefers AVX2 when compiled in and supported). Requesting an
// unavailable lane throws std::runtime_error.
const KernelTable& active();

}  // namespace chronometry::kernels
