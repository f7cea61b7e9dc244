// Scalar reference lane. Every kernel spells out the real/imaginary
// arithmetic explicitly so that the rounding recipe is pinned:
//   product        (a*b):       re = ar*br - ai*bi,  im = ar*bi + ai*br
//   conj product   (conj(f)*g): re = fr*gr + fi*gi,  im = fr*gi - fi*gr
// with one rounding per multiply and per add, no fused multiply-add. The
// vector lanes reproduce these recipes element for element; only the
// summation order of dot_weighted and matvec is lane-dependent.

#include <cmath>
#include <cstddef>

#include "chronometry/kernels.hpp"

namespace chronometry::kernels {
namespace {

cdouble dot_weighted_scalar(const double* w, const cdouble* f, const cdouble* g,
                            std::size_t n) {
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double fr = f[i].real(), fi = f[i].imag();
        const double gr = g[i].real(), gi = g[i].imag();
        const double cr = fr * gr + fi * gi;
        const double ci = fr * gi - fi * gr;
        acc_re += w[i] * cr;
        acc_im += w[i] * ci;
    }
    return {acc_re, acc_im};
}

void matvec_scalar(const cdouble* a, const cdouble* x, cdouble* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double acc_re = 0.0, acc_im = 0.0;
        const cdouble* row = a + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = row[k].real(), ai = row[k].imag();
            const double xr = x[k].real(), xi = x[k].imag();
            acc_re += ar * xr - ai * xi;
            acc_im += ar * xi + ai * xr;
        }
        y[i] = {acc_re, acc_im};
    }
}

void gemm_scalar(const cdouble* a, const cdouble* b, cdouble* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cdouble* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = {0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
            const cdouble* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                const double tre = ar * br - ai * bi;
                const double tim = ar * bi + ai * br;
                crow[j] = {crow[j].real() + tre, crow[j].imag() + tim};
            }
        }
    }
}

void axpby_scalar(cdouble alpha, const cdouble* x, cdouble beta, const cdouble* y,
                  cdouble* out, std::size_t n) {
    const double pr = alpha.real(), pi = alpha.imag();
    const double qr = beta.real(), qi = beta.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        const double axr = pr * xr - pi * xi;
        const double axi = pr * xi + pi * xr;
        const double byr = qr * yr - qi * yi;
        const double byi = qr * yi + qi * yr;
        out[i] = {axr + byr, axi + byi};
    }
}

void scale_scalar(cdouble alpha, const cdouble* x, cdouble* out, std::size_t n) {
    const double pr = alpha.real(), pi = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        out[i] = {pr * xr - pi * xi, pr * xi + pi * xr};
    }
}

double max_abs_scalar(const cdouble* x, std::size_t n) {
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        const double s = re * re + im * im;
        if (s > m2) m2 = s;
    }
    return std::sqrt(m2);
}

double max_abs_diff_scalar(const cdouble* x, const cdouble* y, std::size_t n) {
    double m2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double re = x[i].real() - y[i].real();
        const double im = x[i].imag() - y[i].imag();
        const double s = re * re + im * im;
        if (s > m2) m2 = s;
    }
    return std::sqrt(m2);
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table = {
        "scalar",        dot_weighted_scalar, matvec_scalar,      gemm_scalar,
        axpby_scalar,    scale_scalar,        max_abs_scalar,     max_abs_diff_scalar,
    };
    return table;
}

}  // namespace chronometry::kernels
