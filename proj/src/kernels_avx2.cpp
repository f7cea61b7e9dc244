// AVX2 lane. Packs two complex values per 256-bit register as
// [re0, im0, re1, im1] and reproduces the scalar lane's rounding recipe with
// plain multiplies and addsub, never fused multiply-add: fusing would change
// the rounding of the cross terms and break both the bitwise lane-equality
// guarantee and the exact cancellation that circulant commutators rely on.

#if defined(__AVX2__)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "chronometry/kernels.hpp"

namespace chronometry::kernels {
namespace {

// alpha * v for a broadcast complex alpha = (pr, pi):
//   even lanes pr*re - pi*im, odd lanes pr*im + pi*re
inline __m256d broadcast_mul(__m256d pr, __m256d pi, __m256d v) {
    __m256d t1 = _mm256_mul_pd(pr, v);
    __m256d vswap = _mm256_permute_pd(v, 0x5);
    __m256d t2 = _mm256_mul_pd(pi, vswap);
    return _mm256_addsub_pd(t1, t2);
}

// elementwise complex product u * v
inline __m256d complex_mul(__m256d u, __m256d v) {
    __m256d ur = _mm256_movedup_pd(u);
    __m256d ui = _mm256_permute_pd(u, 0xF);
    __m256d t1 = _mm256_mul_pd(ur, v);
    __m256d vswap = _mm256_permute_pd(v, 0x5);
    __m256d t2 = _mm256_mul_pd(ui, vswap);
    return _mm256_addsub_pd(t1, t2);
}

// elementwise conj(f) * g: even lanes fr*gr + fi*gi, odd lanes fr*gi - fi*gr
inline __m256d conj_mul(__m256d f, __m256d g) {
    __m256d fr = _mm256_movedup_pd(f);
    __m256d fi = _mm256_permute_pd(f, 0xF);
    __m256d t1 = _mm256_mul_pd(fr, g);
    __m256d gswap = _mm256_permute_pd(g, 0x5);
    __m256d t2 = _mm256_mul_pd(fi, gswap);
    const __m256d signbit = _mm256_set1_pd(-0.0);
    return _mm256_addsub_pd(t1, _mm256_xor_pd(t2, signbit));
}

inline const double* as_doubles(const cdouble* p) {
    return reinterpret_cast<const double*>(p);
}

inline double* as_doubles(cdouble* p) { return reinterpret_cast<double*>(p); }

cdouble dot_weighted_avx2(const double* w, const cdouble* f, const cdouble* g,
                          std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d fv = _mm256_loadu_pd(as_doubles(f + i));
        __m256d gv = _mm256_loadu_pd(as_doubles(g + i));
        __m256d prod = conj_mul(fv, gv);
        __m256d wv = _mm256_setr_pd(w[i], w[i], w[i + 1], w[i + 1]);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(prod, wv));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double acc_re = lanes[0] + lanes[2];
    double acc_im = lanes[1] + lanes[3];
    for (; i < n; ++i) {
        const double fr = f[i].real(), fi = f[i].imag();
        const double gr = g[i].real(), gi = g[i].imag();
        acc_re += w[i] * (fr * gr + fi * gi);
        acc_im += w[i] * (fr * gi - fi * gr);
    }
    return {acc_re, acc_im};
}

void matvec_avx2(const cdouble* a, const cdouble* x, cdouble* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const cdouble* row = a + i * n;
        __m256d acc = _mm256_setzero_pd();
        std::size_t k = 0;
        for (; k + 2 <= n; k += 2) {
            __m256d av = _mm256_loadu_pd(as_doubles(row + k));
            __m256d xv = _mm256_loadu_pd(as_doubles(x + k));
            acc = _mm256_add_pd(acc, complex_mul(av, xv));
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, acc);
        double acc_re = lanes[0] + lanes[2];
        double acc_im = lanes[1] + lanes[3];
        for (; k < n; ++k) {
            const double ar = row[k].real(), ai = row[k].imag();
            const double xr = x[k].real(), xi = x[k].imag();
            acc_re += ar * xr - ai * xi;
            acc_im += ar * xi + ai * xr;
        }
        y[i] = {acc_re, acc_im};
    }
}

void gemm_avx2(const cdouble* a, const cdouble* b, cdouble* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        cdouble* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] = {0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const double ar = a[i * n + k].real(), ai = a[i * n + k].imag();
            __m256d prv = _mm256_set1_pd(ar);
            __m256d piv = _mm256_set1_pd(ai);
            const cdouble* brow = b + k * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                __m256d bv = _mm256_loadu_pd(as_doubles(brow + j));
                __m256d cv = _mm256_loadu_pd(as_doubles(crow + j));
                cv = _mm256_add_pd(cv, broadcast_mul(prv, piv, bv));
                _mm256_storeu_pd(as_doubles(crow + j), cv);
            }
            for (; j < n; ++j) {
                const double br = brow[j].real(), bi = brow[j].imag();
                const double tre = ar * br - ai * bi;
                const double tim = ar * bi + ai * br;
                crow[j] = {crow[j].real() + tre, crow[j].imag() + tim};
            }
        }
    }
}

void axpby_avx2(cdouble alpha, const cdouble* x, cdouble beta, const cdouble* y,
                cdouble* out, std::size_t n) {
    const double pr = alpha.real(), pi = alpha.imag();
    const double qr = beta.real(), qi = beta.imag();
    __m256d prv = _mm256_set1_pd(pr), piv = _mm256_set1_pd(pi);
    __m256d qrv = _mm256_set1_pd(qr), qiv = _mm256_set1_pd(qi);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
        __m256d yv = _mm256_loadu_pd(as_doubles(y + i));
        __m256d r = _mm256_add_pd(broadcast_mul(prv, piv, xv),
                                  broadcast_mul(qrv, qiv, yv));
        _mm256_storeu_pd(as_doubles(out + i), r);
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        const double axr = pr * xr - pi * xi;
        const double axi = pr * xi + pi * xr;
        const double byr = qr * yr - qi * yi;
        const double byi = qr * yi + qi * yr;
        out[i] = {axr + byr, axi + byi};
    }
}

void scale_avx2(cdouble alpha, const cdouble* x, cdouble* out, std::size_t n) {
    const double pr = alpha.real(), pi = alpha.imag();
    __m256d prv = _mm256_set1_pd(pr), piv = _mm256_set1_pd(pi);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
        _mm256_storeu_pd(as_doubles(out + i), broadcast_mul(prv, piv, xv));
    }
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        out[i] = {pr * xr - pi * xi, pr * xi + pi * xr};
    }
}

double max_abs_avx2(const cdouble* x, std::size_t n) {
    __m256d m2v = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(as_doubles(x + i));
        __m256d sq = _mm256_mul_pd(xv, xv);
        __m256d s = _mm256_hadd_pd(sq, sq);
        m2v = _mm256_max_pd(m2v, s);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m2v);
    double m2 = lanes[0] > lanes[2] ? lanes[0] : lanes[2];
    for (; i < n; ++i) {
        const double re = x[i].real(), im = x[i].imag();
        const double s = re * re + im * im;
        if (s > m2) m2 = s;
    }
    return std::sqrt(m2);
}

double max_abs_diff_avx2(const cdouble* x, const cdouble* y, std::size_t n) {
    __m256d m2v = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(as_doubles(x + i)),
                                  _mm256_loadu_pd(as_doubles(y + i)));
        __m256d sq = _mm256_mul_pd(d, d);
        __m256d s = _mm256_hadd_pd(sq, sq);
        m2v = _mm256_max_pd(m2v, s);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m2v);
    double m2 = lanes[0] > lanes[2] ? lanes[0] : lanes[2];
    for (; i < n; ++i) {
        const double re = x[i].real() - y[i].real();
        const double im = x[i].imag() - y[i].imag();
        const double s = re * re + im * im;
        if (s > m2) m2 = s;
    }
    return std::sqrt(m2);
}

}  // namespace

const KernelTable& avx2_table_impl() {
    static const KernelTable table = {
        "avx2",       dot_weighted_avx2, matvec_avx2,      gemm_avx2,
        axpby_avx2,   scale_avx2,        max_abs_avx2,     max_abs_diff_avx2,
    };
    return table;
}

}  // namespace chronometry::kernels

#endif  // __AVX2__
