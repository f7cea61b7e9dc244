#include <doctest.h>

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "chronometry/kernels.hpp"

using chronometry::kernels::cdouble;
using chronometry::kernels::KernelTable;

namespace {

std::vector<cdouble> random_vector(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cdouble> v(n);
    for (auto& z : v) z = cdouble(u(rng), u(rng));
    return v;
}

bool bitwise_equal(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(cdouble)) == 0;
}

}  // namespace

TEST_CASE("weighted dot matches a hand-computed two-term sum") {
    const auto& k = chronometry::kernels::scalar_table();
    const double w[] = {2.0, 3.0};
    const cdouble f[] = {{1.0, 2.0}, {3.0, -1.0}};
    const cdouble g[] = {{0.0, 1.0}, {2.0, 2.0}};
    // 2*conj(1+2i)*(i) + 3*conj(3-i)*(2+2i) = (4+2i) + (12+24i)
    cdouble d = k.dot_weighted(w, f, g, 2);
    CHECK(d.real() == doctest::Approx(16.0));
    CHECK(d.imag() == doctest::Approx(26.0));
}

TEST_CASE("weighted dot of an empty range is zero") {
    const auto& k = chronometry::kernels::scalar_table();
    cdouble d = k.dot_weighted(nullptr, nullptr, nullptr, 0);
    CHECK(d == cdouble(0.0, 0.0));
}

TEST_CASE("matvec reproduces a worked 2x2 example") {
    const auto& k = chronometry::kernels::scalar_table();
    const cdouble a[] = {{1.0, 1.0}, {2.0, 0.0}, {0.0, 0.0}, {0.0, -1.0}};
    const cdouble x[] = {{1.0, -1.0}, {0.0, 3.0}};
    cdouble y[2];
    k.matvec(a, x, y, 2);
    CHECK(y[0].real() == doctest::Approx(2.0));
    CHECK(y[0].imag() == doctest::Approx(6.0));
    CHECK(y[1].real() == doctest::Approx(3.0));
    CHECK(y[1].imag() == doctest::Approx(0.0));
}

TEST_CASE("gemm reproduces a worked 2x2 example") {
    const auto& k = chronometry::kernels::scalar_table();
    const cdouble a[] = {{0.0, 1.0}, {1.0, 0.0}, {2.0, 0.0}, {0.0, 0.0}};
    const cdouble b[] = {{1.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}, {2.0, 0.0}};
    cdouble c[4];
    k.gemm(a, b, c, 2);
    CHECK(c[0] == cdouble(0.0, 1.0));
    CHECK(c[1] == cdouble(1.0, 0.0));
    CHECK(c[2] == cdouble(2.0, 0.0));
    CHECK(c[3] == cdouble(0.0, 2.0));
}

TEST_CASE("axpby and scale follow complex arithmetic") {
    const auto& k = chronometry::kernels::scalar_table();
    const cdouble x[] = {{1.0, 1.0}};
    const cdouble y[] = {{3.0, -2.0}};
    cdouble out[1];
    k.axpby(cdouble(0.0, 2.0), x, cdouble(-1.0, 0.0), y, out, 1);
    CHECK(out[0].real() == doctest::Approx(-5.0));
    CHECK(out[0].imag() == doctest::Approx(4.0));

    const cdouble z[] = {{2.0, -3.0}};
    k.scale(cdouble(1.0, 1.0), z, out, 1);
    CHECK(out[0].real() == doctest::Approx(5.0));
    CHECK(out[0].imag() == doctest::Approx(-1.0));
}

TEST_CASE("max norms pick the largest magnitude") {
    const auto& k = chronometry::kernels::scalar_table();
    const cdouble x[] = {{3.0, 4.0}, {1.0, 0.0}, {0.0, -6.0}};
    CHECK(k.max_abs(x, 3) == doctest::Approx(6.0));
    CHECK(k.max_abs(x, 0) == 0.0);

    const cdouble p[] = {{1.0, 1.0}, {2.0, 0.0}};
    const cdouble q[] = {{1.0, 0.0}, {2.0, -3.0}};
    CHECK(k.max_abs_diff(p, q, 2) == doctest::Approx(3.0));
}

TEST_CASE("scale then axpby recombines to the expected linear form") {
    const auto& k = chronometry::kernels::scalar_table();
    std::mt19937 rng(20260816);
    auto x = random_vector(rng, 17);
    auto y = random_vector(rng, 17);
    cdouble alpha(0.7, -0.3), beta(-1.2, 0.5);
    std::vector<cdouble> out(17);
    k.axpby(alpha, x.data(), beta, y.data(), out.data(), 17);
    for (std::size_t i = 0; i < 17; ++i) {
        cdouble want = alpha * x[i] + beta * y[i];
        CHECK(std::abs(out[i] - want) <= 1e-15);
    }
}

TEST_CASE("every compiled lane agrees with the scalar reference") {
    const auto& s = chronometry::kernels::scalar_table();
    const KernelTable* v = chronometry::kernels::avx2_table_or_null();
    if (v == nullptr || !chronometry::kernels::avx2_cpu_supported()) {
        MESSAGE("AVX2 lane unavailable; equivalence trivially holds");
        return;
    }

    std::mt19937 rng(7);
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 16u, 17u, 33u}) {
        auto a = random_vector(rng, n * n);
        auto b = random_vector(rng, n * n);
        auto x = random_vector(rng, n);
        auto y = random_vector(rng, n);
        std::vector<double> w(n);
        std::uniform_real_distribution<double> uw(0.1, 2.0);
        for (auto& wi : w) wi = uw(rng);
        cdouble alpha(0.6, -1.1), beta(0.4, 0.9);

        // Bitwise-identical kernels: same per-element recipe, same order.
        std::vector<cdouble> cs(n * n), cv(n * n);
        s.gemm(a.data(), b.data(), cs.data(), n);
        v->gemm(a.data(), b.data(), cv.data(), n);
        CHECK(bitwise_equal(cs, cv));

        std::vector<cdouble> os(n), ov(n);
        s.axpby(alpha, x.data(), beta, y.data(), os.data(), n);
        v->axpby(alpha, x.data(), beta, y.data(), ov.data(), n);
        CHECK(bitwise_equal(os, ov));

        s.scale(alpha, x.data(), os.data(), n);
        v->scale(alpha, x.data(), ov.data(), n);
        CHECK(bitwise_equal(os, ov));

        double ms = s.max_abs(x.data(), n);
        double mv = v->max_abs(x.data(), n);
        CHECK(ms == mv);
        CHECK(s.max_abs_diff(x.data(), y.data(), n) ==
              v->max_abs_diff(x.data(), y.data(), n));

        // Reductions may reassociate: bound by a condition-scaled tolerance.
        cdouble ds = s.dot_weighted(w.data(), x.data(), y.data(), n);
        cdouble dv = v->dot_weighted(w.data(), x.data(), y.data(), n);
        CHECK(std::abs(ds - dv) <= 1e-14 * static_cast<double>(n));

        std::vector<cdouble> ys(n), yv(n);
        s.matvec(a.data(), x.data(), ys.data(), n);
        v->matvec(a.data(), x.data(), yv.data(), n);
        CHECK(s.max_abs_diff(ys.data(), yv.data(), n) <=
              1e-14 * static_cast<double>(n));
    }
}

TEST_CASE("the active lane is one of the published tables") {
    const auto& act = chronometry::kernels::active();
    const auto& s = chronometry::kernels::scalar_table();
    const KernelTable* v = chronometry::kernels::avx2_table_or_null();
    bool is_scalar = &act == &s;
    bool is_avx2 = (v != nullptr) && (&act == v);
    CHECK((is_scalar || is_avx2));
    if (is_avx2) CHECK(chronometry::kernels::avx2_cpu_supported());
    CHECK(act.name != nullptr);
}
