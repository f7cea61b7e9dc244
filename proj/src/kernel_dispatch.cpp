#include <cstdlib>
#include <stdexcept>
#include <string>

#include "chronometry/kernels.hpp"

namespace chronometry::kernels {

#if defined(CHRONOMETRY_HAVE_AVX2)
const KernelTable& avx2_table_impl();
#endif

bool avx2_cpu_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const KernelTable* avx2_table_or_null() {
#if defined(CHRONOMETRY_HAVE_AVX2)
    return &avx2_table_impl();
#else
    return nullptr;
#endif
}

namespace {

const KernelTable& resolve() {
    const char* env = std::getenv("CHRONOMETRY_KERNELS");
    const std::string mode = env == nullptr ? "auto" : env;
    const KernelTable* vec = avx2_table_or_null();
    const bool vec_ok = vec != nullptr && avx2_cpu_supported();
    if (mode == "scalar") return scalar_table();
    if (mode == "avx2") {
        if (!vec_ok) {
            throw std::runtime_error(
                "CHRONOMETRY_KERNELS=avx2 requested but the AVX2 lane is not "
                "available in this build or on this machine");
        }
        return *vec;
    }
    if (mode == "auto" || mode.empty()) return vec_ok ? *vec : scalar_table();
    throw std::runtime_error("unrecognized CHRONOMETRY_KERNELS value '" + mode +
                             "' (expected scalar, avx2, or auto)");
}

}  // namespace

const KernelTable& active() {
    static const KernelTable& table = resolve();
    return table;
}

}  // namespace chronometry::kernels
