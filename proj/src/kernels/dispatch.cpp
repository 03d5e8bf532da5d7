#include "dsum/naive_kernel.hpp"

#include <vector>

namespace dsum::kernels {

namespace {

std::vector<Isa> detect() {
    std::vector<Isa> isas{Isa::Scalar};
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) {
        isas.push_back(Isa::Avx2);
    }
    if (__builtin_cpu_supports("avx512f")) {
        isas.push_back(Isa::Avx512);
    }
#endif
    return isas;
}

const std::vector<Isa>& detected() {
    static const std::vector<Isa> isas = detect();
    return isas;
}

[[maybe_unused]] bool supported(Isa isa) {
    for (Isa s : detected()) {
        if (s == isa) {
            return true;
        }
    }
    return false;
}

} // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Avx512: return "avx512";
    }
    return "unknown";
}

std::span<const Isa> supported_isas() noexcept { return detected(); }

Isa best_isa() noexcept { return detected().back(); }

std::int64_t naive_sum(std::int64_t m, std::int64_t n, Isa isa) noexcept {
#if defined(__x86_64__) || defined(_M_X64)
    if (isa == Isa::Avx512 && supported(isa)) {
        return naive_sum_avx512(m, n);
    }
    if (isa == Isa::Avx2 && supported(isa)) {
        return naive_sum_avx2(m, n);
    }
#endif
    return naive_sum_scalar(m, n);
}

} // namespace dsum::kernels
