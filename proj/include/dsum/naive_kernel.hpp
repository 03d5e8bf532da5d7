#pragma once

// Integer kernels for the defining sum of s(m, n).
//
// For gcd(m, n) = 1 and 1 <= k < n neither k/n nor mk/n is an integer, so
//   ((k/n)) ((mk/n)) = (2k - n)(2r_k - n) / (4n^2),   r_k = mk mod n,
// and the k = n term vanishes. The kernels return
//   T(m, n) = sum_{k=1}^{n-1} (2k - n)(2r_k - n)
// so that s(m, n) = T / (4n^2). Every factor lies in (-n, n), and with
// n <= kKernelMaxModulus both the per-lane products (signed 32x32->64) and the
// running sum (|T| < n^3 <= 2^60) stay exact in 64-bit lanes.

#include <cstdint>
#include <span>
#include <string_view>

namespace dsum::kernels {

inline constexpr std::int64_t kKernelMaxModulus = std::int64_t{1} << 20;

enum class Isa { Scalar, Avx2, Avx512 };

std::string_view to_string(Isa isa) noexcept;

/// Preconditions for every variant: 1 <= n <= kKernelMaxModulus, 0 <= m < n,
/// gcd(m, n) = 1. Not checked here.
std::int64_t naive_sum_scalar(std::int64_t m, std::int64_t n) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
std::int64_t naive_sum_avx2(std::int64_t m, std::int64_t n) noexcept;
std::int64_t naive_sum_avx512(std::int64_t m, std::int64_t n) noexcept;
#endif

/// Variants usable on the running CPU, scalar first.
std::span<const Isa> supported_isas() noexcept;

/// Widest supported variant.
Isa best_isa() noexcept;

/// Runs the requested variant; falls back to scalar if it is unsupported.
std::int64_t naive_sum(std::int64_t m, std::int64_t n, Isa isa) noexcept;

inline std::int64_t naive_sum(std::int64_t m, std::int64_t n) noexcept {
    return naive_sum(m, n, best_isa());
}

} // namespace dsum::kernels
