#include "dsum/naive_kernel.hpp"

#include <immintrin.h>

#include <array>

namespace dsum::kernels {

// Four k values per step, one per 64-bit lane; r advances by 4m mod n.
std::int64_t naive_sum_avx2(std::int64_t m, std::int64_t n) noexcept {
    constexpr std::int64_t kLanes = 4;
    const std::int64_t terms = n - 1;
    const std::int64_t blocks = terms / kLanes;

    std::int64_t total = 0;
    if (blocks > 0) {
        const __m256i nv = _mm256_set1_epi64x(n);
        const __m256i n_minus_1 = _mm256_set1_epi64x(n - 1);
        const __m256i k_step = _mm256_set1_epi64x(kLanes);
        const __m256i r_step = _mm256_set1_epi64x((kLanes * m) % n);

        __m256i k = _mm256_setr_epi64x(1, 2, 3, 4);
        __m256i r = _mm256_setr_epi64x(m % n, (2 * m) % n, (3 * m) % n, (4 * m) % n);
        __m256i acc = _mm256_setzero_si256();

        for (std::int64_t b = 0; b < blocks; ++b) {
            const __m256i a = _mm256_sub_epi64(_mm256_add_epi64(k, k), nv);
            const __m256i c = _mm256_sub_epi64(_mm256_add_epi64(r, r), nv);
            acc = _mm256_add_epi64(acc, _mm256_mul_epi32(a, c));

            k = _mm256_add_epi64(k, k_step);
            r = _mm256_add_epi64(r, r_step);
            const __m256i wrap = _mm256_cmpgt_epi64(r, n_minus_1);
            r = _mm256_sub_epi64(r, _mm256_and_si256(wrap, nv));
        }

        alignas(32) std::array<std::int64_t, kLanes> lanes{};
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), acc);
        for (std::int64_t v : lanes) {
            total += v;
        }
    }

    const std::int64_t first = blocks * kLanes + 1;
    std::int64_t r = (first % n) * m % n;
    for (std::int64_t k = first; k < n; ++k) {
        total += (2 * k - n) * (2 * r - n);
        r += m;
        if (r >= n) {
            r -= n;
        }
    }
    return total;
}

} // namespace dsum::kernels
