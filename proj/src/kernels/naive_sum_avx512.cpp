#include "dsum/naive_kernel.hpp"

#include <immintrin.h>

namespace dsum::kernels {

std::int64_t naive_sum_avx512(std::int64_t m, std::int64_t n) noexcept {
    constexpr std::int64_t kLanes = 8;
    const std::int64_t terms = n - 1;
    const std::int64_t blocks = terms / kLanes;

    std::int64_t total = 0;
    if (blocks > 0) {
        const __m512i nv = _mm512_set1_epi64(n);
        const __m512i n_minus_1 = _mm512_set1_epi64(n - 1);
        const __m512i k_step = _mm512_set1_epi64(kLanes);
        const __m512i r_step = _mm512_set1_epi64((kLanes * m) % n);

        __m512i k = _mm512_setr_epi64(1, 2, 3, 4, 5, 6, 7, 8);
        __m512i r = _mm512_setr_epi64(m % n, (2 * m) % n, (3 * m) % n, (4 * m) % n, (5 * m) % n,
                                      (6 * m) % n, (7 * m) % n, (8 * m) % n);
        __m512i acc = _mm512_setzero_si512();

        for (std::int64_t b = 0; b < blocks; ++b) {
            const __m512i a = _mm512_sub_epi64(_mm512_add_epi64(k, k), nv);
            const __m512i c = _mm512_sub_epi64(_mm512_add_epi64(r, r), nv);
            acc = _mm512_add_epi64(acc, _mm512_mul_epi32(a, c));

            k = _mm512_add_epi64(k, k_step);
            r = _mm512_add_epi64(r, r_step);
            const __mmask8 wrap = _mm512_cmpgt_epi64_mask(r, n_minus_1);
            r = _mm512_mask_sub_epi64(r, wrap, r, nv);
        }
        total = _mm512_reduce_add_epi64(acc);
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
