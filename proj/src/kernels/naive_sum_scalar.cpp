#include "dsum/naive_kernel.hpp"

namespace dsum::kernels {

std::int64_t naive_sum_scalar(std::int64_t m, std::int64_t n) noexcept {
    std::int64_t total = 0;
    std::int64_t r = 0;
    for (std::int64_t k = 1; k < n; ++k) {
        r += m;
        if (r >= n) {
            r -= n;
        }
        total += (2 * k - n) * (2 * r - n);
    }
    return total;
}

} // namespace dsum::kernels
