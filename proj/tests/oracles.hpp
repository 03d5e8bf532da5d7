#pragma once

// Brute-force reference computations for the test suites. Deliberately
// independent of the library's algorithms: plain scans over machine integers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "dsum/numeric.hpp"

namespace oracle {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::optional<std::int64_t> inverse(std::int64_t a, std::int64_t m) {
    const std::int64_t ar = ((a % m) + m) % m;
    for (std::int64_t r = 0; r < m; ++r) {
        if ((ar * r) % m == 1 % m) return r;
    }
    return std::nullopt;
}

/// Least x in [0, lcm) satisfying every (residue, modulus), or nullopt.
inline std::optional<std::pair<std::int64_t, std::int64_t>> crt(
    std::initializer_list<std::pair<std::int64_t, std::int64_t>> system) {
    std::int64_t l = 1;
    for (auto [r, m] : system) l = std::lcm(l, m);
    for (std::int64_t x = 0; x < l; ++x) {
        bool ok = true;
        for (auto [r, m] : system) ok = ok && (x % m == ((r % m) + m) % m);
        if (ok) return std::make_pair(x, l);
    }
    return std::nullopt;
}

inline std::int64_t sqrt_minus_one(std::int64_t p) {
    for (std::int64_t r = 1; r < p; ++r) {
        if ((r * r + 1) % p == 0) return r;
    }
    return 0;
}

inline std::int64_t prime_in_ap(std::int64_t a, std::int64_t m, std::int64_t start) {
    for (std::int64_t x = start;; ++x) {
        if (((x - a) % m + m) % m == 0 && is_prime(x)) return x;
    }
}

/// ((k/n)) as (num, 2n): sawtooth of an integer ratio computed by integer division.
inline dsum::Rational sawtooth_ratio(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a - floor_div(a, n) * n;
    if (r == 0) return dsum::Rational(0);
    return dsum::Rational(dsum::BigInt(static_cast<long>(2 * r - n)), dsum::BigInt(static_cast<long>(2 * n)));
}

/// s(m, n) summed term by term straight from the definition.
inline dsum::Rational dedekind_by_definition(std::int64_t m, std::int64_t n) {
    dsum::Rational total;
    for (std::int64_t k = 1; k <= n; ++k) {
        total += sawtooth_ratio(k, n) * sawtooth_ratio(m * k, n);
    }
    return total;
}

} // namespace oracle
