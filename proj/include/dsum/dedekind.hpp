#pragma once

// Dedekind sums
//   s(m, n) = sum_{k=1}^{n} ((k/n)) ((mk/n)),   S(m, n) = 12 s(m, n),
// for n >= 1 and gcd(m, n) = 1.

#include <cstdint>

#include "dsum/naive_kernel.hpp"
#include "dsum/numeric.hpp"

namespace dsum {

struct DedekindArgs {
    BigInt m;
    BigInt n;
};

enum class Evaluator { Naive, Fast };

/// The naive evaluator refuses moduli above this unless forced.
inline constexpr std::int64_t kNaiveSoftLimit = 1'000'000;

struct NaiveOptions {
    bool force = false;
    kernels::Isa isa = kernels::best_isa();
};

/// ((t)): t - floor(t) - 1/2, or 0 when t is an integer.
Rational sawtooth(const Rational& t);

/// Throws InvalidArgument for n < 1 and NotCoprime for gcd(m, n) != 1.
void check_args(const DedekindArgs& args);

/// O(n) evaluation of the defining sum. Moduli up to the kernel limit go
/// through the SIMD integer kernels, larger ones (only when forced) through
/// an exact big-integer loop.
Rational dedekind_sum_naive(const DedekindArgs& args, const NaiveOptions& options = {});

/// O(log n) evaluation by reciprocity descent:
///   s(m, n) = -1/4 + (m^2 + n^2 + 1) / (12mn) - s(n mod m, m),   s(., 1) = 0.
Rational dedekind_sum_fast(const DedekindArgs& args);

Rational dedekind_sum(const DedekindArgs& args, Evaluator evaluator = Evaluator::Fast);

/// S(m, n) = 12 s(m, n).
Rational scaled_dedekind_sum(const DedekindArgs& args, Evaluator evaluator = Evaluator::Fast);

/// frac((m + m*) / n) with m m* == 1 (mod n); equals frac(S(m, n)).
Rational scaled_sum_frac_via_inverse(const DedekindArgs& args);

} // namespace dsum
