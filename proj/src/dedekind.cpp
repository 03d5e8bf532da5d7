#include "dsum/dedekind.hpp"

#include "dsum/error.hpp"
#include "dsum/modular.hpp"

namespace dsum {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

// Exact big-integer version of the kernel sum, for moduli past the 64-bit bound.
Rational naive_bigint(const BigInt& m, const BigInt& n) {
    BigInt total = 0;
    BigInt r = 0;
    for (BigInt k = 1; k < n; ++k) {
        r += m;
        if (r >= n) {
            r -= n;
        }
        total += (2 * k - n) * (2 * r - n);
    }
    return Rational(total, 4 * n * n);
}

} // namespace

Rational sawtooth(const Rational& t) {
    if (t.is_integer()) {
        return Rational(0);
    }
    return frac(t) - kHalf;
}

void check_args(const DedekindArgs& args) {
    if (args.n < 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus n must be >= 1, got " + to_string(args.n));
    }
    if (gcd(args.m, args.n) != 1) {
        throw Error(ErrorKind::NotCoprime, "gcd(" + to_string(args.m) + ", " + to_string(args.n) + ") != 1");
    }
}

Rational dedekind_sum_naive(const DedekindArgs& args, const NaiveOptions& options) {
    check_args(args);
    if (args.n > kNaiveSoftLimit && !options.force) {
        throw Error(ErrorKind::TooLarge, "naive evaluation refused for n = " + to_string(args.n) +
                                             " (limit " + std::to_string(kNaiveSoftLimit) + ")");
    }
    const BigInt m = mod_floor(args.m, args.n);
    if (args.n <= kernels::kKernelMaxModulus) {
        const std::int64_t n = args.n.get_si();
        const std::int64_t total = kernels::naive_sum(m.get_si(), n, options.isa);
        return Rational(BigInt(static_cast<long>(total)), BigInt(4 * n * n));
    }
    return naive_bigint(m, args.n);
}

Rational dedekind_sum_fast(const DedekindArgs& args) {
    check_args(args);
    BigInt n = args.n;
    BigInt m = mod_floor(args.m, n);
    Rational total;
    bool negate = false;
    while (n > 1) {
        Rational step = Rational(m * m + n * n + 1, 12 * m * n) - kQuarter;
        total += negate ? -step : step;
        negate = !negate;
        BigInt next = n % m;
        n = std::move(m);
        m = std::move(next);
    }
    return total;
}

Rational dedekind_sum(const DedekindArgs& args, Evaluator evaluator) {
    return evaluator == Evaluator::Naive ? dedekind_sum_naive(args) : dedekind_sum_fast(args);
}

Rational scaled_dedekind_sum(const DedekindArgs& args, Evaluator evaluator) {
    return dedekind_sum(args, evaluator) * Rational(12);
}

Rational scaled_sum_frac_via_inverse(const DedekindArgs& args) {
    check_args(args);
    const BigInt m = mod_floor(args.m, args.n);
    return frac(Rational(m + mod_inverse(m, args.n), args.n));
}

} // namespace dsum
