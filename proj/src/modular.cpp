#include "dsum/modular.hpp"

#include <array>

#include "dsum/error.hpp"

namespace dsum {

EgcdResult egcd(const BigInt& a, const BigInt& b) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, x = 0;
    BigInt old_y = 0, y = 1;
    BigInt q, tmp;
    while (r != 0) {
        mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_x - q * x;
        old_x = std::move(x);
        x = std::move(tmp);
        tmp = old_y - q * y;
        old_y = std::move(y);
        y = std::move(tmp);
    }
    if (old_r < 0) {
        return {-old_r, -old_x, -old_y};
    }
    return {old_r, old_x, old_y};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be >= 1, got " + to_string(m));
    }
    if (m == 1) {
        return 0;
    }
    const auto [g, x, y] = egcd(mod_floor(a, m), m);
    if (g != 1) {
        throw Error(ErrorKind::NotInvertible,
                    to_string(a) + " mod " + to_string(m) + " (gcd " + to_string(g) + ")");
    }
    return mod_floor(x, m);
}

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (exp < 0) {
        return pow_mod(mod_inverse(base, m), -exp, m);
    }
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Congruence::Congruence(const BigInt& residue, const BigInt& modulus) : modulus_(modulus) {
    if (modulus < 1) {
        throw Error(ErrorKind::InvalidArgument, "congruence modulus must be >= 1, got " + to_string(modulus));
    }
    residue_ = mod_floor(residue, modulus);
}

Congruence crt(std::span<const Congruence> system) {
    if (system.empty()) {
        throw Error(ErrorKind::InvalidArgument, "crt of an empty system");
    }
    BigInt r = system.front().residue();
    BigInt m = system.front().modulus();
    for (const auto& c : system.subspan(1)) {
        const auto [g, u, v] = egcd(m, c.modulus());
        const BigInt diff = c.residue() - r;
        if (mod_floor(diff, g) != 0) {
            throw Error(ErrorKind::Inconsistent,
                        to_string(r) + " mod " + to_string(m) + " vs " + to_string(c.residue()) +
                            " mod " + to_string(c.modulus()));
        }
        // r + m*t solves both when t == (diff/g) * u (mod c.modulus/g).
        const BigInt step = c.modulus() / g;
        const BigInt t = mod_floor((diff / g) * u, step);
        r += m * t;
        m *= step;
        r = mod_floor(r, m);
    }
    return Congruence(r, m);
}

Congruence crt(std::initializer_list<Congruence> system) {
    return crt(std::span<const Congruence>(system.begin(), system.size()));
}

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Sufficient for every n < 3.3 * 10^24, hence for all n < 2^64.
constexpr std::array<unsigned, 12> kDeterministicBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_round(const BigInt& n, const BigInt& n_minus_1, const BigInt& d, unsigned long s,
                        const BigInt& base) {
    BigInt x = pow_mod(base, d, n);
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n_minus_1) {
            return true;
        }
        if (x == 1) {
            return false;
        }
    }
    return false;
}

} // namespace

bool is_prime(const BigInt& n, int rounds) {
    if (n < 2) {
        return false;
    }
    for (unsigned p : kSmallPrimes) {
        if (n == p) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return false;
        }
    }
    if (n < 97 * 97) {
        return true;
    }

    const BigInt n_minus_1 = n - 1;
    const unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    BigInt d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        for (unsigned b : kDeterministicBases) {
            if (!miller_rabin_round(n, n_minus_1, d, s, BigInt(b))) {
                return false;
            }
        }
        return true;
    }

    // Seeded from n so the answer is reproducible across runs.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    const BigInt span = n - 3;
    for (int i = 0; i < rounds; ++i) {
        const BigInt base = rng.get_z_range(span) + 2;
        if (!miller_rabin_round(n, n_minus_1, d, s, base)) {
            return false;
        }
    }
    return true;
}

BigInt sqrt_minus_one(const BigInt& p, int rounds) {
    if (mod_floor(p, 4) != 1 || !is_prime(p, rounds)) {
        throw Error(ErrorKind::NoRoot, "-1 has no square root modulo " + to_string(p) +
                                           " (need a prime == 1 mod 4)");
    }
    const BigInt exponent = (p - 1) / 4;
    const BigInt minus_one = p - 1;
    for (BigInt a = 2; a < p; ++a) {
        const BigInt b = pow_mod(a, exponent, p);
        if (b * b % p == minus_one) {
            const BigInt other = p - b;
            return b < other ? b : other;
        }
    }
    // Unreachable for primes: half of all residues are non-residues.
    throw Error(ErrorKind::NoRoot, "no quadratic non-residue found modulo " + to_string(p));
}

BigInt find_prime_in_ap(const BigInt& a, const BigInt& modulus, const BigInt& start,
                        const SearchOptions& options) {
    if (modulus < 1) {
        throw Error(ErrorKind::InvalidArgument, "progression modulus must be >= 1");
    }
    if (start < 2) {
        throw Error(ErrorKind::InvalidArgument, "search start must be >= 2, got " + to_string(start));
    }
    if (gcd(a, modulus) != 1) {
        throw Error(ErrorKind::NoSuchClass, to_string(a) + " mod " + to_string(modulus) +
                                                " is not a unit class");
    }
    BigInt candidate = start + mod_floor(a - start, modulus);
    for (std::uint64_t i = 0; i < options.search_cap; ++i, candidate += modulus) {
        if (is_prime(candidate, options.mr_rounds)) {
            return candidate;
        }
    }
    throw Error(ErrorKind::SearchExhausted,
                "no prime == " + to_string(a) + " mod " + to_string(modulus) + " within " +
                    std::to_string(options.search_cap) + " candidates from " + to_string(start));
}

} // namespace dsum
