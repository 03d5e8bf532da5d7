#pragma once

// Modular arithmetic: extended gcd, inverses, CRT over arbitrary moduli,
// primality, square roots of -1 and prime search in residue classes.

#include <cstdint>
#include <span>

#include "dsum/numeric.hpp"

namespace dsum {

struct SearchOptions {
    /// Miller-Rabin rounds used only for candidates >= 2^64.
    int mr_rounds = 40;
    /// Maximum number of class members examined by find_prime_in_ap.
    std::uint64_t search_cap = 1'000'000;
};

struct EgcdResult {
    BigInt g;
    BigInt x;
    BigInt y;
};

/// g = gcd(a, b) >= 0 with a*x + b*y == g.
EgcdResult egcd(const BigInt& a, const BigInt& b);

/// Inverse of a modulo m in [0, m). Throws NotInvertible if gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

BigInt pow_mod(const BigInt& base, const BigInt& exp, const BigInt& m);

/// x == residue (mod modulus), with 0 <= residue < modulus.
class Congruence {
public:
    /// Reduces residue into [0, modulus); modulus must be >= 1.
    Congruence(const BigInt& residue, const BigInt& modulus);

    const BigInt& residue() const noexcept { return residue_; }
    const BigInt& modulus() const noexcept { return modulus_; }

    bool contains(const BigInt& x) const { return mod_floor(x - residue_, modulus_) == 0; }

    friend bool operator==(const Congruence&, const Congruence&) = default;

private:
    BigInt residue_;
    BigInt modulus_;
};

/// Merges a non-empty system into a single congruence modulo the lcm of all
/// moduli. Moduli need not be coprime; throws Inconsistent when two residues
/// disagree modulo the gcd of their moduli.
Congruence crt(std::span<const Congruence> system);
Congruence crt(std::initializer_list<Congruence> system);

/// Deterministic below 2^64; Miller-Rabin with `rounds` seeded bases above.
bool is_prime(const BigInt& n, int rounds = 40);

/// Least r in (0, p/2) with r^2 == -1 (mod p). Throws NoRoot unless p is a
/// prime congruent to 1 mod 4.
BigInt sqrt_minus_one(const BigInt& p, int rounds = 40);

/// Least prime p >= start with p == a (mod modulus).
/// Throws NoSuchClass if gcd(a, modulus) != 1 and SearchExhausted when more
/// than options.search_cap candidates were tried.
BigInt find_prime_in_ap(const BigInt& a, const BigInt& modulus, const BigInt& start,
                        const SearchOptions& options = {});

} // namespace dsum
