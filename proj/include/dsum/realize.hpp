#pragma once

// Constructive realization of a reduced fraction q/n as the fractional part of
// a Dedekind sum S(m, n'), together with a self-contained certificate.
//
// Odd n:  pick a prime p == 1 (mod 4) with q p == 2 (mod n), a root r of
//         r^2 == -1 (mod p), and m == 1 (mod n), m == r (mod p); n' = n p.
// Even n: pick a prime p == 1 (mod 4) with q p == 1 (mod n), and
//         m == 1 (mod 2n), m == r (mod p); n' = 2 n p.
//         When 4 | n and q == 3 (mod 4) the target n - q is realized instead
//         and the result negated through S(n' - m, n') = -S(m, n').

#include <optional>
#include <string_view>

#include "dsum/modular.hpp"
#include "dsum/numeric.hpp"

namespace dsum {

enum class RealizationCase { Trivial, Odd, Even };

std::string_view to_string(RealizationCase c) noexcept;
std::optional<RealizationCase> parse_realization_case(std::string_view text) noexcept;

struct RealizationCertificate {
    BigInt q;
    BigInt n;
    RealizationCase realization_case = RealizationCase::Trivial;
    bool sign_flipped = false;
    BigInt p;        // 1 in the trivial case
    BigInt root;     // root^2 == -1 (mod p)
    BigInt m;        // reported argument, 0 <= m < n_prime
    BigInt n_prime;
    BigInt m_star;   // m * m_star == 1 (mod n_prime)
    Rational s_value;  // S(m, n_prime)

    friend bool operator==(const RealizationCertificate&, const RealizationCertificate&) = default;
};

struct RealizeOptions {
    SearchOptions search;
    /// Lower bound for the prime search.
    BigInt prime_search_start = 2;
};

/// Throws InvalidTarget unless n >= 1, 0 <= q < n and gcd(q, n) = 1.
void check_target(const BigInt& q, const BigInt& n);

/// Dispatches on q and the parity of n; propagates SearchExhausted.
RealizationCertificate realize(const BigInt& q, const BigInt& n, const RealizeOptions& options = {});

/// Requires n odd, n >= 3, 1 <= q < n, gcd(q, n) = 1.
RealizationCertificate realize_odd(const BigInt& q, const BigInt& n, const RealizeOptions& options = {});

/// Requires n even, 1 <= q < n, gcd(q, n) = 1 and q == 1 (mod 4) when 4 | n.
/// Never flips the sign itself.
RealizationCertificate realize_even(const BigInt& q, const BigInt& n, const RealizeOptions& options = {});

/// Checks, without re-running the construction:
///  - 1 <= n, 0 <= q < n, gcd(q, n) = 1;
///  - 0 <= m < n_prime, gcd(m, n_prime) = 1, m * m_star == 1 (mod n_prime);
///  - frac((m + m_star) / n_prime) == q/n;
///  - S(m, n_prime) by reciprocity descent equals s_value, and frac(s_value) == q/n.
bool verify_certificate(const RealizationCertificate& cert);

/// The congruences the construction guarantees (see file comment), including
/// primality of p. Stronger than verify_certificate; used for auditing.
bool check_construction(const RealizationCertificate& cert, int mr_rounds = 40);

} // namespace dsum
