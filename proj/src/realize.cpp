#include "dsum/realize.hpp"

#include "dsum/dedekind.hpp"
#include "dsum/error.hpp"

namespace dsum {

std::string_view to_string(RealizationCase c) noexcept {
    switch (c) {
    case RealizationCase::Trivial: return "trivial";
    case RealizationCase::Odd: return "odd";
    case RealizationCase::Even: return "even";
    }
    return "unknown";
}

std::optional<RealizationCase> parse_realization_case(std::string_view text) noexcept {
    if (text == "trivial") return RealizationCase::Trivial;
    if (text == "odd") return RealizationCase::Odd;
    if (text == "even") return RealizationCase::Even;
    return std::nullopt;
}

void check_target(const BigInt& q, const BigInt& n) {
    if (n < 1 || q < 0 || q >= n) {
        throw Error(ErrorKind::InvalidTarget,
                    "need n >= 1 and 0 <= q < n, got q=" + to_string(q) + " n=" + to_string(n));
    }
    if (gcd(q, n) != 1) {
        throw Error(ErrorKind::InvalidTarget, "gcd(" + to_string(q) + ", " + to_string(n) + ") != 1");
    }
}

namespace {

BigInt prime_for_class(const Congruence& unit_class, const RealizeOptions& options) {
    const Congruence merged = crt({unit_class, Congruence(1, 4)});
    return find_prime_in_ap(merged.residue(), merged.modulus(), options.prime_search_start, options.search);
}

RealizationCertificate finish(const BigInt& q, const BigInt& n, RealizationCase c, const BigInt& p,
                              const BigInt& root, const Congruence& m_class, const BigInt& n_prime) {
    RealizationCertificate cert;
    cert.q = q;
    cert.n = n;
    cert.realization_case = c;
    cert.p = p;
    cert.root = root;
    cert.m = crt({m_class, Congruence(root, p)}).residue();
    cert.n_prime = n_prime;
    cert.m_star = mod_inverse(cert.m, n_prime);
    cert.s_value = scaled_dedekind_sum({cert.m, n_prime});
    return cert;
}

} // namespace

RealizationCertificate realize_odd(const BigInt& q, const BigInt& n, const RealizeOptions& options) {
    check_target(q, n);
    if (is_even(n) || n < 3 || q == 0) {
        throw Error(ErrorKind::InvalidTarget, "odd construction needs odd n >= 3 and q != 0");
    }
    // q p == 2 (mod n)
    const BigInt p = prime_for_class(Congruence(2 * mod_inverse(q, n), n), options);
    const BigInt root = sqrt_minus_one(p, options.search.mr_rounds);
    return finish(q, n, RealizationCase::Odd, p, root, Congruence(1, n), n * p);
}

RealizationCertificate realize_even(const BigInt& q, const BigInt& n, const RealizeOptions& options) {
    check_target(q, n);
    if (!is_even(n) || q == 0) {
        throw Error(ErrorKind::InvalidTarget, "even construction needs even n and q != 0");
    }
    if (mod_floor(n, 4) == 0 && mod_floor(q, 4) != 1) {
        throw Error(ErrorKind::InvalidTarget,
                    "even construction with 4 | n needs q == 1 (mod 4), got q=" + to_string(q));
    }
    // q p == 1 (mod n)
    const BigInt p = prime_for_class(Congruence(mod_inverse(q, n), n), options);
    const BigInt root = sqrt_minus_one(p, options.search.mr_rounds);
    return finish(q, n, RealizationCase::Even, p, root, Congruence(1, 2 * n), 2 * n * p);
}

RealizationCertificate realize(const BigInt& q, const BigInt& n, const RealizeOptions& options) {
    check_target(q, n);
    if (q == 0) {
        RealizationCertificate cert;
        cert.q = 0;
        cert.n = 1;
        cert.p = 1;
        cert.root = 0;
        cert.m = 0;
        cert.n_prime = 1;
        cert.m_star = 0;
        cert.s_value = Rational(0);
        return cert;
    }
    if (!is_even(n)) {
        return realize_odd(q, n, options);
    }
    if (mod_floor(n, 4) != 0 || mod_floor(q, 4) == 1) {
        return realize_even(q, n, options);
    }

    RealizationCertificate cert = realize_even(n - q, n, options);
    cert.q = q;
    cert.sign_flipped = true;
    cert.m = mod_floor(-cert.m, cert.n_prime);
    cert.m_star = mod_floor(-cert.m_star, cert.n_prime);
    cert.s_value = -cert.s_value;
    return cert;
}

bool verify_certificate(const RealizationCertificate& cert) {
    if (cert.n < 1 || cert.q < 0 || cert.q >= cert.n || gcd(cert.q, cert.n) != 1) {
        return false;
    }
    if (cert.n_prime < 1 || cert.m < 0 || cert.m >= cert.n_prime || gcd(cert.m, cert.n_prime) != 1) {
        return false;
    }
    if (mod_floor(cert.m * cert.m_star - 1, cert.n_prime) != 0) {
        return false;
    }
    const Rational target(cert.q, cert.n);
    if (frac(Rational(cert.m + cert.m_star, cert.n_prime)) != target) {
        return false;
    }
    if (scaled_dedekind_sum({cert.m, cert.n_prime}) != cert.s_value) {
        return false;
    }
    return frac(cert.s_value) == target;
}

bool check_construction(const RealizationCertificate& cert, int mr_rounds) {
    if (!verify_certificate(cert)) {
        return false;
    }
    if (cert.realization_case == RealizationCase::Trivial) {
        return cert.q == 0 && cert.n == 1 && cert.n_prime == 1 && cert.m == 0 && !cert.sign_flipped;
    }
    if (!is_prime(cert.p, mr_rounds) || mod_floor(cert.p, 4) != 1) {
        return false;
    }
    // The congruences hold for the unflipped argument and target.
    const BigInt m = cert.sign_flipped ? mod_floor(-cert.m, cert.n_prime) : cert.m;
    const BigInt q = cert.sign_flipped ? cert.n - cert.q : cert.q;
    if (mod_floor(m - cert.root, cert.p) != 0 || mod_floor(m * m + 1, cert.p) != 0) {
        return false;
    }
    if (cert.realization_case == RealizationCase::Odd) {
        return !cert.sign_flipped && !is_even(cert.n) && cert.n_prime == cert.n * cert.p &&
               mod_floor(m - 1, cert.n) == 0 && mod_floor(q * cert.p - 2, cert.n) == 0;
    }
    return is_even(cert.n) && cert.n_prime == 2 * cert.n * cert.p && mod_floor(m - 1, 2 * cert.n) == 0 &&
           mod_floor(q * cert.p - 1, cert.n) == 0;
}

} // namespace dsum
