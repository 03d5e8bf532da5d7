#pragma once

// Exact integer and rational arithmetic shared by every other module.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dsum {

using BigInt = mpz_class;

/// Parses a decimal integer with an optional leading minus sign.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& x);

/// Remainder in [0, |m|); m must be non-zero.
BigInt mod_floor(const BigInt& a, const BigInt& m);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

bool is_even(const BigInt& x);

/// Exact fraction kept in lowest terms with a positive denominator.
/// Two equal values always have identical fields.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design of numeric literals
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
    Rational(BigInt num, BigInt den);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "<num>/<den>", denominator always printed.
    std::string str() const;
    /// Inverse of str(); also accepts a bare integer.
    static Rational parse(std::string_view text);

private:
    struct Canonical {};
    Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce();

    BigInt num_;
    BigInt den_;
};

/// Reduced form of num/den; throws ErrorKind::ZeroDenominator when den == 0.
Rational normalize(const BigInt& num, const BigInt& den);

/// Greatest integer <= x.
BigInt floor(const Rational& x);

/// x - floor(x), always in [0, 1).
Rational frac(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace dsum
