#include "dsum/numeric.hpp"

#include <cctype>

#include "dsum/error.hpp"

namespace dsum {

namespace {

bool is_decimal(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        i = 1;
    }
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

BigInt parse_bigint(std::string_view text) {
    if (!is_decimal(text)) {
        throw Error(ErrorKind::InvalidArgument, "not a decimal integer: '" + std::string(text) + "'");
    }
    if (text[0] == '+') {
        text.remove_prefix(1);
    }
    return BigInt(std::string(text), 10);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    if (m == 0) {
        throw Error(ErrorKind::ZeroDenominator, "modulus is zero");
    }
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw Error(ErrorKind::ZeroDenominator, "rational with zero denominator");
    }
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::operator-() const { return Rational(-num_, den_, Canonical{}); }

Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
    }
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) {
        throw Error(ErrorKind::ZeroDenominator, "division by zero rational");
    }
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    reduce();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const { return to_string(num_) + "/" + to_string(den_); }

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_bigint(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '+') {
        throw Error(ErrorKind::InvalidArgument, "malformed rational: '" + std::string(text) + "'");
    }
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(den_text));
}

Rational normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt floor(const Rational& x) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q;
}

Rational frac(const Rational& x) { return Rational(mod_floor(x.num(), x.den()), x.den()); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

} // namespace dsum
