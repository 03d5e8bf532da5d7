#pragma once

// Enumeration of the fractional parts {frac(S(m, n)) : 0 <= m < n, gcd(m, n) = 1}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsum/numeric.hpp"

namespace dsum {

enum class SurveyMethod { Eq1, Naive, Fast };

struct SurveyCaps {
    std::int64_t eq1 = 100'000;
    std::int64_t naive = 1'000;
    std::int64_t fast = 10'000;
};

struct FracSurveyReport {
    BigInt n;
    std::vector<Rational> attained;  // distinct, ascending, in [0, 1)
    std::int64_t count = 0;
    std::optional<Rational> bound;
    std::optional<bool> bound_satisfied;

    friend bool operator==(const FracSurveyReport&, const FracSurveyReport&) = default;
};

/// Eq1 uses frac((m + m*) / n); Naive and Fast evaluate S(m, n) directly.
/// Throws InvalidArgument for n < 1 and TooLarge above the method's cap.
FracSurveyReport attained_frac_set(const BigInt& n, SurveyMethod method = SurveyMethod::Eq1,
                                   const SurveyCaps& caps = {});

/// Survey of a prime p >= 3 with bound (p + 1) / 2. Throws NotPrime otherwise.
FracSurveyReport prime_bound_report(const BigInt& p, SurveyMethod method = SurveyMethod::Eq1,
                                    const SurveyCaps& caps = {});

/// First line "# n=<n>,count=<c>[,bound=<a/b>,bound_satisfied=<bool>]",
/// then one "n,frac_num,frac_den" row per attained value.
std::string to_csv(const FracSurveyReport& report);

} // namespace dsum
