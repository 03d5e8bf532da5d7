#include "dsum/survey.hpp"

#include <algorithm>
#include <set>

#include "dsum/dedekind.hpp"
#include "dsum/error.hpp"
#include "dsum/modular.hpp"

namespace dsum {

namespace {

std::int64_t cap_for(SurveyMethod method, const SurveyCaps& caps) {
    switch (method) {
    case SurveyMethod::Eq1: return caps.eq1;
    case SurveyMethod::Naive: return caps.naive;
    case SurveyMethod::Fast: return caps.fast;
    }
    return 0;
}

Rational frac_at(const DedekindArgs& args, SurveyMethod method) {
    switch (method) {
    case SurveyMethod::Eq1: return scaled_sum_frac_via_inverse(args);
    case SurveyMethod::Naive: return frac(scaled_dedekind_sum(args, Evaluator::Naive));
    case SurveyMethod::Fast: return frac(scaled_dedekind_sum(args, Evaluator::Fast));
    }
    return {};
}

} // namespace

FracSurveyReport attained_frac_set(const BigInt& n, SurveyMethod method, const SurveyCaps& caps) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "survey modulus must be >= 1, got " + to_string(n));
    }
    const std::int64_t cap = cap_for(method, caps);
    if (n > cap) {
        throw Error(ErrorKind::TooLarge,
                    "survey of n = " + to_string(n) + " exceeds the cap " + std::to_string(cap));
    }

    std::set<Rational> seen;
    for (BigInt m = 0; m < n; ++m) {
        if (gcd(m, n) == 1) {
            seen.insert(frac_at({m, n}, method));
        }
    }

    FracSurveyReport report;
    report.n = n;
    report.attained.assign(seen.begin(), seen.end());
    report.count = static_cast<std::int64_t>(report.attained.size());
    return report;
}

FracSurveyReport prime_bound_report(const BigInt& p, SurveyMethod method, const SurveyCaps& caps) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorKind::NotPrime, to_string(p) + " is not a prime >= 3");
    }
    FracSurveyReport report = attained_frac_set(p, method, caps);
    report.bound = Rational(p + 1, 2);
    report.bound_satisfied = Rational(report.count) <= *report.bound;
    return report;
}

std::string to_csv(const FracSurveyReport& report) {
    const std::string n = to_string(report.n);
    std::string out = "# n=" + n + ",count=" + std::to_string(report.count);
    if (report.bound) {
        out += ",bound=" + report.bound->str();
    }
    if (report.bound_satisfied) {
        out += std::string(",bound_satisfied=") + (*report.bound_satisfied ? "true" : "false");
    }
    out += '\n';
    for (const Rational& r : report.attained) {
        out += n + "," + to_string(r.num()) + "," + to_string(r.den()) + "\n";
    }
    return out;
}

} // namespace dsum
