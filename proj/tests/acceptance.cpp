// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsum/cli.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/modular.hpp"
#include "dsum/realize.hpp"
#include "dsum/survey.hpp"

using dsum::BigInt;
using dsum::Rational;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double limit_ms;  // 0: no runtime bound
    std::function<Outcome()> body;
};

std::vector<std::pair<long, long>> coprime_sweep(long max_n) {
    std::vector<std::pair<long, long>> pairs;
    for (long n = 1; n <= max_n; ++n) {
        for (long m = 0; m < n; ++m) {
            if (std::gcd(m, n) == 1) pairs.emplace_back(m, n);
        }
    }
    return pairs;
}

std::string pair_str(long m, long n) { return "(" + std::to_string(m) + ", " + std::to_string(n) + ")"; }

Outcome paper_example_evaluator() {
    Outcome o;
    const Rational target = Rational(120) + Rational(7, 132);
    o.require(dsum::scaled_dedekind_sum({1319, 134376}) == target, "S(1319, 134376) != 120 + 7/132");
    o.require(dsum::scaled_dedekind_sum({133057, 134376}) == -target, "S(133057, 134376) != -120 - 7/132");
    return o;
}

Outcome paper_example_realizer() {
    Outcome o;
    std::ostringstream out, err;
    std::istringstream in;
    const int code =
        dsum::cli::run({"realize", "7", "132", "--prime-search-start", "509", "--json"}, out, err, in);
    o.require(code == 0, "realize 7 132 --prime-search-start 509 exited " + std::to_string(code));
    if (code == 0) {
        const auto j = nlohmann::json::parse(out.str());
        o.require(j.at("p") == "509", "p != 509");
        o.require(j.at("n_prime") == "134376", "n' != 134376");
        o.require(j.at("m") == "1319", "m != 1319");
    }
    const auto least = dsum::realize(7, 132);
    o.require(least.p == 113 && least.n_prime == 29832 && least.m == 18743,
              "default start did not give p=113, n'=29832, m=18743");
    o.require(dsum::verify_certificate(least), "default-start certificate failed verification");
    return o;
}

Outcome theorem_roundtrip() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> mod(1, 5000);
    int odd = 0, even = 0, flipped = 0;
    for (int i = 0; i < 500; ++i) {
        // Alternate parities so both constructions are exercised.
        long n = mod(rng);
        if ((n % 2 == 0) != (i % 2 == 0)) n = n == 5000 ? 4999 : n + 1;
        long q = std::uniform_int_distribution<long>(0, n - 1)(rng);
        while (std::gcd(q, n) != 1) q = (q + 1) % n;
        const auto cert = dsum::realize(q, n);
        o.require(dsum::verify_certificate(cert), "certificate for " + pair_str(q, n) + " failed");
        const Rational s = dsum::scaled_dedekind_sum({cert.m, cert.n_prime}, dsum::Evaluator::Fast);
        o.require(dsum::frac(s) == Rational(q, n), "frac(S(m, n')) != q/n for " + pair_str(q, n));
        odd += cert.realization_case == dsum::RealizationCase::Odd;
        even += cert.realization_case == dsum::RealizationCase::Even;
        flipped += cert.sign_flipped;
    }
    o.require(odd > 0 && even > 0 && flipped > 0, "parity mix not exercised");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (auto [m, n] : coprime_sweep(200)) {
        o.require(dsum::dedekind_sum_naive({m, n}) == dsum::dedekind_sum_fast({m, n}),
                  "naive != fast at " + pair_str(m, n));
    }
    return o;
}

Outcome inverse_congruence() {
    Outcome o;
    for (auto [m, n] : coprime_sweep(200)) {
        const Rational S = dsum::scaled_dedekind_sum({m, n});
        const BigInt inv = dsum::mod_inverse(m, n);
        o.require((S - Rational(m + inv, n)).is_integer(), "S - (m + m*)/n not integral at " + pair_str(m, n));
    }
    return o;
}

Outcome reciprocity() {
    Outcome o;
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<unsigned long> dist(1, 1'000'000'000'000'000'000UL);
    int done = 0;
    while (done < 1000) {
        const BigInt m = dist(rng), n = dist(rng);
        if (dsum::gcd(m, n) != 1) continue;
        ++done;
        const Rational residual = dsum::dedekind_sum_fast({m, n}) + dsum::dedekind_sum_fast({n, m}) +
                                  Rational(1, 4) -
                                  (Rational(m, n) + Rational(n, m) + Rational(1, m * n)) / Rational(12);
        o.require(residual.is_zero(), "reciprocity residual non-zero for (" + dsum::to_string(m) + ", " +
                                          dsum::to_string(n) + ")");
    }
    return o;
}

Outcome prime_count_remark() {
    Outcome o;
    for (long p = 3; p <= 200; ++p) {
        if (!dsum::is_prime(p)) continue;
        std::set<Rational> fracs;
        for (long m = 1; m < p; ++m) {
            fracs.insert(dsum::frac(Rational(m + dsum::mod_inverse(m, p), p)));
        }
        o.require(Rational(static_cast<long>(fracs.size())) <= Rational(p + 1, 2),
                  "bound violated at p = " + std::to_string(p));
        o.require(dsum::prime_bound_report(p).count == static_cast<long>(fracs.size()),
                  "survey count differs at p = " + std::to_string(p));
    }
    const long expected[][2] = {{3, 2}, {5, 3}, {7, 4}};
    for (const auto& [p, count] : expected) {
        o.require(dsum::prime_bound_report(p).count == count, "count mismatch at p = " + std::to_string(p));
    }
    return o;
}

Outcome symmetry_suite() {
    Outcome o;
    for (auto [m, n] : coprime_sweep(200)) {
        const Rational S = dsum::scaled_dedekind_sum({m, n});
        o.require(dsum::scaled_dedekind_sum({m + n, n}) == S, "periodicity fails at " + pair_str(m, n));
        o.require(dsum::scaled_dedekind_sum({n - m, n}) == -S, "oddness fails at " + pair_str(m, n));
        if ((m * m + 1) % n == 0) {
            o.require(S.is_zero(), "zero law fails at " + pair_str(m, n));
        }
    }
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "worked example, evaluator", 10, paper_example_evaluator},
        {"AC2", "worked example, realizer", 100, paper_example_realizer},
        {"AC3", "500 random targets realized and verified", 30'000, theorem_roundtrip},
        {"AC4", "naive == fast for all n <= 200", 60'000, oracle_equivalence},
        {"AC5", "S(m,n) - (m+m*)/n integral for all n <= 200", 0, inverse_congruence},
        {"AC6", "reciprocity on 1000 pairs up to 1e18", 5'000, reciprocity},
        {"AC7", "prime fractional-part count <= (p+1)/2", 0, prime_count_remark},
        {"AC8", "periodicity, oddness, zero law for all n <= 200", 0, symmetry_suite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o = c.body();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms >= c.limit_ms) {
            o.require(false, "runtime " + std::to_string(ms) + " ms over limit " + std::to_string(c.limit_ms) + " ms");
        }
        std::printf("[%s] %s: %s (%.1f ms%s%s)\n", o.ok ? "PASS" : "FAIL", c.id, c.title, ms,
                    o.ok ? "" : "; ", o.detail.c_str());
        failures += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
