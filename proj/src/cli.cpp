#include "dsum/cli.hpp"

#include <fstream>
#include <iterator>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsum/dedekind.hpp"
#include "dsum/error.hpp"
#include "dsum/json_io.hpp"
#include "dsum/realize.hpp"
#include "dsum/survey.hpp"

namespace dsum::cli {

namespace {

struct Config {
    bool json = false;
    std::string evaluator = "fast";
    std::string prime_search_start = "2";
    int mr_rounds = 40;
    std::uint64_t search_cap = 1'000'000;
    bool prime_bound = false;
};

int exit_code_for(ErrorKind kind) {
    return kind == ErrorKind::SearchExhausted ? kExhausted : kInvalidInput;
}

RealizeOptions realize_options(const Config& cfg) {
    RealizeOptions options;
    options.search.mr_rounds = cfg.mr_rounds;
    options.search.search_cap = cfg.search_cap;
    options.prime_search_start = parse_bigint(cfg.prime_search_start);
    if (options.prime_search_start < 2) {
        throw Error(ErrorKind::InvalidArgument, "--prime-search-start must be >= 2");
    }
    return options;
}

Evaluator evaluator_of(const Config& cfg) {
    return cfg.evaluator == "naive" ? Evaluator::Naive : Evaluator::Fast;
}

void print_certificate(const RealizationCertificate& cert, const Config& cfg, std::ostream& out) {
    if (cfg.json) {
        out << to_json(cert).dump(2) << '\n';
        return;
    }
    out << "q = " << to_string(cert.q) << '\n'
        << "n = " << to_string(cert.n) << '\n'
        << "case = " << to_string(cert.realization_case) << '\n'
        << "sign_flipped = " << (cert.sign_flipped ? "true" : "false") << '\n'
        << "p = " << to_string(cert.p) << '\n'
        << "root = " << to_string(cert.root) << '\n'
        << "m = " << to_string(cert.m) << '\n'
        << "n_prime = " << to_string(cert.n_prime) << '\n'
        << "m_star = " << to_string(cert.m_star) << '\n'
        << "S_value = " << cert.s_value << '\n';
}

int cmd_sum(const std::string& m_text, const std::string& n_text, const Config& cfg, std::ostream& out) {
    const BigInt n = parse_bigint(n_text);
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
    }
    const BigInt m = mod_floor(parse_bigint(m_text), n);
    const Rational s = dedekind_sum({m, n}, evaluator_of(cfg));
    const Rational scaled = s * Rational(12);
    if (cfg.json) {
        const nlohmann::json j{{"m", to_string(m)},
                               {"n", to_string(n)},
                               {"evaluator", cfg.evaluator},
                               {"S", scaled.str()},
                               {"s", s.str()}};
        out << j.dump(2) << '\n';
    } else {
        out << "m = " << to_string(m) << '\n'
            << "n = " << to_string(n) << '\n'
            << "S = " << scaled << '\n'
            << "s = " << s << '\n';
    }
    return kOk;
}

int cmd_realize(const std::string& q_text, const std::string& n_text, const Config& cfg, std::ostream& out,
                std::ostream& err) {
    BigInt q, n;
    try {
        q = parse_bigint(q_text);
        n = parse_bigint(n_text);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidTarget, e.what());
    }
    const RealizationCertificate cert = realize(q, n, realize_options(cfg));
    if (!verify_certificate(cert)) {
        err << "error: produced certificate failed self-verification\n";
        return kVerificationFailed;
    }
    print_certificate(cert, cfg, out);
    return kOk;
}

int cmd_verify(const std::string& path, const Config& cfg, std::ostream& out, std::istream& in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) {
            throw Error(ErrorKind::MalformedCertificate, "cannot read '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    const RealizationCertificate cert = parse_certificate(text);
    const bool ok = verify_certificate(cert);
    if (cfg.json) {
        out << nlohmann::json{{"verified", ok}}.dump() << '\n';
    } else {
        out << (ok ? "verified" : "NOT verified") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
}

int cmd_survey(const std::string& n_text, const Config& cfg, bool evaluator_given, std::ostream& out) {
    const BigInt n = parse_bigint(n_text);
    SurveyMethod method = SurveyMethod::Eq1;
    if (evaluator_given) {
        method = cfg.evaluator == "naive" ? SurveyMethod::Naive : SurveyMethod::Fast;
    }
    const FracSurveyReport report = cfg.prime_bound ? prime_bound_report(n, method) : attained_frac_set(n, method);
    if (cfg.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        out << to_csv(report);
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact Dedekind sums and realization of fractional parts", "dsum"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_flag("--json", cfg.json, "Emit JSON instead of text");
    auto* evaluator_opt = app.add_option("--evaluator", cfg.evaluator, "Dedekind sum evaluator")
                              ->check(CLI::IsMember({"naive", "fast"}));
    app.add_option("--prime-search-start", cfg.prime_search_start, "Lower bound for the prime search");
    app.add_option("--mr-rounds", cfg.mr_rounds, "Miller-Rabin rounds above 2^64")->check(CLI::PositiveNumber);
    app.add_option("--search-cap", cfg.search_cap, "Maximum prime-search candidates")
        ->check(CLI::PositiveNumber);

    std::string a, b;
    auto* sum = app.add_subcommand("sum", "Evaluate S(m, n) and s(m, n)");
    sum->add_option("m", a)->required();
    sum->add_option("n", b)->required();

    auto* realize_cmd = app.add_subcommand("realize", "Find (m, n') with frac(S(m, n')) = q/n");
    realize_cmd->add_option("q", a)->required();
    realize_cmd->add_option("n", b)->required();

    auto* verify = app.add_subcommand("verify", "Check a certificate file ('-' for stdin)");
    verify->add_option("file", a)->required();

    auto* survey = app.add_subcommand("survey", "List attained fractional parts of S(., n)");
    survey->add_option("n", a)->required();
    survey->add_flag("--prime-bound", cfg.prime_bound, "Check the (p+1)/2 bound for prime n");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (sum->parsed()) {
            return cmd_sum(a, b, cfg, out);
        }
        if (realize_cmd->parsed()) {
            return cmd_realize(a, b, cfg, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(a, cfg, out, in);
        }
        return cmd_survey(a, cfg, evaluator_opt->count() > 0, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace dsum::cli
