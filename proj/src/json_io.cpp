#include "dsum/json_io.hpp"

#include "dsum/error.hpp"

namespace dsum {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, ErrorKind kind) {
    if (!j.is_object()) {
        throw Error(kind, "expected a JSON object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw Error(kind, std::string("missing field '") + key + "'");
    }
    return *it;
}

std::string string_field(const json& j, const char* key, ErrorKind kind) {
    const json& v = field(j, key, kind);
    if (!v.is_string()) {
        throw Error(kind, std::string("field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

BigInt integer_field(const json& j, const char* key, ErrorKind kind) {
    try {
        return parse_bigint(string_field(j, key, kind));
    } catch (const Error& e) {
        if (e.kind() == kind) {
            throw;
        }
        throw Error(kind, std::string("field '") + key + "': " + e.what());
    }
}

Rational rational_field(const json& j, const char* key, ErrorKind kind) {
    try {
        return Rational::parse(string_field(j, key, kind));
    } catch (const Error& e) {
        if (e.kind() == kind) {
            throw;
        }
        throw Error(kind, std::string("field '") + key + "': " + e.what());
    }
}

bool bool_field(const json& j, const char* key, ErrorKind kind) {
    const json& v = field(j, key, kind);
    if (!v.is_boolean()) {
        throw Error(kind, std::string("field '") + key + "' must be a boolean");
    }
    return v.get<bool>();
}

} // namespace

json to_json(const RealizationCertificate& cert) {
    return json{
        {"q", to_string(cert.q)},
        {"n", to_string(cert.n)},
        {"case", std::string(to_string(cert.realization_case))},
        {"sign_flipped", cert.sign_flipped},
        {"p", to_string(cert.p)},
        {"root", to_string(cert.root)},
        {"m", to_string(cert.m)},
        {"n_prime", to_string(cert.n_prime)},
        {"m_star", to_string(cert.m_star)},
        {"S_value", cert.s_value.str()},
    };
}

RealizationCertificate certificate_from_json(const json& j) {
    constexpr auto kind = ErrorKind::MalformedCertificate;
    RealizationCertificate cert;
    cert.q = integer_field(j, "q", kind);
    cert.n = integer_field(j, "n", kind);
    const std::string case_name = string_field(j, "case", kind);
    const auto c = parse_realization_case(case_name);
    if (!c) {
        throw Error(kind, "unknown case '" + case_name + "'");
    }
    cert.realization_case = *c;
    cert.sign_flipped = bool_field(j, "sign_flipped", kind);
    cert.p = integer_field(j, "p", kind);
    cert.root = integer_field(j, "root", kind);
    cert.m = integer_field(j, "m", kind);
    cert.n_prime = integer_field(j, "n_prime", kind);
    cert.m_star = integer_field(j, "m_star", kind);
    cert.s_value = rational_field(j, "S_value", kind);
    return cert;
}

RealizationCertificate parse_certificate(std::string_view text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) {
        throw Error(ErrorKind::MalformedCertificate, "not valid JSON");
    }
    return certificate_from_json(j);
}

json to_json(const FracSurveyReport& report) {
    json attained = json::array();
    for (const Rational& r : report.attained) {
        attained.push_back(r.str());
    }
    return json{
        {"n", to_string(report.n)},
        {"attained", std::move(attained)},
        {"count", report.count},
        {"bound", report.bound ? json(report.bound->str()) : json(nullptr)},
        {"bound_satisfied", report.bound_satisfied ? json(*report.bound_satisfied) : json(nullptr)},
    };
}

FracSurveyReport report_from_json(const json& j) {
    constexpr auto kind = ErrorKind::InvalidArgument;
    FracSurveyReport report;
    report.n = integer_field(j, "n", kind);
    const json& attained = field(j, "attained", kind);
    if (!attained.is_array()) {
        throw Error(kind, "field 'attained' must be an array");
    }
    for (const json& v : attained) {
        if (!v.is_string()) {
            throw Error(kind, "attained values must be strings");
        }
        report.attained.push_back(Rational::parse(v.get<std::string>()));
    }
    const json& count = field(j, "count", kind);
    if (!count.is_number_integer()) {
        throw Error(kind, "field 'count' must be an integer");
    }
    report.count = count.get<std::int64_t>();
    if (!field(j, "bound", kind).is_null()) {
        report.bound = rational_field(j, "bound", kind);
    }
    if (!field(j, "bound_satisfied", kind).is_null()) {
        report.bound_satisfied = bool_field(j, "bound_satisfied", kind);
    }
    return report;
}

} // namespace dsum
