#pragma once

// JSON forms of certificates and survey reports. Integers are decimal
// strings, rationals "a/b", booleans plain.

#include <string_view>

#include <json.hpp>

#include "dsum/realize.hpp"
#include "dsum/survey.hpp"

namespace dsum {

nlohmann::json to_json(const RealizationCertificate& cert);

/// Throws MalformedCertificate on missing or ill-typed fields.
RealizationCertificate certificate_from_json(const nlohmann::json& j);
RealizationCertificate parse_certificate(std::string_view text);

nlohmann::json to_json(const FracSurveyReport& report);

/// Throws InvalidArgument on missing or ill-typed fields.
FracSurveyReport report_from_json(const nlohmann::json& j);

} // namespace dsum
