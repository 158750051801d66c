#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "sigloc/catalog.hpp"
#include "sigloc/localization.hpp"
#include "sigloc/model.hpp"
#include "sigloc/twisted.hpp"

namespace sigloc {

struct ParseIssue {
    std::string path;     // JSON-pointer-like location, or "byte N" for syntax errors
    std::string message;
    std::string str() const { return path.empty() ? message : path + ": " + message; }
};

struct ParseResult {
    std::optional<ManifoldData> data;
    std::vector<ParseIssue> issues;
    bool ok() const { return data.has_value() && issues.empty(); }
};

/// Structural parse followed by full validation; every issue is reported at
/// once with its location. Rejects, never coerces.
ParseResult parse_manifold(const std::string& text);

std::string serialize_manifold(const ManifoldData& data, bool include_expected = true);

// Report serialization. Schema version 1; text and JSON carry the same values.
inline constexpr int kReportSchemaVersion = 1;

nlohmann::json report_to_json(const LocalizationReport& report, const std::string& manifold);
nlohmann::json report_to_json(const PrimeDecision& decision, const std::string& manifold);
nlohmann::json report_to_json(const TwistedSeriesReport& report, const std::string& manifold);
nlohmann::json report_to_json(const SignatureVanishingVerdict& verdict);
nlohmann::json report_to_json(const TwistedVanishingVerdict& verdict);
nlohmann::json report_to_json(const CatalogReport& report);

std::string report_to_text(const LocalizationReport& report);
std::string report_to_text(const PrimeDecision& decision);
std::string report_to_text(const TwistedSeriesReport& report);
std::string report_to_text(const SignatureVanishingVerdict& verdict);
std::string report_to_text(const TwistedVanishingVerdict& verdict);
std::string report_to_text(const CatalogReport& report);

}  // namespace sigloc
