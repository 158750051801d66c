#include <doctest.h>

#include "sigloc/io.hpp"

using namespace sigloc;

TEST_CASE("catalog exports round-trip through parse and serialize") {
    for (const auto& entry : catalog_entries()) {
        const std::string text = serialize_manifold(entry.data);
        const ParseResult parsed = parse_manifold(text);
        const std::string first_issue = parsed.issues.empty() ? "" : parsed.issues[0].str();
        INFO(first_issue);
        REQUIRE(parsed.ok());
        CHECK(serialize_manifold(*parsed.data) == text);

        // And the reparsed data is the same structural object.
        CHECK(parsed.data->name == entry.data.name);
        CHECK(parsed.data->dim == entry.data.dim);
        CHECK(parsed.data->spin == entry.data.spin);
        REQUIRE(parsed.data->components.size() == entry.data.components.size());
        for (std::size_t i = 0; i < entry.data.components.size(); ++i) {
            CHECK(parsed.data->components[i].fundamental == entry.data.components[i].fundamental);
            CHECK(parsed.data->components[i].tangent_roots == entry.data.components[i].tangent_roots);
        }
    }
}

TEST_CASE("semantic violations are collected with positions") {
    const std::string text = R"({
      "name": "bad", "dim": 4, "spin": false,
      "components": [
        {"name": "p", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "1"}],
         "tangent_roots": [], "normal": [{"weight": 0, "c1": []}, {"weight": 1, "c1": []}]}
      ]
    })";
    const ParseResult parsed = parse_manifold(text);
    CHECK_FALSE(parsed.ok());
    REQUIRE(parsed.issues.size() == 1);
    CHECK(parsed.issues[0].message.find("weight must be nonzero") != std::string::npos);
    CHECK(parsed.issues[0].path.find("p") != std::string::npos);
}

TEST_CASE("zero denominators in rationals are rejected at parse time") {
    const std::string text = R"({
      "name": "bad", "dim": 2, "spin": false,
      "components": [
        {"name": "p", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "1/0"}],
         "tangent_roots": [], "normal": [{"weight": 1, "c1": []}]}
      ]
    })";
    const ParseResult parsed = parse_manifold(text);
    CHECK_FALSE(parsed.ok());
    REQUIRE_FALSE(parsed.issues.empty());
    CHECK(parsed.issues[0].path.find("fundamental[0].value") != std::string::npos);
}

TEST_CASE("syntax errors carry a byte position") {
    const ParseResult parsed = parse_manifold("{\"name\": ");
    CHECK_FALSE(parsed.ok());
    REQUIRE_FALSE(parsed.issues.empty());
    CHECK(parsed.issues[0].path.rfind("byte ", 0) == 0);
}

TEST_CASE("multiple issues are reported at once") {
    const std::string text = R"({
      "name": "bad", "dim": 4, "spin": false,
      "components": [
        {"name": "a", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "x"}],
         "tangent_roots": [], "normal": [{"weight": 0, "c1": []}, {"weight": 2, "c1": []}]},
        {"name": "b", "dim": 0, "generators": [], "fundamental": [{"exponents": [], "value": "1"}],
         "tangent_roots": [[{"generator": "zz", "coefficient": "1"}]], "normal": []}
      ]
    })";
    const ParseResult parsed = parse_manifold(text);
    CHECK_FALSE(parsed.ok());
    CHECK(parsed.issues.size() >= 2);
}

TEST_CASE("unknown generators and malformed expressions are rejected") {
    const std::string text = R"({
      "name": "bad", "dim": 4, "spin": false,
      "components": [
        {"name": "s", "dim": 2, "generators": [{"name": "h", "degree": 2}],
         "fundamental": [{"exponents": [1], "value": "1"}],
         "tangent_roots": [[{"generator": "nope", "coefficient": "2"}]],
         "normal": [{"weight": 1, "c1": [{"generator": "h", "coefficient": "1"}]}]}
      ]
    })";
    const ParseResult parsed = parse_manifold(text);
    CHECK_FALSE(parsed.ok());
    CHECK(parsed.issues[0].message.find("unknown generator") != std::string::npos);
}

TEST_CASE("report serializers carry the schema version") {
    const auto& entry = find_catalog_entry("cp2_linear")->data;
    const auto report = equivariant_signature(entry, EvalMode::symbolic());
    const auto j = report_to_json(report, entry.name);
    CHECK(j["schema_version"] == kReportSchemaVersion);
    CHECK(j["total"] == "1");
    CHECK(j["rigid"] == true);
    CHECK(j["contributions"].size() == 3);
}
