#include <doctest.h>

#include "sigloc/catalog.hpp"
#include "sigloc/localization.hpp"

using namespace sigloc;

TEST_CASE("catalog holds the five named entries in order") {
    const auto& entries = catalog_entries();
    REQUIRE(entries.size() == 5);
    CHECK(entries[0].data.name == "cp1_rotation");
    CHECK(entries[1].data.name == "cp2_linear");
    CHECK(entries[2].data.name == "cp2_with_fixed_cp1");
    CHECK(entries[3].data.name == "s2xs2_diagonal");
    CHECK(entries[4].data.name == "free_action");
    for (const auto& entry : entries) {
        REQUIRE(entry.data.expected.has_value());
        CHECK_FALSE(entry.data.expected->provenance.empty());
    }
}

TEST_CASE("the full catalog run is clean") {
    const CatalogReport report = run_catalog();
    for (const auto& check : report.checks) {
        INFO(check.entry, ": ", check.check, " [", check.detail, "]");
        CHECK(check.pass);
    }
    CHECK(report.all_pass());
}

TEST_CASE("filtering runs a single entry") {
    const CatalogReport report = run_catalog(std::optional<std::string>("cp2_linear"));
    CHECK(report.all_pass());
    for (const auto& check : report.checks) CHECK(check.entry == "cp2_linear");
}

TEST_CASE("unknown entries are an error") {
    CHECK_THROWS_AS(run_catalog(std::optional<std::string>("nonexistent")),
                    std::invalid_argument);
}

TEST_CASE("the two projective-plane presentations share one signature") {
    const auto linear = equivariant_signature(find_catalog_entry("cp2_linear")->data,
                                              EvalMode::symbolic());
    const auto fixed_sphere = equivariant_signature(
        find_catalog_entry("cp2_with_fixed_cp1")->data, EvalMode::symbolic());
    CHECK(linear.total == fixed_sphere.total);
    CHECK(linear.constant_value == Rational(1));
}
