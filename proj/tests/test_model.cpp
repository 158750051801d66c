#include <doctest.h>

#include <algorithm>
#include <random>

#include "sigloc/catalog.hpp"
#include "sigloc/model.hpp"

using namespace sigloc;

namespace {

ManifoldData catalog_copy(const std::string& name) {
    const CatalogEntry* entry = find_catalog_entry(name);
    REQUIRE(entry != nullptr);
    return entry->data;
}

// Independent decision route: enumerate t = r/(2L), L = lcm of |k|, and test
// every weight exactly.
bool brute_force_prime(const std::vector<int>& weights) {
    if (weights.empty()) return true;
    long lcm = 1;
    for (int k : weights) {
        const long a = std::abs(k);
        lcm = lcm / std::__gcd(lcm, a) * a;
    }
    for (long r = 0; r < 2 * lcm; ++r) {
        const Rational t(r, 2 * lcm);
        bool all = true;
        for (int k : weights)
            if (!(Rational(k) * t - Rational(1, 2)).is_integer()) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("catalog entries validate cleanly") {
    for (const auto& entry : catalog_entries()) CHECK(validate(entry.data).empty());
}

TEST_CASE("validation reports zero weights") {
    ManifoldData data = catalog_copy("s2xs2_diagonal");
    data.components[0].normal[0].weight = 0;
    const auto violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule == "weight must be nonzero");
    CHECK(violations[0].component == "nn");
}

TEST_CASE("validation reports duplicate names and bad dimensions") {
    ManifoldData data = catalog_copy("s2xs2_diagonal");
    data.components[1].name = data.components[0].name;
    bool found = false;
    for (const auto& v : validate(data)) found = found || v.rule.find("unique") != std::string::npos;
    CHECK(found);

    ManifoldData odd = catalog_copy("free_action");
    odd.dim = 3;
    CHECK_FALSE(validate(odd).empty());
    odd.dim = 0;
    CHECK_FALSE(validate(odd).empty());
}

TEST_CASE("validation reports codimension mismatches") {
    ManifoldData data = catalog_copy("s2xs2_diagonal");
    data.components[1].normal.pop_back();
    const auto violations = validate(data);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].rule.find("codimension mismatch") != std::string::npos);
}

TEST_CASE("validation reports root-count and functional-degree issues") {
    ManifoldData data = catalog_copy("cp2_with_fixed_cp1");
    data.components[0].tangent_roots.clear();
    CHECK(validate(data).size() == 1);

    ManifoldData bad_functional = catalog_copy("cp2_with_fixed_cp1");
    bad_functional.components[0].fundamental[{0}] = Rational(1);  // degree 0 entry
    CHECK(!validate(bad_functional).empty());

    ManifoldData bad_point = catalog_copy("s2xs2_diagonal");
    bad_point.components[0].fundamental[{}] = Rational(2);
    CHECK(!validate(bad_point).empty());
}

TEST_CASE("weight multisets of the catalog entries") {
    auto sorted = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(weight_multiset(catalog_copy("s2xs2_diagonal"))) ==
          std::vector<int>{-1, -1, -1, -1, 1, 1, 1, 1});
    CHECK(sorted(weight_multiset(catalog_copy("cp2_linear"))) ==
          std::vector<int>{-2, -1, -1, 1, 1, 2});
    CHECK(weight_multiset(catalog_copy("free_action")).empty());
}

TEST_CASE("prime decisions on the named weight sets") {
    const auto one = prime_check_weights({1});
    REQUIRE(one.is_prime());
    CHECK(one.certificate->t == Rational(1, 2));
    CHECK(one.certificate->order == 2);

    const auto semifree = prime_check_weights({1, -1, 1, -1});
    REQUIRE(semifree.is_prime());
    CHECK(semifree.certificate->t == Rational(1, 2));

    const auto odd = prime_check_weights({1, 3});
    REQUIRE(odd.is_prime());
    CHECK(odd.certificate->t == Rational(1, 2));

    const auto scaled = prime_check_weights({2, 6});
    REQUIRE(scaled.is_prime());
    CHECK(scaled.certificate->t == Rational(1, 4));
    CHECK(scaled.certificate->order == 4);

    const auto refused = prime_check_weights({1, 2});
    CHECK_FALSE(refused.is_prime());
    CHECK(refused.witness == std::vector<int>{1, 2});

    const auto vacuous = prime_check_weights({});
    REQUIRE(vacuous.is_prime());
    CHECK(vacuous.certificate->vacuous);
    CHECK(vacuous.certificate->t == Rational(1, 2));
}

TEST_CASE("certificates satisfy the defining congruence") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> size(1, 6);
    std::uniform_int_distribution<int> weight(-12, 12);
    for (int i = 0; i < 300; ++i) {
        std::vector<int> weights;
        const int n = size(rng);
        for (int j = 0; j < n; ++j) {
            int k = weight(rng);
            if (k == 0) k = 1;
            weights.push_back(k);
        }
        const auto decision = prime_check_weights(weights);
        CHECK(decision.is_prime() == brute_force_prime(weights));
        if (decision.is_prime()) {
            CHECK(decision.certificate->verified);
            CHECK(decision.certificate->order % 2 == 0);
            for (int k : weights)
                CHECK((Rational(k) * decision.certificate->t - Rational(1, 2)).is_integer());
        } else {
            REQUIRE(decision.witness.size() == 2);
            CHECK_FALSE(brute_force_prime(decision.witness));
        }
    }
}

TEST_CASE("prime decision ignores weight signs") {
    const auto plus = prime_check_weights({2, 6});
    const auto minus = prime_check_weights({-2, -6});
    CHECK(plus.is_prime() == minus.is_prime());
    CHECK(plus.certificate->t == minus.certificate->t);
}

TEST_CASE("orientation flip is an involution that preserves the prime decision") {
    const ManifoldData data = catalog_copy("cp2_with_fixed_cp1");
    const ManifoldData flipped = orientation_flip(data, 0, 0);
    const ManifoldData twice = orientation_flip(flipped, 0, 0);

    CHECK(flipped.components[0].normal[0].weight == -data.components[0].normal[0].weight);
    CHECK(twice.components[0].normal[0].weight == data.components[0].normal[0].weight);
    CHECK(twice.components[0].fundamental == data.components[0].fundamental);
    CHECK(twice.components[0].normal[0].c1 == data.components[0].normal[0].c1);

    CHECK(prime_check(flipped).is_prime() == prime_check(data).is_prime());
    CHECK_THROWS_AS(orientation_flip(data, 5, 0), std::out_of_range);
    CHECK_THROWS_AS(orientation_flip(data, 0, 9), std::out_of_range);
}
