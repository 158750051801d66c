#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "sigloc/catalog.hpp"
#include "sigloc/localization.hpp"

using namespace sigloc;

namespace {

const PolyG g = PolyG::g_power(1);

ManifoldData catalog_copy(const std::string& name) {
    const CatalogEntry* entry = find_catalog_entry(name);
    REQUIRE(entry != nullptr);
    return entry->data;
}

FixedComponent isolated_point(std::vector<int> weights) {
    FixedComponent comp;
    comp.name = "point";
    comp.dim = 0;
    comp.ring = make_ring({}, 0);
    comp.fundamental[{}] = Rational(1);
    for (int k : weights) comp.normal.push_back({k, CohClass<Rational>(comp.ring)});
    return comp;
}

}  // namespace

TEST_CASE("isolated point contribution is the raw product of weight factors") {
    const RatFuncG value = component_contribution(isolated_point({1, 2}), EvalMode::symbolic());
    const RatFuncG expected =
        RatFuncG(PolyG(1) + g, PolyG(1) - g) * RatFuncG(PolyG(1) + g * g, PolyG(1) - g * g);
    CHECK(value == expected);
}

TEST_CASE("sphere component of the half-dimensional fixed set") {
    const ManifoldData data = catalog_copy("cp2_with_fixed_cp1");
    const RatFuncG value = component_contribution(data.components[0], EvalMode::symbolic());
    CHECK(value == RatFuncG(g * Rational(-4), (PolyG(1) - g) * (PolyG(1) - g)));
    CHECK(value.str() == "(-4*g)/(1 - 2*g + g^2)");
}

TEST_CASE("symbolic totals of the catalog entries collapse to constants") {
    auto total = [](const std::string& name) {
        return equivariant_signature(catalog_copy(name), EvalMode::symbolic());
    };
    CHECK(total("cp1_rotation").total == RatFuncG(0));
    CHECK(total("cp2_linear").total == RatFuncG(1));
    CHECK(total("cp2_with_fixed_cp1").total == RatFuncG(1));
    CHECK(total("s2xs2_diagonal").total == RatFuncG(0));
    CHECK(total("free_action").total == RatFuncG(0));
}

TEST_CASE("assert_rigid returns the constant and rejects non-constant totals") {
    const auto good = equivariant_signature(catalog_copy("cp2_linear"), EvalMode::symbolic());
    CHECK(assert_rigid(good) == Rational(1));

    // A lone fixed point of a rotation on a surface cannot occur alone; the
    // symbolic total stays an honest non-constant function.
    ManifoldData lone;
    lone.name = "lone_point";
    lone.dim = 2;
    lone.components = {isolated_point({1})};
    REQUIRE(validate(lone).empty());
    const auto report = equivariant_signature(lone, EvalMode::symbolic());
    CHECK_FALSE(report.constant);
    CHECK(report.total == RatFuncG(PolyG(1) + g, PolyG(1) - g));
    CHECK_THROWS_AS(assert_rigid(report), NotRigidError);
    try {
        assert_rigid(report);
    } catch (const NotRigidError& e) {
        CHECK(e.function == report.total.str());
    }
}

TEST_CASE("mode coherence on rigid catalog entries") {
    for (const char* name : {"cp1_rotation", "cp2_linear", "cp2_with_fixed_cp1",
                             "s2xs2_diagonal", "free_action"}) {
        const ManifoldData data = catalog_copy(name);
        const auto symbolic = equivariant_signature(data, EvalMode::symbolic());
        REQUIRE(symbolic.constant);
        const auto zero = equivariant_signature(data, EvalMode::at_zero());
        CHECK(zero.total == symbolic.total);

        const auto prime = prime_check(data);
        if (prime.is_prime()) {
            const auto xi = equivariant_signature(data, EvalMode::at_xi(*prime.certificate));
            CHECK(xi.total == symbolic.total);
        }
    }
}

TEST_CASE("the g->0 limit sums the component signatures") {
    for (const auto& entry : catalog_entries()) {
        const auto zero = equivariant_signature(entry.data, EvalMode::at_zero());
        Rational sum(0);
        for (const auto& comp : entry.data.components) sum += component_signature(comp);
        CHECK(zero.total == RatFuncG(sum));
    }
}

TEST_CASE("per-factor substitution matches complex evaluation at xi") {
    for (const char* name : {"cp1_rotation", "cp2_with_fixed_cp1", "s2xs2_diagonal"}) {
        const ManifoldData data = catalog_copy(name);
        const auto prime = prime_check(data);
        REQUIRE(prime.is_prime());
        const auto symbolic = equivariant_signature(data, EvalMode::symbolic());
        const auto xi_report = equivariant_signature(data, EvalMode::at_xi(*prime.certificate));

        const double angle = 2.0 * M_PI * prime.certificate->t.to_double();
        const std::complex<double> xi(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < data.components.size(); ++i) {
            const std::complex<double> numeric = symbolic.contributions[i].second.eval(xi);
            const double exact = xi_report.contributions[i].second.constant_value().to_double();
            CHECK(std::abs(numeric - exact) <= 1e-9 * std::max(1.0, std::abs(exact)));
        }
    }
}

TEST_CASE("float evaluation of the symbolic sum approaches the exact constant") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> sample(0.05, 0.95);
    for (const auto& entry : catalog_entries()) {
        const auto symbolic = equivariant_signature(entry.data, EvalMode::symbolic());
        REQUIRE(symbolic.constant);
        const double want = symbolic.constant_value->to_double();
        for (int i = 0; i < 10; ++i) {
            const double x = sample(rng);
            double got = 0.0;
            for (const auto& [name, value] : symbolic.contributions) got += value.eval(x);
            CHECK(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("orientation flips leave every total unchanged") {
    for (const char* name : {"cp2_linear", "cp2_with_fixed_cp1", "s2xs2_diagonal"}) {
        const ManifoldData data = catalog_copy(name);
        for (std::size_t c = 0; c < data.components.size(); ++c)
            for (std::size_t s = 0; s < data.components[c].normal.size(); ++s) {
                const ManifoldData flipped = orientation_flip(data, c, s);
                CHECK(equivariant_signature(flipped, EvalMode::symbolic()).total ==
                      equivariant_signature(data, EvalMode::symbolic()).total);
                CHECK(equivariant_signature(flipped, EvalMode::at_zero()).total ==
                      equivariant_signature(data, EvalMode::at_zero()).total);
                const auto prime = prime_check(flipped);
                if (prime.is_prime())
                    CHECK(equivariant_signature(flipped, EvalMode::at_xi(*prime.certificate)).total ==
                          equivariant_signature(data, EvalMode::symbolic()).total);
            }
    }
}

TEST_CASE("component additivity of the localization sum") {
    ManifoldData data = catalog_copy("s2xs2_diagonal");
    const auto full = equivariant_signature(data, EvalMode::symbolic());
    const RatFuncG removed = component_contribution(data.components[3], EvalMode::symbolic());
    data.components.pop_back();
    data.expected.reset();
    const auto partial = equivariant_signature(data, EvalMode::symbolic());
    CHECK(full.total == partial.total + removed);
}

TEST_CASE("empty fixed set yields an empty sum") {
    const auto report = equivariant_signature(catalog_copy("free_action"), EvalMode::symbolic());
    CHECK(report.contributions.empty());
    CHECK(report.total.is_zero());
    CHECK(report.constant);
}

TEST_CASE("AtXi mode demands a covering certificate") {
    const ManifoldData data = catalog_copy("cp2_linear");
    PrimeCertificate fake;
    fake.t = Rational(1, 2);
    fake.order = 2;
    fake.verified = true;
    CHECK_THROWS_AS(equivariant_signature(data, EvalMode::at_xi(fake)), ModeError);

    PrimeCertificate unverified;
    unverified.verified = false;
    CHECK_THROWS_AS(EvalMode::at_xi(unverified), ModeError);
}

TEST_CASE("euler factorization on point components") {
    // Two normal lines with vanishing Chern classes: the substituted product
    // is (0/2)^2 = 0, and the degree bound 2(n-m) = 4 > 0 forces vanishing.
    const auto verdict = euler_factorization_check(isolated_point({1, 1}), 4);
    CHECK(verdict.product_vanishes);
    CHECK(verdict.degree_bound_holds);
    CHECK(verdict.factorization_exact);
    CHECK(verdict.required_degree == 4);
}

TEST_CASE("euler factorization on the half-dimensional sphere") {
    const ManifoldData data = catalog_copy("cp2_with_fixed_cp1");
    const auto verdict = euler_factorization_check(data.components[0], 4);
    CHECK_FALSE(verdict.product_vanishes);
    CHECK(verdict.product_min_degree == 2);
    CHECK(verdict.required_degree == 2);
    CHECK(verdict.degree_bound_holds);
    CHECK(verdict.factorization_exact);

    // The substituted product (1-e^{-h})/(1+e^{-h}) opens as h/2 + ... .
    const auto factor = normal_factor_at_xi(data.components[0].normal[0].c1);
    CHECK(factor == CohClass<Rational>::generator(data.components[0].ring, 0) * Rational(1, 2));
}

TEST_CASE("signature vanishing verdicts on the catalog") {
    const auto holds = theorem_1_4_check(catalog_copy("s2xs2_diagonal"));
    CHECK(holds.hypotheses_hold);
    CHECK(holds.vanishing_verified);
    CHECK_FALSE(holds.hard_failure);
    CHECK(holds.signature == Rational(0));
    for (const auto& e : holds.euler) {
        CHECK(e.product_vanishes);
        CHECK(e.degree_bound_holds);
    }

    const auto not_prime = theorem_1_4_check(catalog_copy("cp2_linear"));
    CHECK_FALSE(not_prime.hypotheses_hold);
    CHECK_FALSE(not_prime.prime.is_prime());
    CHECK(not_prime.prime.witness == std::vector<int>{1, 2});
    CHECK(not_prime.signature == Rational(1));

    const auto sharp = theorem_1_4_check(catalog_copy("cp2_with_fixed_cp1"));
    CHECK_FALSE(sharp.hypotheses_hold);
    CHECK(sharp.prime.is_prime());
    CHECK_FALSE(sharp.dim_hypothesis);
    CHECK(sharp.signature == Rational(1));

    const auto empty = theorem_1_4_check(catalog_copy("free_action"));
    CHECK(empty.hypotheses_hold);
    CHECK(empty.vanishing_verified);

    CHECK_THROWS_AS(theorem_1_4_check(catalog_copy("cp1_rotation")), std::invalid_argument);
}
