#include "sigloc/localization.hpp"

#include <stdexcept>

namespace sigloc {

EvalMode EvalMode::at_xi(PrimeCertificate cert) {
    if (!cert.verified)
        throw ModeError("AtXi evaluation requires a verified prime certificate");
    EvalMode mode;
    mode.kind = Kind::AtXi;
    mode.certificate = std::move(cert);
    return mode;
}

const char* EvalMode::name() const {
    switch (kind) {
        case Kind::Symbolic: return "symbolic";
        case Kind::AtZero: return "zero";
        case Kind::AtXi: return "xi";
    }
    return "?";
}

bool certificate_covers(const PrimeCertificate& cert, const ManifoldData& data) {
    for (int k : weight_multiset(data))
        if (!(Rational(k) * cert.t - Rational(1, 2)).is_integer()) return false;
    return true;
}

CohClass<RatFuncG> normal_factor_symbolic(int weight, const CohClass<Rational>& c1) {
    const CohClass<RatFuncG> expo = exp_class(-to_ratfunc_coefficients(c1));
    const CohClass<RatFuncG> one = CohClass<RatFuncG>::one(expo.ring());
    const CohClass<RatFuncG> twisted = expo * RatFuncG::g_power(weight);
    return (one + twisted) * series_inverse(one - twisted);
}

CohClass<Rational> normal_factor_at_xi(const CohClass<Rational>& c1) {
    const CohClass<Rational> expo = exp_class(-c1);
    const CohClass<Rational> one = CohClass<Rational>::one(c1.ring());
    return (one - expo) * series_inverse(one + expo);
}

namespace {

// (1 - e^{-c})/c as an explicit unit series: sum_j (-c)^j / (j+1)!.
template <typename R>
CohClass<R> one_minus_exp_over(const CohClass<R>& c) {
    const CohClass<R> one = CohClass<R>::one(c.ring());
    CohClass<R> unit = one;
    CohClass<R> power = one;
    const int max_steps = c.ring()->truncation() / 2 + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * (-c);
        if (power.is_zero()) break;
        unit = unit + power * R(Rational(1) / Rational::factorial(static_cast<unsigned>(j + 1)));
    }
    return unit;
}

Rational contribution_at_zero(const FixedComponent& comp) {
    return component_signature(comp);
}

Rational contribution_at_xi(const FixedComponent& comp) {
    CohClass<Rational> product = CohClass<Rational>::one(comp.ring);
    for (const auto& root : comp.tangent_roots) product = product * signature_factor(root);
    for (const auto& summand : comp.normal) product = product * normal_factor_at_xi(summand.c1);
    return pair_with_functional(product, comp.fundamental);
}

RatFuncG contribution_symbolic(const FixedComponent& comp) {
    CohClass<RatFuncG> product =
        CohClass<RatFuncG>::one(comp.ring);
    for (const auto& root : comp.tangent_roots)
        product = product * signature_factor(to_ratfunc_coefficients(root));
    for (const auto& summand : comp.normal)
        product = product * normal_factor_symbolic(summand.weight, summand.c1);
    return pair_with_functional(product, comp.fundamental);
}

}  // namespace

RatFuncG component_contribution(const FixedComponent& component, const EvalMode& mode) {
    switch (mode.kind) {
        case EvalMode::Kind::Symbolic: return contribution_symbolic(component);
        case EvalMode::Kind::AtZero: return RatFuncG(contribution_at_zero(component));
        case EvalMode::Kind::AtXi: return RatFuncG(contribution_at_xi(component));
    }
    throw std::logic_error("unknown evaluation mode");
}

LocalizationReport equivariant_signature(const ManifoldData& data, const EvalMode& mode) {
    if (mode.kind == EvalMode::Kind::AtXi) {
        if (!mode.certificate || !mode.certificate->verified)
            throw ModeError("AtXi evaluation requires a verified prime certificate");
        if (!certificate_covers(*mode.certificate, data))
            throw ModeError("prime certificate does not cover this manifold's weights");
    }
    LocalizationReport report;
    report.mode = mode.kind;
    for (const auto& comp : data.components) {
        RatFuncG value = component_contribution(comp, mode);
        report.total += value;
        report.contributions.emplace_back(comp.name, std::move(value));
    }
    report.constant = report.total.is_constant();
    if (report.constant) report.constant_value = report.total.constant_value();
    return report;
}

Rational assert_rigid(const LocalizationReport& report) {
    if (!report.constant)
        throw NotRigidError("equivariant signature is not constant in g: data is not realizable "
                            "or inconsistent",
                            report.total.str());
    return *report.constant_value;
}

EulerFactorizationVerdict euler_factorization_check(const FixedComponent& component,
                                                    int ambient_dim) {
    EulerFactorizationVerdict verdict;
    verdict.component = component.name;
    const int n = ambient_dim / 2;
    const int m = component.half_dim();
    verdict.required_degree = 2 * (n - m);

    const CohClass<Rational> one = CohClass<Rational>::one(component.ring);
    CohClass<Rational> product = one;
    CohClass<Rational> euler = one;
    CohClass<Rational> unit = one;
    for (const auto& summand : component.normal) {
        product = product * normal_factor_at_xi(summand.c1);
        euler = euler * summand.c1;
        // (1 - e^{-c})/c divided by (1 + e^{-c}), a unit series with constant
        // term 1/2; the factor's Euler-class cofactor.
        unit = unit * (one_minus_exp_over(summand.c1) *
                       series_inverse(one + exp_class(-summand.c1)));
    }

    verdict.product_vanishes = product.is_zero();
    verdict.product_min_degree = product.min_degree();
    verdict.degree_bound_holds =
        verdict.product_vanishes || *verdict.product_min_degree >= verdict.required_degree;
    verdict.factorization_exact = (product == euler * unit);
    return verdict;
}

SignatureVanishingVerdict theorem_1_4_check(const ManifoldData& data) {
    if (data.dim % 4 != 0)
        throw std::invalid_argument("signature vanishing check requires dimension divisible by 4");

    SignatureVanishingVerdict verdict;
    verdict.prime = prime_check(data);
    verdict.fixed_set_dim = data.fixed_set_dim();
    verdict.dim_hypothesis = !verdict.fixed_set_dim || *verdict.fixed_set_dim < data.half_dim();
    verdict.hypotheses_hold = verdict.prime.is_prime() && verdict.dim_hypothesis;

    verdict.symbolic = equivariant_signature(data, EvalMode::symbolic());
    verdict.rigid = verdict.symbolic.constant;
    if (verdict.rigid) verdict.signature = verdict.symbolic.constant_value;

    if (verdict.prime.is_prime()) {
        verdict.at_xi = equivariant_signature(data, EvalMode::at_xi(*verdict.prime.certificate));
        for (const auto& comp : data.components)
            verdict.euler.push_back(euler_factorization_check(comp, data.dim));
    }

    if (verdict.hypotheses_hold) {
        bool symbolic_zero = verdict.rigid && verdict.signature->is_zero();
        bool xi_zero = verdict.at_xi.has_value();
        if (xi_zero)
            for (const auto& [name, value] : verdict.at_xi->contributions)
                xi_zero = xi_zero && value.is_zero();
        verdict.vanishing_verified = symbolic_zero && xi_zero;
        verdict.hard_failure = !verdict.vanishing_verified;
    }
    return verdict;
}

}  // namespace sigloc
