#include "sigloc/twisted.hpp"

namespace sigloc {

namespace {

// 1 + sign * q^r * c as a truncated q-series.
template <typename R>
QSeries<CohClass<R>> one_plus_q_power(const CohClass<R>& c, int r, int sign, int q_order) {
    QSeries<CohClass<R>> s(q_order, CohClass<R>(c.ring()));
    s.set_coeff(0, CohClass<R>::one(c.ring()));
    if (r <= q_order) s.set_coeff(r, sign > 0 ? c : -c);
    return s;
}

template <typename R>
QSeries<CohClass<R>> scale_series(const QSeries<CohClass<R>>& s, const CohClass<R>& factor) {
    QSeries<CohClass<R>> r = s;
    for (int i = 0; i <= s.order(); ++i) r.set_coeff(i, s.coeff(i) * factor);
    return r;
}

// prod_{r=1..Q} (1 + s1 q^r a)(1 + s1 q^r b) / ((1 - q^r a)(1 - q^r b)) with
// the numerator sign s1 = +1 for u/v factors and the reciprocal arrangement
// for the AtXi v-factor handled by the caller via sign arguments.
template <typename R>
QSeries<CohClass<R>> paired_factor(const CohClass<R>& a, const CohClass<R>& b, int num_sign,
                                   int q_order) {
    QSeries<CohClass<R>> result(q_order, CohClass<R>(a.ring()));
    result.set_coeff(0, CohClass<R>::one(a.ring()));
    for (int r = 1; r <= q_order; ++r) {
        result = result * one_plus_q_power(a, r, num_sign, q_order);
        result = result * one_plus_q_power(b, r, num_sign, q_order);
        result = result * one_plus_q_power(a, r, -num_sign, q_order).inverse();
        result = result * one_plus_q_power(b, r, -num_sign, q_order).inverse();
    }
    return result;
}

}  // namespace

template <typename R>
QSeries<CohClass<R>> u_factor(const CohClass<R>& x, int q_order) {
    if (!x.is_homogeneous(2))
        throw std::invalid_argument("u_factor requires a homogeneous degree-2 root");
    return paired_factor(exp_class(-x), exp_class(x), +1, q_order);
}

template QSeries<CohClass<Rational>> u_factor(const CohClass<Rational>&, int);
template QSeries<CohClass<RatFuncG>> u_factor(const CohClass<RatFuncG>&, int);

QSeries<CohClass<RatFuncG>> v_factor_symbolic(int weight, const CohClass<Rational>& c1,
                                              int q_order) {
    const CohClass<RatFuncG> c = to_ratfunc_coefficients(c1);
    const CohClass<RatFuncG> a = exp_class(-c) * RatFuncG::g_power(weight);
    const CohClass<RatFuncG> b = exp_class(c) * RatFuncG::g_power(-weight);
    return paired_factor(a, b, +1, q_order);
}

QSeries<CohClass<Rational>> v_factor_at_xi(const CohClass<Rational>& c1, int q_order) {
    // Substituting g^{k} -> -1 and g^{-k} -> -1 flips every numerator and
    // denominator sign of the symbolic factor.
    return paired_factor(exp_class(-c1), exp_class(c1), -1, q_order);
}

namespace {

// Shared assembly: per-component product of (signature factor * u) over roots
// and (main factor * v) over normal summands, paired coefficient-wise.
template <typename R, typename RootFactor, typename NormalFactor, typename NormalQFactor>
std::vector<R> assemble_series(const ManifoldData& data, int q_order, RootFactor root_factor,
                               NormalFactor normal_factor, NormalQFactor normal_q_factor) {
    std::vector<R> totals(static_cast<std::size_t>(q_order) + 1, R(0));
    for (const auto& comp : data.components) {
        using Class = CohClass<R>;
        QSeries<Class> series(q_order, Class(comp.ring));
        series.set_coeff(0, Class::one(comp.ring));
        for (const auto& root : comp.tangent_roots) {
            auto factor = root_factor(root);          // signature factor, a Class
            auto u = u_factor(factor.second, q_order);  // on the converted root
            series = series * scale_series(u, factor.first);
        }
        for (const auto& summand : comp.normal) {
            series = scale_series(series, normal_factor(summand));
            series = series * normal_q_factor(summand);
        }
        for (int i = 0; i <= q_order; ++i)
            totals[static_cast<std::size_t>(i)] += pair_with_functional(series.coeff(i), comp.fundamental);
    }
    return totals;
}

}  // namespace

TwistedSeriesReport twisted_signature_series(const ManifoldData& data, int q_order,
                                             const EvalMode& mode) {
    TwistedSeriesReport report;
    report.q_order = q_order;
    report.mode = mode.kind;

    std::vector<RatFuncG> totals;
    switch (mode.kind) {
        case EvalMode::Kind::Symbolic:
            totals = assemble_series<RatFuncG>(
                data, q_order,
                [](const CohClass<Rational>& root) {
                    auto converted = to_ratfunc_coefficients(root);
                    return std::make_pair(signature_factor(converted), converted);
                },
                [](const NormalSummand& s) { return normal_factor_symbolic(s.weight, s.c1); },
                [&](const NormalSummand& s) { return v_factor_symbolic(s.weight, s.c1, q_order); });
            break;
        case EvalMode::Kind::AtXi: {
            if (!mode.certificate || !mode.certificate->verified)
                throw ModeError("AtXi evaluation requires a verified prime certificate");
            if (!certificate_covers(*mode.certificate, data))
                throw ModeError("prime certificate does not cover this manifold's weights");
            std::vector<Rational> values = assemble_series<Rational>(
                data, q_order,
                [](const CohClass<Rational>& root) {
                    return std::make_pair(signature_factor(root), root);
                },
                [](const NormalSummand& s) { return normal_factor_at_xi(s.c1); },
                [&](const NormalSummand& s) { return v_factor_at_xi(s.c1, q_order); });
            totals.assign(values.begin(), values.end());
            break;
        }
        case EvalMode::Kind::AtZero:
            throw ModeError("mode unsupported: the twisted series has no g -> 0 specialization");
    }

    for (auto& value : totals) {
        report.constant.push_back(value.is_constant());
        report.constant_value.push_back(
            value.is_constant() ? std::optional<Rational>(value.constant_value()) : std::nullopt);
        report.coefficients.push_back(std::move(value));
    }
    return report;
}

template <typename R>
QSeries<CohClass<R>> r_series_from_lines(const std::vector<ChLine<R>>& lines, int q_order,
                                         const RingPtr& ring) {
    using Class = CohClass<R>;
    QSeries<Class> result(q_order, Class(ring));
    result.set_coeff(0, Class::one(ring));
    for (const auto& line : lines) {
        const Class ch = exp_class(line.exponent) * line.twist;
        for (int r = 1; r <= q_order; ++r) {
            // Lambda_{q^r}(L): 1 + q^r ch(L).
            QSeries<Class> lambda(q_order, Class(ring));
            lambda.set_coeff(0, Class::one(ring));
            lambda.set_coeff(r, ch);
            // S_{q^r}(L): explicit geometric sum of q^{rj} ch(L)^j.
            QSeries<Class> sym(q_order, Class(ring));
            Class power = Class::one(ring);
            for (int j = 0; r * j <= q_order; ++j) {
                sym.set_coeff(r * j, power);
                power = power * ch;
            }
            result = result * lambda * sym;
        }
    }
    return result;
}

template QSeries<CohClass<Rational>> r_series_from_lines(const std::vector<ChLine<Rational>>&,
                                                         int, const RingPtr&);
template QSeries<CohClass<RatFuncG>> r_series_from_lines(const std::vector<ChLine<RatFuncG>>&,
                                                         int, const RingPtr&);

template <typename R>
QSeries<CohClass<R>> r_bundle_oracle(const std::vector<CohClass<R>>& roots, int q_order,
                                     const RingPtr& ring) {
    std::vector<ChLine<R>> lines;
    for (const auto& root : roots) {
        lines.push_back({root, R(1)});
        lines.push_back({-root, R(1)});
    }
    return r_series_from_lines(lines, q_order, ring);
}

template QSeries<CohClass<Rational>> r_bundle_oracle(const std::vector<CohClass<Rational>>&, int,
                                                     const RingPtr&);
template QSeries<CohClass<RatFuncG>> r_bundle_oracle(const std::vector<CohClass<RatFuncG>>&, int,
                                                     const RingPtr&);

TwistedVanishingVerdict theorem_1_6_check(const ManifoldData& data, int q_order) {
    TwistedVanishingVerdict verdict;
    verdict.spin = data.spin;
    verdict.prime = prime_check(data);
    verdict.fixed_set_dim = data.fixed_set_dim();
    verdict.dim_hypothesis = !verdict.fixed_set_dim || *verdict.fixed_set_dim < data.half_dim();
    verdict.hypotheses_hold = verdict.spin && verdict.prime.is_prime() && verdict.dim_hypothesis;

    verdict.symbolic = twisted_signature_series(data, q_order, EvalMode::symbolic());
    if (verdict.prime.is_prime())
        verdict.at_xi = twisted_signature_series(
            data, q_order, EvalMode::at_xi(*verdict.prime.certificate));

    if (verdict.hypotheses_hold) {
        bool all_zero = true;
        for (int i = 0; i <= q_order; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            all_zero = all_zero && verdict.symbolic.coefficients[idx].is_zero();
            if (verdict.at_xi) all_zero = all_zero && verdict.at_xi->coefficients[idx].is_zero();
        }
        verdict.vanishing_verified = all_zero;
        verdict.hard_failure = !all_zero;
    }
    return verdict;
}

}  // namespace sigloc
