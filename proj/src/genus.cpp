#include "sigloc/genus.hpp"

namespace sigloc {

namespace {

// One-variable truncated series helpers over Rational, index = power of x.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b) {
    Series r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Series series_reciprocal(const Series& a) {
    Series r(a.size(), Rational(0));
    const Rational head = a[0].reciprocal();
    r[0] = head;
    for (std::size_t n = 1; n < a.size(); ++n) {
        Rational acc(0);
        for (std::size_t j = 0; j < n; ++j) acc += a[n - j] * r[j];
        r[n] = -(head * acc);
    }
    return r;
}

}  // namespace

GenusFactorSeries GenusFactorSeries::compute(int truncation) {
    if (truncation < 0) throw std::invalid_argument("truncation must be nonnegative");
    const std::size_t size = static_cast<std::size_t>(truncation) + 1;

    Series one_minus_exp_over_x(size, Rational(0));  // (1 - e^{-x})/x
    Series one_plus_exp(size, Rational(0));          // 1 + e^{-x}
    Rational sign(1);
    for (std::size_t j = 0; j < size; ++j) {
        one_minus_exp_over_x[j] = sign / Rational::factorial(static_cast<unsigned>(j + 1));
        one_plus_exp[j] = sign / Rational::factorial(static_cast<unsigned>(j));
        sign = -sign;
    }
    one_plus_exp[0] += Rational(1);

    GenusFactorSeries out;
    out.truncation = truncation;
    out.coefficients = series_mul(one_plus_exp, series_reciprocal(one_minus_exp_over_x));
    return out;
}

Rational component_signature(const FixedComponent& component) {
    CohClass<Rational> product = CohClass<Rational>::one(component.ring);
    for (const auto& root : component.tangent_roots) product = product * signature_factor(root);

    Rational total = pair_with_functional(product, component.fundamental);
    for (const auto& summand : component.normal)
        if (summand.weight < 0) total = -total;
    return total;
}

}  // namespace sigloc
