#pragma once

#include <vector>

#include "sigloc/model.hpp"

namespace sigloc {

/// Coefficients of the one-variable even power series
///   x (1 + e^{-x}) / (1 - e^{-x}) = 2 + x^2/6 - x^4/360 + ...
/// computed by plain power-series division in one variable, independently of
/// the truncated-ring machinery (it serves as that machinery's oracle).
struct GenusFactorSeries {
    int truncation = 0;                   // highest retained power of x
    std::vector<Rational> coefficients;   // index = power of x

    static GenusFactorSeries compute(int truncation);
};

/// The multiplicative factor of the signature genus evaluated on one tangent
/// Chern root: x (1 + e^{-x}) / (1 - e^{-x}), truncated in x's ring. The
/// quotient (1 - e^{-x})/x is a unit series with constant term 1 and is
/// inverted exactly, so no division by the nilpotent x ever happens.
/// Requires x homogeneous of degree 2.
template <typename R>
CohClass<R> signature_factor(const CohClass<R>& x);

/// The signature of a fixed component, computed by pairing the product of
/// signature factors over its tangent roots with the fundamental functional.
/// The value is reported for the orientation that makes every normal weight
/// positive: each negative weight carries an orientation swap of one normal
/// line, compensated by a sign here. With that convention the per-component
/// values sum to the signature of the ambient manifold.
Rational component_signature(const FixedComponent& component);

// --- implementation ---

template <typename R>
CohClass<R> signature_factor(const CohClass<R>& x) {
    if (!x.is_homogeneous(2))
        throw std::invalid_argument("signature_factor requires a homogeneous degree-2 root");
    const RingPtr& ring = x.ring();
    const CohClass<R> one = CohClass<R>::one(ring);
    const CohClass<R> expo = exp_class(-x);

    // (1 - e^{-x})/x as an explicit series: sum_j (-x)^j / (j+1)!.
    CohClass<R> unit = one;
    CohClass<R> power = one;
    const int max_steps = ring->truncation() / 2 + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * (-x);
        if (power.is_zero()) break;
        unit = unit + power * R(Rational(1) / Rational::factorial(static_cast<unsigned>(j + 1)));
    }
    return (one + expo) * series_inverse(unit);
}

}  // namespace sigloc
