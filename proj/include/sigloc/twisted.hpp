#pragma once

#include "sigloc/localization.hpp"
#include "sigloc/qseries.hpp"

namespace sigloc {

/// The tangent-root q-factor
///   prod_{r>=1} (1+q^r e^{-x})(1+q^r e^{x}) / ((1-q^r e^{-x})(1-q^r e^{x}))
/// truncated to factors r <= Q; factors with r > Q are 1 mod q^{Q+1}, so the
/// truncation is exact. Symmetric in x <-> -x.
template <typename R>
QSeries<CohClass<R>> u_factor(const CohClass<R>& x, int q_order);

/// The normal-summand q-factor
///   prod_{r>=1} (1+q^r g^{k} e^{-c})(1+q^r g^{-k} e^{c}) /
///               ((1-q^r g^{k} e^{-c})(1-q^r g^{-k} e^{c}))
/// with g formal. c1 is the summand's Chern class over the rational ring.
QSeries<CohClass<RatFuncG>> v_factor_symbolic(int weight, const CohClass<Rational>& c1,
                                              int q_order);

/// The same factor after the per-factor substitution g^{k} -> -1, g^{-k} -> -1:
///   prod_{r>=1} (1-q^r e^{-c})(1-q^r e^{c}) / ((1+q^r e^{-c})(1+q^r e^{c})).
QSeries<CohClass<Rational>> v_factor_at_xi(const CohClass<Rational>& c1, int q_order);

struct TwistedSeriesReport {
    int q_order = 0;
    EvalMode::Kind mode = EvalMode::Kind::Symbolic;
    std::vector<RatFuncG> coefficients;                   // q^0 .. q^Q
    std::vector<bool> constant;                           // per-coefficient constancy
    std::vector<std::optional<Rational>> constant_value;  // sign(M, R_i) when constant
};

/// The generating series sum_i q^i sign(g, M, R_i) localized to the fixed set:
/// per component the product of (signature factor * u-factor) over tangent
/// roots and (normal factor * v-factor) over normal summands, paired with the
/// fundamental class and summed. Modes: Symbolic or AtXi. AtZero is rejected
/// (negative weights put g^{-k} in numerators, so the factor form has no
/// g -> 0 specialization).
TwistedSeriesReport twisted_signature_series(const ManifoldData& data, int q_order,
                                             const EvalMode& mode);

/// One complex line entry of a bundle's equivariant Chern character:
/// ch(L) = twist * e^{exponent}, where twist carries the g^{weight} marker
/// (or 1 for a non-equivariant line).
template <typename R>
struct ChLine {
    CohClass<R> exponent;
    R twist;
};

/// Chern character of the bundle series  tensor_{i>=1} Lambda_{q^i} T_C
/// tensor  tensor_{j>=1} S_{q^j} T_C, computed line by line from
/// ch Lambda_t(L) = 1 + t ch(L) and ch S_t(L) = sum_j t^j ch(L)^j.
/// The geometric sums are expanded explicitly, so this route is independent
/// of u_factor/v_factor and serves as their oracle.
template <typename R>
QSeries<CohClass<R>> r_series_from_lines(const std::vector<ChLine<R>>& lines, int q_order,
                                         const RingPtr& ring);

/// The same series for the complexification of a real bundle with the given
/// Chern roots: lines {x, -x} for each root, untwisted. Reproduces
/// R_0 = 1, R_1 = 2 T_C, R_2 = 2(T_C tensor T_C + T_C) at the ch level.
template <typename R>
QSeries<CohClass<R>> r_bundle_oracle(const std::vector<CohClass<R>>& roots, int q_order,
                                     const RingPtr& ring);

/// Vanishing check for the twisted series: when the manifold is spin, the
/// action prime, and the fixed set smaller than half-dimensional, every
/// q-coefficient up to Q must vanish, via Symbolic constancy and AtXi.
struct TwistedVanishingVerdict {
    bool spin = false;
    PrimeDecision prime;
    std::optional<int> fixed_set_dim;
    bool dim_hypothesis = false;
    bool hypotheses_hold = false;
    TwistedSeriesReport symbolic;
    std::optional<TwistedSeriesReport> at_xi;  // present when prime
    bool vanishing_verified = false;
    bool hard_failure = false;  // hypotheses held but some coefficient was nonzero
};

TwistedVanishingVerdict theorem_1_6_check(const ManifoldData& data, int q_order);

}  // namespace sigloc
