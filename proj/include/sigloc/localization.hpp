#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigloc/genus.hpp"
#include "sigloc/model.hpp"

namespace sigloc {

/// How the formal circle variable is treated when a localization formula is
/// evaluated:
///   Symbolic — g stays an indeterminate; contributions live in Q(g).
///   AtZero   — each normal factor is replaced by its g -> 0 limit, which is
///              +1 for a positive weight and -1 for a negative one.
///   AtXi     — every g^{k_j} (and g^{-k_j}) is replaced by -1 before series
///              expansion; justified by a verified PrimeCertificate.
struct EvalMode {
    enum class Kind { Symbolic, AtZero, AtXi };
    Kind kind = Kind::Symbolic;
    std::optional<PrimeCertificate> certificate;

    static EvalMode symbolic() { return {Kind::Symbolic, std::nullopt}; }
    static EvalMode at_zero() { return {Kind::AtZero, std::nullopt}; }
    static EvalMode at_xi(PrimeCertificate cert);
    const char* name() const;
};

/// Checks that the certificate's t satisfies k*t - 1/2 in Z for every weight
/// of the data (vacuously for an empty fixed set).
bool certificate_covers(const PrimeCertificate& cert, const ManifoldData& data);

struct LocalizationReport {
    EvalMode::Kind mode = EvalMode::Kind::Symbolic;
    std::vector<std::pair<std::string, RatFuncG>> contributions;  // per component
    RatFuncG total;
    bool constant = false;                  // total has degree-0 num and den
    std::optional<Rational> constant_value; // set when constant
};

/// The localization factor of one normal line: (1 + g^k e^{-c}) / (1 - g^k e^{-c})
/// over Q(g), expanded in the summand's truncated ring.
CohClass<RatFuncG> normal_factor_symbolic(int weight, const CohClass<Rational>& c1);

/// The same factor after the per-factor substitution g^{k} -> -1:
/// (1 - e^{-c}) / (1 + e^{-c}), whose denominator is the unit 2 - c + ... .
CohClass<Rational> normal_factor_at_xi(const CohClass<Rational>& c1);

/// One component's term of the fixed-point sum:
///   < prod_i x_i(1+e^{-x_i})/(1-e^{-x_i}) * prod_j (1+g^{k_j}e^{-c_j})/(1-g^{k_j}e^{-c_j}), [F] >
/// computed verbatim in the truncated ring, with the mode's substitution
/// applied per factor before expansion. In AtZero and AtXi modes the result
/// is a constant, returned embedded in Q(g).
RatFuncG component_contribution(const FixedComponent& component, const EvalMode& mode);

/// Sums component contributions and, in Symbolic mode, runs the constancy
/// test on the canonical total.
LocalizationReport equivariant_signature(const ManifoldData& data, const EvalMode& mode);

/// Returns the constant value of a Symbolic-mode report; throws NotRigidError
/// (carrying the offending canonical function) when the total is not constant,
/// which signals non-realizable or inconsistent fixed-point data rather than
/// an engine fault.
Rational assert_rigid(const LocalizationReport& report);

/// Result of checking that the per-factor g^{k} -> -1 substitution of the
/// normal product factors through the Euler class of the normal bundle:
/// the product equals prod_j c_1(L_j) times an explicit unit-series, and
/// every surviving monomial has degree >= 2(n-m).
struct EulerFactorizationVerdict {
    std::string component;
    int required_degree = 0;                 // 2(n - m)
    std::optional<int> product_min_degree;   // nullopt when the product is 0
    bool product_vanishes = false;
    bool degree_bound_holds = false;
    bool factorization_exact = false;
};

EulerFactorizationVerdict euler_factorization_check(const FixedComponent& component,
                                                    int ambient_dim);

/// Vanishing check for 4k-dimensional data: when the action is prime and the
/// fixed set has dimension below half the manifold's, the signature must be 0
/// by both evaluation routes. When a hypothesis fails the verdict says which
/// one and still carries the computed signature.
struct SignatureVanishingVerdict {
    PrimeDecision prime;
    std::optional<int> fixed_set_dim;
    bool dim_hypothesis = false;
    bool hypotheses_hold = false;
    LocalizationReport symbolic;
    bool rigid = false;
    std::optional<Rational> signature;
    std::optional<LocalizationReport> at_xi;         // present when prime
    std::vector<EulerFactorizationVerdict> euler;    // present when prime
    bool vanishing_verified = false;                 // both routes gave exactly 0
    bool hard_failure = false;                       // hypotheses held but a route was nonzero
};

SignatureVanishingVerdict theorem_1_4_check(const ManifoldData& data);

}  // namespace sigloc
