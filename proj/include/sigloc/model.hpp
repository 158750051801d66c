#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sigloc/cohclass.hpp"

namespace sigloc {

/// One complex line summand of the normal bundle of a fixed component: the
/// integer weight by which the circle scales the fiber, and the first Chern
/// class of the line expressed in the component's generators.
struct NormalSummand {
    int weight = 0;                // nonzero
    CohClass<Rational> c1;         // homogeneous of degree 2 (possibly zero)
};

/// A connected component of the fixed-point set: dimension 2m, the truncated
/// cohomology ring it computes in, the fundamental-class functional on
/// top-degree monomials, m tangent Chern roots, and the normal line summands.
struct FixedComponent {
    std::string name;
    int dim = 0;  // 2m
    RingPtr ring; // generators as declared, truncation = dim
    std::map<std::vector<int>, Rational> fundamental;
    std::vector<CohClass<Rational>> tangent_roots;
    std::vector<NormalSummand> normal;

    int half_dim() const { return dim / 2; }
};

struct ExpectedPrime {
    std::string status;  // "prime" | "refused" | "vacuous"
    std::optional<Rational> t;
    std::vector<int> witness;
};

struct ExpectedTwisted {
    int q_order = 0;
    std::vector<std::string> coefficients;  // canonical rational-function strings
};

/// Optional golden values carried by catalog entries and user files; each may
/// come with a provenance note naming the identity that justifies it.
struct ExpectedValues {
    std::optional<Rational> signature;
    std::optional<bool> rigid;
    std::optional<ExpectedPrime> prime;
    std::optional<bool> theorem_1_4_applicable;
    std::optional<bool> theorem_1_6_applicable;
    std::optional<ExpectedTwisted> twisted;
    std::map<std::string, std::string> provenance;
};

/// The full fixed-point description of a circle action on a closed oriented
/// manifold. Realizability, orientability, and spin-ness are user-asserted
/// metadata; the engine validates internal consistency only.
struct ManifoldData {
    std::string name;
    int dim = 0;  // 2n
    bool spin = false;
    std::vector<FixedComponent> components;
    std::optional<ExpectedValues> expected;

    int half_dim() const { return dim / 2; }

    /// Dimension of the highest-dimensional fixed component; nullopt when the
    /// fixed set is empty.
    std::optional<int> fixed_set_dim() const {
        std::optional<int> best;
        for (const auto& c : components)
            if (!best || c.dim > *best) best = c.dim;
        return best;
    }
};

struct Violation {
    std::string component;  // empty for manifold-level rules
    std::string field;
    std::string rule;
    std::string str() const;
};

/// Structural validation of every data-model invariant. Violations are data,
/// not exceptions; an empty list means the input is well formed.
std::vector<Violation> validate(const ManifoldData& data);

/// Union over all components of all normal weights, signs retained.
std::vector<int> weight_multiset(const ManifoldData& data);

/// Witness that some xi = exp(2*pi*i*t) satisfies xi^k = -1 for every weight k.
struct PrimeCertificate {
    Rational t;        // in [0, 1)
    long order = 0;    // multiplicative order of xi (always even)
    bool verified = false;
    bool vacuous = false;  // empty weight multiset: vacuously prime
};

struct PrimeDecision {
    std::optional<PrimeCertificate> certificate;
    std::vector<int> witness;  // on refusal: a minimal pair with no common t
    bool is_prime() const { return certificate.has_value(); }
};

/// Exact decision procedure over rational t. Any solution has finite even
/// order, so the candidates from a single weight k are t = (2j+1)/(2|k|);
/// the decision intersects candidate sets across the weight multiset and
/// accepts the smallest surviving t.
PrimeDecision prime_check_weights(const std::vector<int>& weights);
PrimeDecision prime_check(const ManifoldData& data);

/// Replaces (k, c1) of one normal summand by (-k, -c1) and negates the
/// component's fundamental functional; an involution that leaves every
/// localization total unchanged.
ManifoldData orientation_flip(const ManifoldData& data, std::size_t component_index,
                              std::size_t summand_index);

}  // namespace sigloc
