#include "sigloc/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sigloc {

std::string Violation::str() const {
    std::string where = component.empty() ? std::string("manifold") : "component \"" + component + "\"";
    return where + ", " + field + ": " + rule;
}

namespace {

void check_degree2_class(const CohClass<Rational>& c, const std::string& component,
                         const std::string& field, std::vector<Violation>& out) {
    if (!c.is_homogeneous(2))
        out.push_back({component, field, "must be homogeneous of degree 2"});
}

}  // namespace

std::vector<Violation> validate(const ManifoldData& data) {
    std::vector<Violation> out;
    if (data.dim <= 0 || data.dim % 2 != 0)
        out.push_back({"", "dim", "manifold dimension must be positive and even"});

    std::set<std::string> names;
    for (const auto& comp : data.components) {
        if (!names.insert(comp.name).second)
            out.push_back({comp.name, "name", "component names must be unique"});

        if (comp.dim < 0 || comp.dim % 2 != 0) {
            out.push_back({comp.name, "dim", "component dimension must be even and nonnegative"});
            continue;
        }
        if (!comp.ring) {
            out.push_back({comp.name, "generators", "missing ring"});
            continue;
        }
        if (comp.ring->truncation() != comp.dim)
            out.push_back({comp.name, "generators", "ring truncation must equal component dimension"});

        const int m = comp.half_dim();
        if (comp.dim + 2 * static_cast<int>(comp.normal.size()) != data.dim)
            out.push_back({comp.name, "normal",
                           "codimension mismatch: dim + 2*|normal| must equal the manifold dimension"});
        if (static_cast<int>(comp.tangent_roots.size()) != m)
            out.push_back({comp.name, "tangent_roots",
                           "a 2m-dimensional component needs exactly m tangent roots"});

        for (const auto& root : comp.tangent_roots) check_degree2_class(root, comp.name, "tangent_roots", out);

        for (std::size_t j = 0; j < comp.normal.size(); ++j) {
            const auto& summand = comp.normal[j];
            if (summand.weight == 0)
                out.push_back({comp.name, "normal[" + std::to_string(j) + "].weight",
                               "weight must be nonzero"});
            check_degree2_class(summand.c1, comp.name, "normal[" + std::to_string(j) + "].c1", out);
        }

        bool fundamental_ok = true;
        for (const auto& [e, v] : comp.fundamental) {
            if (e.size() != comp.ring->generator_count()) {
                out.push_back({comp.name, "fundamental", "exponent vector length mismatch"});
                fundamental_ok = false;
                continue;
            }
            if (comp.ring->monomial_degree(e) != comp.dim) {
                out.push_back({comp.name, "fundamental",
                               "functional must be supported on total degree exactly 2m"});
                fundamental_ok = false;
            }
            if (v.is_zero())
                out.push_back({comp.name, "fundamental", "stored functional values must be nonzero"});
        }
        if (m == 0 && fundamental_ok) {
            const std::vector<int> zero_exponents(comp.ring->generator_count(), 0);
            const auto it = comp.fundamental.find(zero_exponents);
            const Rational point = it == comp.fundamental.end() ? Rational(0) : it->second;
            if (comp.fundamental.size() != 1 || !(point == Rational(1) || point == Rational(-1)))
                out.push_back({comp.name, "fundamental", "a point component must have <1> = +1 or -1"});
        }
    }
    return out;
}

std::vector<int> weight_multiset(const ManifoldData& data) {
    std::vector<int> weights;
    for (const auto& comp : data.components)
        for (const auto& summand : comp.normal) weights.push_back(summand.weight);
    return weights;
}

namespace {

// Exact test of k*t - 1/2 being an integer.
bool weight_accepts(int k, const Rational& t) {
    return (Rational(k) * t - Rational(1, 2)).is_integer();
}

// Candidate values of t in [0,1) for a single weight, ascending:
// t = (2j+1) / (2|k|), j = 0 .. |k|-1.
std::vector<Rational> candidates_for(int k) {
    std::vector<Rational> out;
    const int a = std::abs(k);
    for (int j = 0; j < a; ++j) out.emplace_back(2 * j + 1, 2 * a);
    return out;
}

}  // namespace

PrimeDecision prime_check_weights(const std::vector<int>& weights) {
    PrimeDecision decision;
    if (weights.empty()) {
        decision.certificate = PrimeCertificate{Rational(1, 2), 2, true, true};
        return decision;
    }

    // Distinct absolute values, ascending; signs never matter for xi^k = -1.
    std::set<int> distinct;
    for (int k : weights) distinct.insert(std::abs(k));
    const std::vector<int> abs_weights(distinct.begin(), distinct.end());

    std::vector<Rational> surviving = candidates_for(abs_weights.front());
    for (std::size_t i = 1; i < abs_weights.size() && !surviving.empty(); ++i) {
        std::vector<Rational> next;
        for (const auto& t : surviving)
            if (weight_accepts(abs_weights[i], t)) next.push_back(t);
        surviving = std::move(next);
    }

    if (!surviving.empty()) {
        const Rational t = surviving.front();  // smallest valid t
        PrimeCertificate cert;
        cert.t = t;
        cert.order = t.den().get_si();  // t is in lowest terms; xi has order den(t)
        cert.vacuous = false;
        cert.verified = true;
        for (int k : weights)
            if (!weight_accepts(k, t)) cert.verified = false;
        decision.certificate = cert;
        return decision;
    }

    // Minimal witness pair: first pair of distinct absolute weights with no
    // common candidate.
    for (std::size_t i = 0; i < abs_weights.size(); ++i) {
        for (std::size_t j = i + 1; j < abs_weights.size(); ++j) {
            bool compatible = false;
            for (const auto& t : candidates_for(abs_weights[i]))
                if (weight_accepts(abs_weights[j], t)) {
                    compatible = true;
                    break;
                }
            if (!compatible) {
                decision.witness = {abs_weights[i], abs_weights[j]};
                return decision;
            }
        }
    }
    decision.witness = weights;  // unreachable for nonempty refusals; kept as a safe fallback
    return decision;
}

PrimeDecision prime_check(const ManifoldData& data) {
    return prime_check_weights(weight_multiset(data));
}

ManifoldData orientation_flip(const ManifoldData& data, std::size_t component_index,
                              std::size_t summand_index) {
    if (component_index >= data.components.size())
        throw std::out_of_range("orientation_flip: component index out of range");
    ManifoldData flipped = data;
    FixedComponent& comp = flipped.components[component_index];
    if (summand_index >= comp.normal.size())
        throw std::out_of_range("orientation_flip: summand index out of range");
    NormalSummand& summand = comp.normal[summand_index];
    summand.weight = -summand.weight;
    summand.c1 = -summand.c1;
    for (auto& [e, v] : comp.fundamental) v = -v;
    return flipped;
}

}  // namespace sigloc
