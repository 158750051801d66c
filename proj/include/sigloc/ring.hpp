#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigloc {

struct GeneratorSpec {
    std::string name;
    int degree;  // positive even
    bool operator==(const GeneratorSpec&) const = default;
};

/// Descriptor of a truncated graded-commutative polynomial ring: an ordered
/// generator list with positive even degrees and an even truncation degree.
/// Monomials of total degree above the truncation are identically dropped.
/// The descriptor is coefficient-agnostic; CohClass<R> instances over any
/// coefficient ring may share one Ring.
class Ring {
public:
    Ring(std::vector<GeneratorSpec> generators, int truncation)
        : generators_(std::move(generators)), truncation_(truncation) {
        if (truncation_ < 0 || truncation_ % 2 != 0)
            throw std::invalid_argument("ring truncation must be even and nonnegative");
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto& gen = generators_[i];
            if (gen.degree <= 0 || gen.degree % 2 != 0)
                throw std::invalid_argument("generator \"" + gen.name +
                                            "\" must have positive even degree");
            for (std::size_t j = i + 1; j < generators_.size(); ++j)
                if (generators_[j].name == gen.name)
                    throw std::invalid_argument("duplicate generator name \"" + gen.name + "\"");
        }
    }

    const std::vector<GeneratorSpec>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }
    int truncation() const { return truncation_; }

    /// Total degree of the monomial with the given exponent vector.
    int monomial_degree(const std::vector<int>& exponents) const {
        int deg = 0;
        for (std::size_t i = 0; i < generators_.size(); ++i) deg += exponents[i] * generators_[i].degree;
        return deg;
    }

    bool operator==(const Ring& o) const {
        return truncation_ == o.truncation_ && generators_ == o.generators_;
    }

private:
    std::vector<GeneratorSpec> generators_;
    int truncation_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<GeneratorSpec> generators, int truncation) {
    return std::make_shared<const Ring>(std::move(generators), truncation);
}

}  // namespace sigloc
