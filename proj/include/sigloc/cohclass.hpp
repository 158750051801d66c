#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sigloc/errors.hpp"
#include "sigloc/ratfunc.hpp"
#include "sigloc/rational.hpp"
#include "sigloc/ring.hpp"

namespace sigloc {

inline Rational ring_reciprocal(const Rational& x) { return x.reciprocal(); }
inline RatFuncG ring_reciprocal(const RatFuncG& x) { return x.reciprocal(); }

/// Truncated graded-commutative polynomial over a coefficient ring R (Rational
/// or RatFuncG). All generator degrees are even, so no sign rule arises and
/// multiplication is plain commutative convolution with terms above the
/// truncation dropped. Values are immutable in practice: every operation
/// returns a fresh value.
template <typename R>
class CohClass {
public:
    using Terms = std::map<std::vector<int>, R>;

    explicit CohClass(RingPtr ring) : ring_(std::move(ring)) {}

    static CohClass constant(RingPtr ring, R value) {
        CohClass c(std::move(ring));
        if (!value.is_zero()) c.terms_[std::vector<int>(c.ring_->generator_count(), 0)] = std::move(value);
        return c;
    }

    static CohClass one(RingPtr ring) { return constant(std::move(ring), R(1)); }

    static CohClass generator(RingPtr ring, std::size_t index) {
        CohClass c(std::move(ring));
        if (index >= c.ring_->generator_count())
            throw std::out_of_range("generator index out of range");
        if (c.ring_->generators()[index].degree <= c.ring_->truncation()) {
            std::vector<int> e(c.ring_->generator_count(), 0);
            e[index] = 1;
            c.terms_[std::move(e)] = R(1);
        }
        return c;
    }

    static CohClass from_terms(RingPtr ring, Terms terms) {
        CohClass c(std::move(ring));
        for (auto& [e, v] : terms) {
            if (e.size() != c.ring_->generator_count())
                throw RingMismatchError("exponent vector length does not match generator count");
            for (int exponent : e)
                if (exponent < 0) throw RingMismatchError("exponents must be nonnegative");
            if (v.is_zero() || c.ring_->monomial_degree(e) > c.ring_->truncation()) continue;
            c.terms_[e] = std::move(v);
        }
        return c;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    R coeff(const std::vector<int>& exponents) const {
        auto it = terms_.find(exponents);
        return it == terms_.end() ? R(0) : it->second;
    }

    R constant_part() const { return coeff(std::vector<int>(ring_->generator_count(), 0)); }

    /// Largest total degree with a nonzero term; nullopt for the zero class.
    std::optional<int> top_degree() const {
        std::optional<int> best;
        for (const auto& [e, v] : terms_) {
            int d = ring_->monomial_degree(e);
            if (!best || d > *best) best = d;
        }
        return best;
    }

    std::optional<int> min_degree() const {
        std::optional<int> best;
        for (const auto& [e, v] : terms_) {
            int d = ring_->monomial_degree(e);
            if (!best || d < *best) best = d;
        }
        return best;
    }

    /// Zero classes are homogeneous of every degree.
    bool is_homogeneous(int degree) const {
        for (const auto& [e, v] : terms_)
            if (ring_->monomial_degree(e) != degree) return false;
        return true;
    }

    CohClass degree_part(int degree) const {
        CohClass r(ring_);
        for (const auto& [e, v] : terms_)
            if (ring_->monomial_degree(e) == degree) r.terms_[e] = v;
        return r;
    }

    CohClass operator-() const {
        CohClass r(ring_);
        for (const auto& [e, v] : terms_) r.terms_[e] = -v;
        return r;
    }

    CohClass operator+(const CohClass& o) const {
        require_same_ring(o);
        CohClass r = *this;
        for (const auto& [e, v] : o.terms_) {
            auto [it, inserted] = r.terms_.try_emplace(e, v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    CohClass operator-(const CohClass& o) const { return *this + (-o); }

    CohClass operator*(const CohClass& o) const {
        require_same_ring(o);
        const int cutoff = ring_->truncation();
        CohClass r(ring_);
        for (const auto& [ea, va] : terms_) {
            const int da = ring_->monomial_degree(ea);
            for (const auto& [eb, vb] : o.terms_) {
                if (da + ring_->monomial_degree(eb) > cutoff) continue;
                std::vector<int> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                R prod = va * vb;
                auto [it, inserted] = r.terms_.try_emplace(std::move(e), std::move(prod));
                if (!inserted) it->second += va * vb;
            }
        }
        for (auto it = r.terms_.begin(); it != r.terms_.end();)
            it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
        return r;
    }

    CohClass operator*(const R& s) const {
        if (s.is_zero()) return CohClass(ring_);
        CohClass r(ring_);
        for (const auto& [e, v] : terms_) {
            R prod = v * s;
            if (!prod.is_zero()) r.terms_[e] = std::move(prod);
        }
        return r;
    }

    bool operator==(const CohClass& o) const { return *ring_ == *o.ring_ && terms_ == o.terms_; }
    bool operator!=(const CohClass& o) const { return !(*this == o); }

    void require_same_ring(const CohClass& o) const {
        if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
            throw RingMismatchError("operands live in different truncated rings");
    }

private:
    RingPtr ring_;
    Terms terms_;
};

/// Coefficient-wise conversion, e.g. Rational classes into RatFuncG classes.
template <typename S, typename R, typename F>
CohClass<S> map_coefficients(const CohClass<R>& c, F&& convert) {
    typename CohClass<S>::Terms terms;
    for (const auto& [e, v] : c.terms()) terms[e] = convert(v);
    return CohClass<S>::from_terms(c.ring(), std::move(terms));
}

inline CohClass<RatFuncG> to_ratfunc_coefficients(const CohClass<Rational>& c) {
    return map_coefficients<RatFuncG>(c, [](const Rational& v) { return RatFuncG(v); });
}

/// Multiplicative inverse in the truncated ring, computed as a finite
/// geometric series: the positive-degree part is nilpotent under truncation.
/// Requires an invertible degree-0 part; throws NonUnitError otherwise.
template <typename R>
CohClass<R> series_inverse(const CohClass<R>& c) {
    const R head = c.constant_part();
    if (head.is_zero()) throw NonUnitError("series inverse of a class with zero constant part");
    const R head_inv = ring_reciprocal(head);
    const CohClass<R> nilpotent = c - CohClass<R>::constant(c.ring(), head);

    CohClass<R> result = CohClass<R>::constant(c.ring(), head_inv);
    CohClass<R> power = CohClass<R>::one(c.ring());
    R scale = head_inv;
    const int max_steps = c.ring()->truncation() / 2 + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * nilpotent;
        if (power.is_zero()) break;
        scale = scale * head_inv;
        const R signed_scale = (j % 2 == 0) ? scale : -scale;
        result = result + power * signed_scale;
    }
    return result;
}

/// exp of a class with zero constant part (nilpotent), as a finite Taylor sum.
template <typename R>
CohClass<R> exp_class(const CohClass<R>& c) {
    if (!c.constant_part().is_zero())
        throw NonUnitError("exp_class requires a zero constant part");
    CohClass<R> result = CohClass<R>::one(c.ring());
    CohClass<R> power = CohClass<R>::one(c.ring());
    const int max_steps = c.ring()->truncation() / 2 + 1;
    for (int j = 1; j <= max_steps; ++j) {
        power = power * c;
        if (power.is_zero()) break;
        result = result + power * R(Rational(1) / Rational::factorial(static_cast<unsigned>(j)));
    }
    return result;
}

/// Pairing with a fundamental-class functional: sum of functional(e) * coeff(e)
/// over the monomials the functional supports. The functional is a finite map
/// from exponent vectors (of top degree, by the data model's invariants) to
/// rational intersection numbers.
template <typename R>
R pair_with_functional(const CohClass<R>& c, const std::map<std::vector<int>, Rational>& functional) {
    R total(0);
    for (const auto& [e, v] : functional) {
        const R coeff = c.coeff(e);
        if (!coeff.is_zero()) total += coeff * R(v);
    }
    return total;
}

}  // namespace sigloc
