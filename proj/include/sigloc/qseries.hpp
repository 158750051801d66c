#pragma once

#include <stdexcept>
#include <vector>

#include "sigloc/cohclass.hpp"

namespace sigloc {

template <typename R>
CohClass<R> ring_reciprocal(const CohClass<R>& c) {
    return series_inverse(c);
}

/// Truncated power series in the modular variable q with coefficients in an
/// arbitrary ring (CohClass, RatFuncG, or Rational). Represents the series
/// modulo q^{order+1}; all arithmetic truncates consistently at that order.
template <typename R>
class QSeries {
public:
    QSeries(int order, R zero) : coeffs_(checked_size(order), zero) {}

    static QSeries constant(int order, const R& value) {
        QSeries s(order, value);  // fills with copies; overwrite tail with zeros
        for (int i = 1; i <= order; ++i) s.coeffs_[i] = value - value;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const R& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, R value) { coeffs_.at(static_cast<std::size_t>(i)) = std::move(value); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    QSeries operator+(const QSeries& o) const {
        require_same_order(o);
        QSeries r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return r;
    }

    QSeries operator-(const QSeries& o) const {
        require_same_order(o);
        QSeries r = *this;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return r;
    }

    QSeries operator*(const QSeries& o) const {
        require_same_order(o);
        QSeries r = *this;
        for (auto& c : r.coeffs_) c = c - c;  // zero of the coefficient ring
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; i + j < coeffs_.size(); ++j)
                r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
        return r;
    }

    bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    /// Multiplicative inverse mod q^{order+1}; the q^0 coefficient must be a
    /// unit of the coefficient ring (for truncated classes: invertible
    /// constant part).
    QSeries inverse() const {
        QSeries r = *this;
        const R head_inv = ring_reciprocal(coeffs_[0]);
        r.coeffs_[0] = head_inv;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            R acc = coeffs_[n] * r.coeffs_[0];
            for (std::size_t j = 1; j < n; ++j) acc = acc + coeffs_[n - j] * r.coeffs_[j];
            r.coeffs_[n] = -(head_inv * acc);
        }
        return r;
    }

    void require_same_order(const QSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("q-series orders differ");
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw std::invalid_argument("q-series order must be nonnegative");
        return static_cast<std::size_t>(order) + 1;
    }
    std::vector<R> coeffs_;
};

}  // namespace sigloc
