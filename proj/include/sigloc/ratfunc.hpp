#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "sigloc/polyg.hpp"

namespace sigloc {

/// Reduced ratio of two polynomials in g; the coefficient field for symbolic
/// equivariant computations. Canonical form: gcd(num, den) = 1 and den monic,
/// so operator== and is_constant() are structural.
class RatFuncG {
public:
    RatFuncG() : num_(), den_(1) {}
    RatFuncG(long long constant) : num_(constant), den_(1) {}
    RatFuncG(Rational constant) : num_(std::move(constant)), den_(1) {}
    explicit RatFuncG(PolyG num) : num_(std::move(num)), den_(1) {}
    RatFuncG(PolyG num, PolyG den);

    /// g^k for any integer k; negative k yields 1/g^{|k|}.
    static RatFuncG g_power(int k);

    const PolyG& num() const { return num_; }
    const PolyG& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// Constant iff numerator and denominator both have degree <= 0.
    bool is_constant() const;
    /// The value of a constant; throws std::logic_error otherwise.
    Rational constant_value() const;

    RatFuncG operator-() const;
    RatFuncG operator+(const RatFuncG& o) const;
    RatFuncG operator-(const RatFuncG& o) const;
    RatFuncG operator*(const RatFuncG& o) const;
    RatFuncG operator/(const RatFuncG& o) const;
    RatFuncG& operator+=(const RatFuncG& o) { return *this = *this + o; }
    RatFuncG& operator-=(const RatFuncG& o) { return *this = *this - o; }
    RatFuncG& operator*=(const RatFuncG& o) { return *this = *this * o; }
    RatFuncG& operator/=(const RatFuncG& o) { return *this = *this / o; }
    bool operator==(const RatFuncG& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncG& o) const { return !(*this == o); }

    RatFuncG reciprocal() const;

    double eval(double g) const { return num_.eval(g) / den_.eval(g); }
    std::complex<double> eval(std::complex<double> g) const { return num_.eval(g) / den_.eval(g); }

    /// "(num)/(den)" with both polynomials in ascending powers of g, or just
    /// "num" when the denominator is 1.
    std::string str() const;

private:
    void canonicalize();
    PolyG num_;
    PolyG den_;
};

std::ostream& operator<<(std::ostream& os, const RatFuncG& f);

}  // namespace sigloc
