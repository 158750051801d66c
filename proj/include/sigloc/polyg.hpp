#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "sigloc/rational.hpp"

namespace sigloc {

/// Polynomial in the formal circle variable g with exact rational coefficients.
/// Stored as a finite exponent -> coefficient map with no zero entries; the
/// zero polynomial has an empty map and degree() == nullopt (minus infinity).
class PolyG {
public:
    PolyG() = default;
    explicit PolyG(Rational constant);
    PolyG(long long constant) : PolyG(Rational(constant)) {}

    /// g^k for k >= 0. Negative powers live in RatFuncG, not here.
    static PolyG g_power(int k);
    static PolyG from_terms(std::map<int, Rational> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::optional<int> degree() const;
    Rational coeff(int exponent) const;
    Rational leading_coeff() const;
    const std::map<int, Rational>& terms() const { return terms_; }

    PolyG operator-() const;
    PolyG operator+(const PolyG& o) const;
    PolyG operator-(const PolyG& o) const;
    PolyG operator*(const PolyG& o) const;
    PolyG operator*(const Rational& s) const;
    bool operator==(const PolyG& o) const { return terms_ == o.terms_; }
    bool operator!=(const PolyG& o) const { return !(*this == o); }

    /// Euclidean division over the rationals: *this = q * divisor + r with
    /// deg r < deg divisor. Throws ZeroDenominatorError on a zero divisor.
    std::pair<PolyG, PolyG> divmod(const PolyG& divisor) const;

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    static PolyG gcd(PolyG a, PolyG b);

    PolyG monic() const;

    Rational eval(const Rational& g) const;
    double eval(double g) const;
    std::complex<double> eval(std::complex<double> g) const;

    /// Ascending powers of g, e.g. "1 - 2*g + g^2"; "0" for the zero polynomial.
    std::string str() const;

private:
    void prune();
    std::map<int, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyG& p);

}  // namespace sigloc
