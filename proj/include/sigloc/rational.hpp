#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "sigloc/errors.hpp"

namespace sigloc {

/// Exact rational scalar; the coefficient ground field for every ring in this
/// library. Always held in lowest terms with a positive denominator, so
/// operator== is structural equality of the canonical form.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(static_cast<long>(n)) {}
    Rational(long long num, long long den);
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    /// Parses "p/q" or "p" (decimal, optional leading '-'). Throws
    /// std::invalid_argument on malformed text, ZeroDenominatorError on q = 0.
    static Rational parse(const std::string& text);

    static Rational factorial(unsigned n);

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(value_ + o.value_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(value_ - o.value_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(value_ * o.value_)); }
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return value_ == o.value_; }
    bool operator!=(const Rational& o) const { return value_ != o.value_; }
    bool operator<(const Rational& o) const { return value_ < o.value_; }
    bool operator<=(const Rational& o) const { return value_ <= o.value_; }
    bool operator>(const Rational& o) const { return value_ > o.value_; }
    bool operator>=(const Rational& o) const { return value_ >= o.value_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    Rational abs() const { return Rational(mpq_class(::abs(value_))); }

    /// Multiplicative inverse; throws NonUnitError on zero.
    Rational reciprocal() const;

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    double to_double() const { return value_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sigloc
