#include "sigloc/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace sigloc {

RatFuncG::RatFuncG(PolyG num, PolyG den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RatFuncG::canonicalize() {
    if (den_.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyG(1);
        return;
    }
    PolyG common = PolyG::gcd(num_, den_);
    if (!common.is_one()) {
        num_ = num_.divmod(common).first;
        den_ = den_.divmod(common).first;
    }
    const Rational lead = den_.leading_coeff();
    if (!lead.is_one()) {
        const Rational inv = lead.reciprocal();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFuncG RatFuncG::g_power(int k) {
    if (k >= 0) return RatFuncG(PolyG::g_power(k));
    return RatFuncG(PolyG(1), PolyG::g_power(-k));
}

bool RatFuncG::is_constant() const {
    return den_.is_one() && num_.degree().value_or(0) == 0;
}

Rational RatFuncG::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant: " + str());
    return num_.coeff(0);
}

RatFuncG RatFuncG::operator-() const {
    RatFuncG r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFuncG RatFuncG::operator+(const RatFuncG& o) const {
    return RatFuncG(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFuncG RatFuncG::operator-(const RatFuncG& o) const { return *this + (-o); }

RatFuncG RatFuncG::operator*(const RatFuncG& o) const {
    // Cross-reduce before multiplying; keeps the gcd work on small inputs.
    PolyG g1 = PolyG::gcd(num_, o.den_);
    PolyG g2 = PolyG::gcd(o.num_, den_);
    PolyG n1 = g1.is_one() ? num_ : num_.divmod(g1).first;
    PolyG d2 = g1.is_one() ? o.den_ : o.den_.divmod(g1).first;
    PolyG n2 = g2.is_one() ? o.num_ : o.num_.divmod(g2).first;
    PolyG d1 = g2.is_one() ? den_ : den_.divmod(g2).first;
    return RatFuncG(n1 * n2, d1 * d2);
}

RatFuncG RatFuncG::operator/(const RatFuncG& o) const { return *this * o.reciprocal(); }

RatFuncG RatFuncG::reciprocal() const {
    if (is_zero()) throw NonUnitError("reciprocal of the zero rational function");
    return RatFuncG(den_, num_);
}

std::string RatFuncG::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFuncG& f) { return os << f.str(); }

}  // namespace sigloc
