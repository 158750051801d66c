#include "sigloc/rational.hpp"

#include <cctype>
#include <ostream>

namespace sigloc {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw ZeroDenominatorError("rational with zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw ZeroDenominatorError("division of rational by zero");
    return Rational(mpq_class(value_ / o.value_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw NonUnitError("reciprocal of zero");
    return Rational(1) / *this;
}

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    if (slash == std::string::npos) return Rational(mpq_class(mpz_class(num)));
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(den))
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
    mpz_class d(den);
    if (d == 0) throw ZeroDenominatorError("rational \"" + text + "\" has zero denominator");
    return Rational(mpq_class(mpz_class(num), d));
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sigloc
