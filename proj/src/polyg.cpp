#include "sigloc/polyg.hpp"

#include <ostream>
#include <stdexcept>

namespace sigloc {

PolyG::PolyG(Rational constant) {
    if (!constant.is_zero()) terms_[0] = std::move(constant);
}

PolyG PolyG::g_power(int k) {
    if (k < 0) throw std::invalid_argument("PolyG::g_power requires k >= 0");
    PolyG p;
    p.terms_[k] = Rational(1);
    return p;
}

PolyG PolyG::from_terms(std::map<int, Rational> terms) {
    PolyG p;
    p.terms_ = std::move(terms);
    p.prune();
    return p;
}

void PolyG::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first < 0) throw std::invalid_argument("PolyG exponent must be nonnegative");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
}

bool PolyG::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

std::optional<int> PolyG::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

Rational PolyG::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational PolyG::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

PolyG PolyG::operator-() const {
    PolyG r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

PolyG PolyG::operator+(const PolyG& o) const {
    PolyG r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = r.terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

PolyG PolyG::operator-(const PolyG& o) const { return *this + (-o); }

PolyG PolyG::operator*(const PolyG& o) const {
    PolyG r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            Rational prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(ka + kb, prod);
            if (!inserted) it->second += prod;
        }
    r.prune();
    return r;
}

PolyG PolyG::operator*(const Rational& s) const {
    if (s.is_zero()) return PolyG();
    PolyG r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
    return r;
}

std::pair<PolyG, PolyG> PolyG::divmod(const PolyG& divisor) const {
    if (divisor.is_zero()) throw ZeroDenominatorError("polynomial division by zero");
    PolyG quotient;
    PolyG remainder = *this;
    const int ddeg = *divisor.degree();
    const Rational dlead = divisor.leading_coeff();
    while (!remainder.is_zero() && *remainder.degree() >= ddeg) {
        const int shift = *remainder.degree() - ddeg;
        const Rational factor = remainder.leading_coeff() / dlead;
        PolyG term = PolyG::g_power(shift) * factor;
        quotient = quotient + term;
        remainder = remainder - term * divisor;
    }
    return {quotient, remainder};
}

PolyG PolyG::gcd(PolyG a, PolyG b) {
    // Euclid over the rationals; remainders are made monic each step to keep
    // coefficient growth in check.
    while (!b.is_zero()) {
        PolyG r = a.divmod(b).second.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyG PolyG::monic() const {
    if (is_zero()) return *this;
    return *this * leading_coeff().reciprocal();
}

Rational PolyG::eval(const Rational& g) const {
    // Horner over the sparse terms, highest power first.
    Rational acc(0);
    int prev = 0;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        for (int i = 0; i < prev - it->first; ++i) acc *= g;
        acc += it->second;
        prev = it->first;
    }
    if (first) return Rational(0);
    for (int i = 0; i < prev; ++i) acc *= g;
    return acc;
}

double PolyG::eval(double g) const {
    double acc = 0.0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        acc += it->second.to_double() * std::pow(g, it->first);
    return acc;
}

std::complex<double> PolyG::eval(std::complex<double> g) const {
    std::complex<double> acc = 0.0;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        acc += it->second.to_double() * std::pow(g, it->first);
    return acc;
}

std::string PolyG::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (first) {
            out += neg ? "-" : "";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        const bool unit = mag.is_one() && k > 0;
        if (!unit) out += mag.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "g";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const PolyG& p) { return os << p.str(); }

}  // namespace sigloc
