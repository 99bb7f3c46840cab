#include "smtlab/ratfun.hpp"

#include <stdexcept>

namespace smtlab {

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    up::trim(num_);
    up::trim(den_);
    if (den_.empty()) throw std::invalid_argument("rational function with zero denominator");
    if (num_.empty()) {
        den_ = {Rational(1)};
        return;
    }
    UPoly g = up::gcd(num_, den_);
    if (up::deg(g) > 0) {
        num_ = up::divexact(num_, g);
        den_ = up::divexact(den_, g);
    }
    Rational lc = den_.back();
    if (lc != 1) {
        for (auto& c : den_) c /= lc;
        for (auto& c : num_) c /= lc;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("rational function is not constant");
    return num_.empty() ? Rational(0) : num_[0];
}

std::optional<Rational> RationalFunction::eval(const Rational& z0) const {
    Rational d = up::eval(den_, z0);
    if (d == 0) return std::nullopt;
    return up::eval(num_, z0) / d;
}

std::complex<double> RationalFunction::eval(const std::complex<double>& z0) const {
    return up::eval(num_, z0) / up::eval(den_, z0);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = up::neg(r.num_);
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(up::add(up::mul(a.num_, b.den_), up::mul(b.num_, a.den_)),
                            up::mul(a.den_, b.den_));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(up::sub(up::mul(a.num_, b.den_), up::mul(b.num_, a.den_)),
                            up::mul(a.den_, b.den_));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(up::mul(a.num_, b.num_), up::mul(a.den_, b.den_));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::invalid_argument("rational function division by zero");
    return RationalFunction(up::mul(a.num_, b.den_), up::mul(a.den_, b.num_));
}

std::string RationalFunction::str() const {
    if (up::deg(den_) == 0) {
        // canonical den is monic, so a polynomial has den == 1
        if (up::deg(num_) <= 0) return num_.empty() ? "0" : num_[0].get_str();
        return up::to_string(num_);
    }
    std::string n = up::deg(num_) <= 0 && !num_.empty() && num_[0] >= 0
                        ? num_[0].get_str()
                        : "(" + up::to_string(num_) + ")";
    return n + "/(" + up::to_string(den_) + ")";
}

} // namespace smtlab
