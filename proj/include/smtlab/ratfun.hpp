#pragma once

#include "smtlab/upoly.hpp"

#include <optional>

namespace smtlab {

// Rational function of the moving parameter z. Canonical form: denominator
// monic and nonzero, gcd(num, den) = 1; the zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_{Rational(1)} {}
    RationalFunction(const Rational& c) : num_(up::constant(c)), den_{Rational(1)} {}
    RationalFunction(UPoly num, UPoly den);

    static RationalFunction variable() { return RationalFunction(up::z(), {Rational(1)}); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_constant() const { return up::deg(num_) <= 0 && up::deg(den_) == 0; }
    Rational constant_value() const; // requires is_constant()

    // nullopt when z0 is a pole.
    std::optional<Rational> eval(const Rational& z0) const;
    std::complex<double> eval(const std::complex<double>& z0) const;

    bool operator==(const RationalFunction& o) const = default;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    std::string str() const;

private:
    UPoly num_;
    UPoly den_;
};

} // namespace smtlab
