#pragma once

#include "smtlab/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace smtlab {

// Dense univariate polynomial in z over Q. coeffs[k] is the coefficient of
// z^k; normalized form has no trailing zeros (the zero polynomial is {}).
using UPoly = std::vector<Rational>;

namespace up {

void trim(UPoly& p);
inline bool is_zero(const UPoly& p) { return p.empty(); }
inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero
UPoly constant(const Rational& c);
UPoly z(); // the monomial z

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Rational& c);
UPoly neg(const UPoly& a);
UPoly pow(const UPoly& a, int e);

// Field division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
UPoly divexact(const UPoly& a, const UPoly& b); // throws if remainder nonzero

UPoly monic(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b); // monic, gcd(0,0)=0
UPoly derivative(const UPoly& a);

Rational eval(const UPoly& p, const Rational& x);
std::complex<double> eval(const UPoly& p, const std::complex<double>& x);

// Square-free decomposition (Yun): returns [(f1,1),(f2,2),...] with
// p = lc * prod f_i^i, each f_i monic square-free, pairwise coprime.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

// Text in the coefficient grammar: sums of int|frac coefficients times
// var^k, e.g. "z^2 - 2*z + 1/3". Reparseable by parse_ratfun.
std::string to_string(const UPoly& p, const std::string& var = "z");

} // namespace up
} // namespace smtlab
