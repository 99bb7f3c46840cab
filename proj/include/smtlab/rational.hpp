#pragma once

#include <gmpxx.h>

#include <string>

namespace smtlab {

// Exact arbitrary-precision integers and rationals. mpq_class keeps the
// canonical form (gcd(|num|,den)=1, den>0) we rely on for equality tests.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q" and signs; throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

// r^e for integer e (e < 0 requires r != 0).
Rational pow_rational(const Rational& r, long e);

Int binomial(long n, long k);

} // namespace smtlab
