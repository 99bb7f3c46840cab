#pragma once

#include "smtlab/poly.hpp"

#include <random>

namespace smtlab::testing {

// Deterministic generator helpers shared by the property tests. All draws
// go through explicit arithmetic on the engine output so runs are
// reproducible for a fixed seed regardless of the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    long int_in(long lo, long hi) { // inclusive
        return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(long bound) {
        long num = int_in(-bound, bound);
        long den = int_in(1, bound);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational(long bound) {
        for (;;) {
            Rational r = rational(bound);
            if (r != 0) return r;
        }
    }

    Monomial monomial(int nvars, int degree) {
        Monomial m = Monomial::unit(nvars);
        for (int d = 0; d < degree; ++d) m.e[int_in(0, nvars - 1)]++;
        return m;
    }

    Poly poly(int nvars, int degree, int max_terms, long coeff_bound = 5) {
        Poly p(nvars, degree);
        int terms = static_cast<int>(int_in(1, max_terms));
        for (int t = 0; t < terms; ++t) p.add_term(monomial(nvars, degree), rational(coeff_bound));
        return p;
    }

    Poly nonzero_poly(int nvars, int degree, int max_terms, long coeff_bound = 5) {
        for (;;) {
            Poly p = poly(nvars, degree, max_terms, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }

    UPoly upoly(int max_deg, long coeff_bound = 5) {
        UPoly p(static_cast<std::size_t>(int_in(0, max_deg)) + 1);
        for (auto& c : p) c = rational(coeff_bound);
        up::trim(p);
        return p;
    }

    RationalFunction ratfun(int max_deg, long coeff_bound = 3) {
        UPoly den;
        do {
            den = upoly(max_deg, coeff_bound);
        } while (den.empty());
        return RationalFunction(upoly(max_deg, coeff_bound), den);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace smtlab::testing
