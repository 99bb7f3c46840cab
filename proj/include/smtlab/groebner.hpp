#pragma once

#include "smtlab/poly.hpp"

#include <vector>

namespace smtlab {

// Reduced Groebner basis under grevlex: generators monic, no term of any
// generator divisible by the leading monomial of another, sorted by
// leading monomial (grevlex descending). Deterministic for fixed input.
struct GroebnerBasis {
    std::vector<Poly> generators;
};

// Minimal monomial generators, an antichain under divisibility.
struct MonomialIdeal {
    int nvars = 1;
    std::vector<Monomial> minimal_generators;
};

// Dimension/degree data of a monomial ideal, read off the Hilbert series
// numerator K(t) of R/I over (1-t)^nvars.
struct MonomialHilbertData {
    int nvars = 1;
    int affine_dim = 0;     // Krull dimension of R/I
    Int degree;             // K~(1) after cancelling all (1-t) factors
    std::vector<Int> numerator; // K(t) coefficients

    Int hf(int u) const;    // number of degree-u monomials outside the ideal
};

// Remainder of multivariate division by `basis` under grevlex: no term of
// the result is divisible by any basis leading monomial, and p - result
// lies in the generated ideal. Divisors are tried in basis order, so the
// output is deterministic.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

Poly s_polynomial(const Poly& f, const Poly& g);

// Buchberger with normal pair selection (lowest lcm degree first, then
// lexicographic on pair indices) and the two classical discarding
// criteria. Output is the reduced basis, bit-identical for fixed input.
GroebnerBasis buchberger(const std::vector<Poly>& gens);

MonomialIdeal initial_ideal(const GroebnerBasis& gb);

// Antichain reduction of a monomial generating set.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialHilbertData monomial_hilbert_data(const MonomialIdeal& m);

// Degree-u monomials divisible by no minimal generator, grevlex descending.
std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int u);

} // namespace smtlab
