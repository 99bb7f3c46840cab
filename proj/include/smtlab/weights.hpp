#pragma once

#include "smtlab/variety.hpp"

namespace smtlab {

// Nonnegative weight on the coordinates, length N+1.
struct WeightVector {
    std::vector<Rational> c;
};

WeightVector make_weights(std::vector<Rational> c);

struct WeightBasisReport {
    std::vector<Monomial> basis; // H_X(u) monomials, residues independent mod I_u
    Rational value;              // S_X(u,c)
};

struct EfReport {
    bool holds = true;
    Rational lhs;   // S_X(u,c) / (u H_X(u))
    Rational rhs;   // sum_{j in J} c_j/(n+1) - (2n+1) delta max_i c_i / u
    Rational slack; // lhs - rhs
};

// S_X(u,c) by greedy matroid maximization: degree-u monomials sorted by
// descending weight (grevlex-descending tie break) are added whenever
// independent of the chosen set modulo I_u. The monomial bases of the
// degree-u quotient form the basis family of a linear matroid, so the
// greedy result attains the maximum.
WeightBasisReport max_weight_basis(const Ideal& I, int u, const WeightVector& c);

// Exhaustive oracle over all H(u)-subsets; capped at binom(N+u,N) <= 20.
Rational brute_force_hilbert_weight(const Ideal& I, int u, const WeightVector& c);

// Chow weight of the linear span of the given points: by Cauchy-Binet the
// Chow form is sum_J det(A_J) [J], so the top t-exponent is the maximum of
// sum_{j in J} c_j over coordinate subsets J with nonzero maximal minor.
Rational chow_weight_linear(const std::vector<std::vector<Rational>>& spanning_points,
                            const WeightVector& c);

// Coordinate subspace spanned by the unit vectors e_j, j in coords.
Rational chow_weight_linear_coords(int nvars, const std::vector<int>& coords,
                                   const WeightVector& c);

// Finite-u estimator (n+1) delta S_X(u,c) / (u H_X(u)) of the Chow weight;
// requires u > delta.
Rational chow_weight_estimate(const Ideal& I, const WeightVector& c, int u);

// Combined Evertse-Ferretti inequality. J must be a coordinate set of size
// n+1 with V(I) disjoint from {x_j = 0 : j in J} (verified here).
EfReport ef_inequality_check(const Ideal& I, const WeightVector& c, int u,
                             const std::vector<int>& J);

} // namespace smtlab
