#pragma once

#include "smtlab/groebner.hpp"
#include "smtlab/linalg.hpp"

#include <map>
#include <optional>

namespace smtlab {

// Homogeneous ideal given by generators over a fixed variable set. The
// zero ideal has an empty generator list.
struct Ideal {
    int nvars = 1;
    std::vector<Poly> generators;

    static Ideal zero(int nvars) { return {nvars, {}}; }
};

// Validates homogeneity/variable consistency and drops zero generators.
Ideal make_ideal(int nvars, std::vector<Poly> generators);

Ideal with_extra_generators(const Ideal& base, const std::vector<Poly>& extra);

// proj_dim/degree absent for the empty projective set. Degree is the
// Hilbert-polynomial (scheme) degree, without extracting top-dimensional
// components; reports flag this convention.
struct VarietyProfile {
    std::optional<int> proj_dim;
    std::optional<Int> degree;
    std::map<int, Int> hilbert;
};

struct DegreePart {
    std::vector<Monomial> columns;            // degree-u monomial basis, grevlex descending
    std::vector<std::vector<Rational>> rows;  // spanning set {m*g} of I_u
    int rank = 0;
};

GroebnerBasis groebner_of(const Ideal& I);

// Dimension of the projective zero set; nullopt when empty. Emptiness is
// combinatorial: the initial ideal has affine dimension 0 (every variable
// carries a pure power among the leading monomials).
std::optional<int> projective_dimension(const Ideal& I);

// Requires a nonempty variety.
Int variety_degree(const Ideal& I);

// H(u), computed both as the count of degree-u standard monomials of the
// initial ideal and as binom(N+u,N) - rank(Macaulay matrix); they must
// agree or an InternalError is raised.
Int hilbert_function(const Ideal& I, int u);

DegreePart ideal_degree_part(const Ideal& I, int u);

// Convenience bundle: dimension, degree, H on 0..max_u.
VarietyProfile variety_profile(const Ideal& I, int max_u = 4);

} // namespace smtlab
