#include "smtlab/variety.hpp"

#include "smtlab/errors.hpp"

namespace smtlab {

Ideal make_ideal(int nvars, std::vector<Poly> generators) {
    if (nvars <= 0) throw std::invalid_argument("ideal needs at least one variable");
    Ideal I;
    I.nvars = nvars;
    for (Poly& g : generators) {
        if (g.is_zero()) continue;
        if (g.num_vars() != nvars)
            throw std::invalid_argument("ideal generator over a different variable set");
        I.generators.push_back(std::move(g));
    }
    return I;
}

Ideal with_extra_generators(const Ideal& base, const std::vector<Poly>& extra) {
    Ideal I = base;
    for (const Poly& g : extra) {
        if (g.is_zero()) continue;
        if (g.num_vars() != base.nvars)
            throw std::invalid_argument("extra generator over a different variable set");
        I.generators.push_back(g);
    }
    return I;
}

GroebnerBasis groebner_of(const Ideal& I) { return buchberger(I.generators); }

namespace {

MonomialIdeal initial_of(const Ideal& I) {
    MonomialIdeal m = initial_ideal(groebner_of(I));
    m.nvars = I.nvars; // empty basis carries no variable count
    return m;
}

} // namespace

std::optional<int> projective_dimension(const Ideal& I) {
    MonomialHilbertData h = monomial_hilbert_data(initial_of(I));
    if (h.affine_dim <= 0) return std::nullopt;
    return h.affine_dim - 1;
}

Int variety_degree(const Ideal& I) {
    MonomialHilbertData h = monomial_hilbert_data(initial_of(I));
    if (h.affine_dim <= 0) throw DomainError("variety_degree: empty projective set");
    return h.degree;
}

DegreePart ideal_degree_part(const Ideal& I, int u) {
    if (u < 0) throw std::invalid_argument("ideal_degree_part: negative degree");
    DegreePart part;
    part.columns = monomials_of_degree(I.nvars, u);
    for (const Poly& g : I.generators) {
        int k = u - g.degree();
        if (k < 0) continue;
        for (const Monomial& m : monomials_of_degree(I.nvars, k))
            part.rows.push_back(
                poly_to_vector(mul(term_poly(I.nvars, m, Rational(1)), g), part.columns));
    }
    part.rank = exact_rank(part.rows);
    return part;
}

Int hilbert_function(const Ideal& I, int u) {
    if (u < 0) throw std::invalid_argument("hilbert_function: negative degree");
    Int combinatorial = Int(static_cast<long>(standard_monomials(initial_of(I), u).size()));
    DegreePart part = ideal_degree_part(I, u);
    Int macaulay = binomial(I.nvars - 1 + u, I.nvars - 1) - part.rank;
    if (combinatorial != macaulay)
        throw InternalError("hilbert_function: initial-ideal count " + combinatorial.get_str() +
                            " disagrees with Macaulay rank route " + macaulay.get_str());
    return combinatorial;
}

VarietyProfile variety_profile(const Ideal& I, int max_u) {
    VarietyProfile p;
    MonomialHilbertData h = monomial_hilbert_data(initial_of(I));
    if (h.affine_dim > 0) {
        p.proj_dim = h.affine_dim - 1;
        p.degree = h.degree;
    }
    for (int u = 0; u <= max_u; ++u) p.hilbert[u] = hilbert_function(I, u);
    return p;
}

} // namespace smtlab
