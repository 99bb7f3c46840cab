#include "smtlab/weights.hpp"

#include "smtlab/errors.hpp"

#include <algorithm>

namespace smtlab {

WeightVector make_weights(std::vector<Rational> c) {
    for (const Rational& x : c)
        if (x < 0) throw std::invalid_argument("weight vector entries must be nonnegative");
    return {std::move(c)};
}

namespace {

Rational monomial_weight(const Monomial& m, const WeightVector& c) {
    Rational w(0);
    for (std::size_t i = 0; i < m.e.size(); ++i)
        if (m.e[i]) w += Rational(static_cast<long>(m.e[i])) * c.c[i];
    return w;
}

struct QuotientSetup {
    std::vector<Monomial> columns;            // degree-u monomials, grevlex descending
    std::vector<std::vector<Rational>> residues; // unit vectors reduced mod I_u
    long quotient_dim = 0;                    // H_X(u)
};

QuotientSetup quotient_setup(const Ideal& I, int u, const WeightVector& c) {
    if (u < 1) throw std::invalid_argument("hilbert weight needs u >= 1");
    if (static_cast<int>(c.c.size()) != I.nvars)
        throw std::invalid_argument("weight vector length must match the variable count");
    if (!projective_dimension(I)) throw DomainError("hilbert weight: empty variety");

    QuotientSetup q;
    q.columns = monomials_of_degree(I.nvars, u);
    int ncols = static_cast<int>(q.columns.size());
    Echelon ideal_part(ncols);
    for (const Poly& g : I.generators) {
        int k = u - g.degree();
        if (k < 0) continue;
        for (const Monomial& m : monomials_of_degree(I.nvars, k))
            ideal_part.add(poly_to_vector(mul(term_poly(I.nvars, m, Rational(1)), g), q.columns));
    }
    q.quotient_dim = ncols - ideal_part.rank();
    q.residues.reserve(q.columns.size());
    for (int j = 0; j < ncols; ++j) {
        std::vector<Rational> unit(ncols, Rational(0));
        unit[j] = 1;
        q.residues.push_back(ideal_part.reduce(std::move(unit)));
    }
    return q;
}

} // namespace

WeightBasisReport max_weight_basis(const Ideal& I, int u, const WeightVector& c) {
    QuotientSetup q = quotient_setup(I, u, c);
    int ncols = static_cast<int>(q.columns.size());

    std::vector<int> order(ncols);
    for (int j = 0; j < ncols; ++j) order[j] = j;
    std::vector<Rational> weight(ncols);
    for (int j = 0; j < ncols; ++j) weight[j] = monomial_weight(q.columns[j], c);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (weight[a] != weight[b]) return weight[a] > weight[b];
        return false; // columns are already grevlex descending
    });

    WeightBasisReport report;
    report.value = 0;
    Echelon chosen(ncols);
    for (int j : order) {
        if (chosen.rank() == static_cast<int>(q.quotient_dim)) break;
        if (chosen.add(q.residues[j])) {
            report.basis.push_back(q.columns[j]);
            report.value += weight[j];
        }
    }
    if (chosen.rank() != static_cast<int>(q.quotient_dim))
        throw InternalError("max_weight_basis: greedy terminated below the quotient dimension");
    return report;
}

Rational brute_force_hilbert_weight(const Ideal& I, int u, const WeightVector& c) {
    QuotientSetup q = quotient_setup(I, u, c);
    int ncols = static_cast<int>(q.columns.size());
    if (ncols > 20)
        throw BudgetError("brute_force_hilbert_weight: " + std::to_string(ncols) +
                          " monomials exceed the oracle cap of 20");
    int h = static_cast<int>(q.quotient_dim);
    std::vector<Rational> weight(ncols);
    for (int j = 0; j < ncols; ++j) weight[j] = monomial_weight(q.columns[j], c);

    Rational best(0);
    bool found = false;
    std::vector<int> subset(h);
    for (int i = 0; i < h; ++i) subset[i] = i;
    if (h == 0) return best;
    for (;;) {
        Echelon ech(ncols);
        bool independent = true;
        Rational total(0);
        for (int j : subset) {
            if (!ech.add(q.residues[j])) {
                independent = false;
                break;
            }
            total += weight[j];
        }
        if (independent && (!found || total > best)) {
            best = total;
            found = true;
        }
        int k = h - 1;
        while (k >= 0 && subset[k] == ncols - h + k) --k;
        if (k < 0) break;
        ++subset[k];
        for (int i = k + 1; i < h; ++i) subset[i] = subset[i - 1] + 1;
    }
    if (!found) throw InternalError("brute_force_hilbert_weight: no independent subset found");
    return best;
}

Rational chow_weight_linear(const std::vector<std::vector<Rational>>& spanning_points,
                            const WeightVector& c) {
    if (spanning_points.empty())
        throw std::invalid_argument("chow_weight_linear: no spanning points");
    int rows = static_cast<int>(spanning_points.size());
    int ncols = static_cast<int>(spanning_points.front().size());
    for (const auto& p : spanning_points)
        if (static_cast<int>(p.size()) != ncols)
            throw std::invalid_argument("chow_weight_linear: ragged point list");
    if (static_cast<int>(c.c.size()) != ncols)
        throw std::invalid_argument("chow_weight_linear: weight length mismatch");
    if (exact_rank(spanning_points) != rows)
        throw DomainError("chow_weight_linear: points do not span the declared dimension");

    // maximize sum_{j in J} c_j over column subsets J with det(A_J) != 0
    std::vector<int> subset(rows);
    for (int i = 0; i < rows; ++i) subset[i] = i;
    Rational best(0);
    bool found = false;
    for (;;) {
        std::vector<std::vector<Rational>> minor(rows, std::vector<Rational>(rows));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) minor[i][j] = spanning_points[i][subset[j]];
        if (exact_rank(minor) == rows) {
            Rational total(0);
            for (int j : subset) total += c.c[j];
            if (!found || total > best) {
                best = total;
                found = true;
            }
        }
        int k = rows - 1;
        while (k >= 0 && subset[k] == ncols - rows + k) --k;
        if (k < 0) break;
        ++subset[k];
        for (int i = k + 1; i < rows; ++i) subset[i] = subset[i - 1] + 1;
    }
    if (!found) throw InternalError("chow_weight_linear: no nonzero maximal minor");
    return best;
}

Rational chow_weight_linear_coords(int nvars, const std::vector<int>& coords,
                                   const WeightVector& c) {
    std::vector<std::vector<Rational>> points;
    for (int j : coords) {
        if (j < 0 || j >= nvars)
            throw std::invalid_argument("chow_weight_linear_coords: coordinate out of range");
        std::vector<Rational> row(nvars, Rational(0));
        row[j] = 1;
        points.push_back(std::move(row));
    }
    return chow_weight_linear(points, c);
}

Rational chow_weight_estimate(const Ideal& I, const WeightVector& c, int u) {
    auto dim = projective_dimension(I);
    if (!dim) throw DomainError("chow_weight_estimate: empty variety");
    Int delta = variety_degree(I);
    if (Int(u) <= delta)
        throw DomainError("chow_weight_estimate: requires u > degree (u = " + std::to_string(u) +
                          ", degree = " + delta.get_str() + ")");
    WeightBasisReport s = max_weight_basis(I, u, c);
    Int h = Int(static_cast<long>(s.basis.size()));
    Rational denom = Rational(Int(u) * h);
    return Rational(Int(*dim + 1) * delta) * s.value / denom;
}

EfReport ef_inequality_check(const Ideal& I, const WeightVector& c, int u,
                             const std::vector<int>& J) {
    auto dim = projective_dimension(I);
    if (!dim) throw DomainError("ef_inequality_check: empty variety");
    int n = *dim;
    if (static_cast<int>(J.size()) != n + 1)
        throw std::invalid_argument("ef_inequality_check: J must have size dim+1 = " +
                                    std::to_string(n + 1));
    // Lemma 2.4 hypothesis: V(I) disjoint from the coordinate subspace
    std::vector<Poly> cut;
    for (int j : J) {
        if (j < 0 || j >= I.nvars)
            throw std::invalid_argument("ef_inequality_check: coordinate out of range");
        Monomial m = Monomial::unit(I.nvars);
        m.e[j] = 1;
        cut.push_back(term_poly(I.nvars, m, Rational(1)));
    }
    if (projective_dimension(with_extra_generators(I, cut))) {
        std::string names;
        for (int j : J) names += (names.empty() ? "" : ",") + std::to_string(j);
        throw DomainError("ef_inequality_check: V meets the coordinate set {" + names +
                          "}; the emptiness precondition fails");
    }

    Int delta = variety_degree(I);
    WeightBasisReport s = max_weight_basis(I, u, c);
    Int h = Int(static_cast<long>(s.basis.size()));

    EfReport rep;
    rep.lhs = s.value / Rational(Int(u) * h);
    Rational sum_j(0);
    for (int j : J) sum_j += c.c[j];
    Rational max_c(0);
    for (const Rational& x : c.c)
        if (x > max_c) max_c = x;
    rep.rhs = sum_j / Rational(static_cast<long>(n + 1)) -
              Rational(Int(2 * n + 1) * delta) * max_c / Rational(static_cast<long>(u));
    rep.slack = rep.lhs - rep.rhs;
    rep.holds = rep.lhs >= rep.rhs;
    return rep;
}

} // namespace smtlab
