#pragma once

#include "smtlab/monomial.hpp"
#include "smtlab/poly.hpp"

#include <vector>

namespace smtlab {

// Exact rank via fraction-free (Bareiss) elimination on integer rows
// obtained by clearing each row's denominators.
int exact_rank(const std::vector<std::vector<Rational>>& rows);

// Incrementally maintained reduced row echelon form over Q.
class Echelon {
public:
    explicit Echelon(int ncols) : ncols_(ncols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }

    // Residue of v modulo the current row space.
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    // Inserts v's residue if nonzero; returns true when the rank grew.
    bool add(std::vector<Rational> v);

private:
    int ncols_;
    std::vector<std::vector<Rational>> rows_; // pivot coefficient 1, pivots eliminated elsewhere
    std::vector<int> pivots_;                 // pivot column per row, strictly increasing
};

// Coordinates of p in the degree-u monomial basis `columns`
// (grevlex-descending order as produced by monomials_of_degree).
std::vector<Rational> poly_to_vector(const Poly& p, const std::vector<Monomial>& columns);

} // namespace smtlab
