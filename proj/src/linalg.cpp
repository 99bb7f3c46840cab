#include "smtlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace smtlab {

int exact_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows.front().size();
    std::vector<std::vector<Int>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("exact_rank: ragged matrix");
        Int l(1);
        for (const Rational& x : row) {
            Int d = x.get_den();
            l = l / gcd(l, d) * d;
        }
        std::vector<Int> irow(ncols);
        for (std::size_t j = 0; j < ncols; ++j) {
            Rational scaled = row[j] * Rational(l);
            irow[j] = scaled.get_num();
        }
        a.push_back(std::move(irow));
    }

    int m = static_cast<int>(a.size()), n = static_cast<int>(ncols);
    int rank = 0;
    Int prev(1);
    for (int col = 0; col < n && rank < m; ++col) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int i = rank + 1; i < m; ++i) {
            for (int j = col + 1; j < n; ++j) {
                Int t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<Rational> Echelon::reduce(std::vector<Rational> v) const {
    if (static_cast<int>(v.size()) != ncols_)
        throw std::invalid_argument("Echelon::reduce: wrong vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0) continue;
        Rational f = c; // pivot entries are 1
        for (int j = pivots_[r]; j < ncols_; ++j)
            if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool Echelon::add(std::vector<Rational> v) {
    v = reduce(std::move(v));
    int pc = -1;
    for (int j = 0; j < ncols_; ++j)
        if (v[j] != 0) {
            pc = j;
            break;
        }
    if (pc < 0) return false;
    Rational lead = v[pc];
    for (int j = pc; j < ncols_; ++j) v[j] /= lead;
    // eliminate the new pivot from existing rows to keep the form reduced
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = rows_[r][pc];
        if (c == 0) continue;
        Rational f = c;
        for (int j = pc; j < ncols_; ++j)
            if (v[j] != 0) rows_[r][j] -= f * v[j];
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pc);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, pc);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

std::vector<Rational> poly_to_vector(const Poly& p, const std::vector<Monomial>& columns) {
    std::vector<Rational> v(columns.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::find(columns.begin(), columns.end(), m);
        if (it == columns.end())
            throw std::invalid_argument("poly_to_vector: monomial outside the column basis");
        v[static_cast<std::size_t>(it - columns.begin())] = c;
    }
    return v;
}

} // namespace smtlab
