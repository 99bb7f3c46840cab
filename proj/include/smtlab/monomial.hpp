#pragma once

#include <compare>
#include <string>
#include <vector>

namespace smtlab {

// Exponent vector of a monomial in x_0..x_N; length is the ambient
// variable count N+1.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
    static Monomial unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    int total_degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int nvars() const { return static_cast<int>(e.size()); }

    bool operator==(const Monomial&) const = default;
};

enum class Ordering { LESS, EQUAL, GREATER };

// Graded reverse lexicographic order with x0 > x1 > ... > xN: higher total
// degree wins; on equal degree, a > b iff the last nonzero entry of a-b is
// negative. Throws std::invalid_argument on length mismatch.
Ordering grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_compare(a, b) == Ordering::GREATER;
    }
};

bool divides(const Monomial& a, const Monomial& b); // a | b
Monomial mul(const Monomial& a, const Monomial& b);
Monomial div(const Monomial& a, const Monomial& b); // requires b | a
Monomial lcm(const Monomial& a, const Monomial& b);

// All monomials of total degree u in nvars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int u);

// "x0^2*x2" with the given variable names; "1" for the unit monomial.
std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

} // namespace smtlab
