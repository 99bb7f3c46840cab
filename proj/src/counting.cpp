#include "smtlab/nevanlinna.hpp"

#include "smtlab/errors.hpp"

#include <cmath>
#include <numbers>

namespace smtlab {

namespace {

using Cplx = std::complex<double>;

// value of the numerator scaled by exp(-max_k Re expo_k), a positive real
// factor: argument and relative magnitude are preserved, overflow is not
// possible.
Cplx scaled_numerator(const ExpPoly& g, const Cplx& w) {
    double shift = -std::numeric_limits<double>::infinity();
    for (const ExpTerm& t : g.terms) shift = std::max(shift, up::eval(t.expo, w).real());
    Cplx sum(0.0, 0.0);
    for (const ExpTerm& t : g.terms)
        sum += up::eval(t.coeff, w) * std::exp(up::eval(t.expo, w) - shift);
    return sum;
}

struct ArgWalker {
    const ExpPoly& g;
    double radius;
    bool failed = false;

    Cplx at(double theta) const {
        return scaled_numerator(g, Cplx(radius * std::cos(theta), radius * std::sin(theta)));
    }

    // accumulated argument over [t1,t2], bisecting until each principal
    // increment is below pi/2
    double walk(double t1, double t2, const Cplx& v1, const Cplx& v2, int depth) {
        if (failed) return 0.0;
        if (v1 == Cplx(0.0, 0.0) || v2 == Cplx(0.0, 0.0)) {
            failed = true;
            return 0.0;
        }
        double d = std::arg(v2 / v1);
        if (std::abs(d) < std::numbers::pi / 2) return d;
        if (depth <= 0) {
            failed = true;
            return 0.0;
        }
        double tm = 0.5 * (t1 + t2);
        Cplx vm = at(tm);
        return walk(t1, tm, v1, vm, depth - 1) + walk(tm, t2, vm, v2, depth - 1);
    }

    // winding number estimate from a uniform base grid plus refinement
    std::optional<double> winding(int base_nodes) {
        failed = false;
        std::vector<Cplx> v(base_nodes);
        for (int j = 0; j < base_nodes; ++j)
            v[j] = at(2.0 * std::numbers::pi * j / base_nodes);
        double total = 0.0;
        for (int j = 0; j < base_nodes; ++j) {
            double t1 = 2.0 * std::numbers::pi * j / base_nodes;
            double t2 = 2.0 * std::numbers::pi * (j + 1) / base_nodes;
            total += walk(t1, t2, v[j], v[(j + 1) % base_nodes], 56);
            if (failed) return std::nullopt;
        }
        return total / (2.0 * std::numbers::pi);
    }
};

} // namespace

int winding_zero_count(const ExpPoly& g, double t) {
    if (g.is_zero()) throw DomainError("winding_zero_count: identically zero function");
    if (!(t > 0)) throw std::invalid_argument("winding_zero_count: radius must be positive");
    double radius = t;
    for (int attempt = 0; attempt < 2; ++attempt) {
        ArgWalker walker{g, radius};
        auto w1 = walker.winding(512);
        auto w2 = walker.winding(1024);
        if (w1 && w2) {
            double rounded = std::round(*w2);
            if (std::abs(*w2 - rounded) < 1e-3 && std::round(*w1) == rounded)
                return static_cast<int>(rounded);
        }
        radius = t * (1.0 + 2.5e-11); // one ulp-scale perturbation
    }
    throw BudgetError("winding number not within 1e-3 of an integer after refinement "
                      "(contour too close to a zero of the function)");
}

namespace {

double integrate_counts(const ExpPoly& g, double lo, double hi, int n_lo, int n_hi) {
    if (n_lo >= n_hi) return n_lo * std::log(hi / lo);
    double width = std::log(hi / lo);
    if (width < 1e-10) return 0.5 * (n_lo + n_hi) * width;
    double mid = std::sqrt(lo * hi);
    int n_mid = std::clamp(winding_zero_count(g, mid), n_lo, n_hi);
    return integrate_counts(g, lo, mid, n_lo, n_mid) + integrate_counts(g, mid, hi, n_mid, n_hi);
}

} // namespace

double counting_N(const ExpPoly& g, double r, std::optional<int> M) {
    if (g.is_zero()) throw DomainError("counting_N: identically zero function");
    if (!(r > 1.0)) throw std::invalid_argument("counting_N: needs r > 1");
    if (M && *M < 1) throw std::invalid_argument("counting_N: truncation level must be >= 1");

    if (g.single_exponential()) {
        // zeros are the zeros of the reduced coefficient; exact multiplicities
        RationalFunction reduced(g.terms.front().coeff, g.den);
        double total = 0.0;
        if (up::deg(reduced.num()) < 1) return 0.0;
        for (const ComplexRoot& root : complex_roots(reduced.num())) {
            double a = std::abs(root.value);
            if (a >= r) continue;
            int mult = M ? std::min(root.multiplicity, *M) : root.multiplicity;
            total += mult * std::log(r / std::max(a, 1.0));
        }
        return total;
    }

    if (M)
        throw DomainError("counting_N: truncated counting is only available for polynomial-type "
                          "compositions");
    if (up::deg(g.den) > 0) {
        for (const ComplexRoot& root : complex_roots(g.den)) {
            if (std::abs(root.value) >= r) continue;
            Cplx v = scaled_numerator(g, root.value);
            double scale = 0.0;
            for (const ExpTerm& t : g.terms) scale += std::abs(up::eval(t.coeff, root.value));
            if (std::abs(v) < 1e-9 * std::max(scale, 1e-300))
                throw DomainError("counting_N: a coefficient pole coincides with a zero of the "
                                  "composition; this configuration is unsupported");
        }
    }
    int n_lo = winding_zero_count(g, 1.0);
    int n_hi = winding_zero_count(g, r);
    return integrate_counts(g, 1.0, r, n_lo, n_hi);
}

} // namespace smtlab
