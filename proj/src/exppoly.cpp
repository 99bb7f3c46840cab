#include "smtlab/nevanlinna.hpp"

#include "smtlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace smtlab {

namespace {

// total order on exponent polynomials: degree, then coefficients low to high
bool upoly_less(const UPoly& a, const UPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    return up::monic(up::divexact(up::mul(a, b), up::gcd(a, b)));
}

} // namespace

CurveSpec make_curve(std::vector<CurveComponent> components) {
    if (components.empty()) throw std::invalid_argument("curve needs at least one component");
    CurveSpec f;
    bool any_nonzero = false;
    UPoly g;
    for (auto& c : components) {
        up::trim(c.p);
        up::trim(c.q);
        if (!c.p.empty()) {
            g = any_nonzero ? up::gcd(g, c.p) : up::monic(c.p);
            any_nonzero = true;
        }
    }
    if (!any_nonzero) throw DomainError("curve components are all identically zero");
    if (up::deg(g) > 0)
        throw DomainError("curve representation is not reduced: components share the factor " +
                          up::to_string(g));
    f.components = std::move(components);
    f.reduced = true;
    return f;
}

ExpPoly make_exppoly(std::vector<ExpTerm> terms, UPoly den) {
    up::trim(den);
    if (den.empty()) throw std::invalid_argument("exppoly with zero denominator");
    ExpPoly g;
    // normalize the denominator to monic, folding the factor into the terms
    Rational lc = den.back();
    if (lc != 1) {
        for (auto& c : den) c /= lc;
        for (auto& t : terms) t.coeff = up::scale(t.coeff, Rational(1) / lc);
    }
    g.den = std::move(den);
    std::sort(terms.begin(), terms.end(),
              [](const ExpTerm& a, const ExpTerm& b) { return upoly_less(a.expo, b.expo); });
    for (auto& t : terms) {
        up::trim(t.coeff);
        up::trim(t.expo);
        if (t.coeff.empty()) continue;
        if (!g.terms.empty() && g.terms.back().expo == t.expo) {
            g.terms.back().coeff = up::add(g.terms.back().coeff, t.coeff);
            if (g.terms.back().coeff.empty()) g.terms.pop_back();
        } else {
            g.terms.push_back(std::move(t));
        }
    }
    return g;
}

ExpPoly compose_with_curve(const MovingPoly& Q, const CurveSpec& f) {
    if (Q.num_vars() != f.nvars())
        throw std::invalid_argument("compose_with_curve: hypersurface has " +
                                    std::to_string(Q.num_vars()) + " variables, curve has " +
                                    std::to_string(f.nvars()));
    // common denominator of the moving coefficients
    UPoly den{Rational(1)};
    for (const auto& [mono, c] : Q.terms()) den = upoly_lcm(den, c.den());

    std::vector<ExpTerm> terms;
    for (const auto& [mono, c] : Q.terms()) {
        ExpTerm t;
        t.coeff = up::mul(c.num(), up::divexact(den, c.den()));
        t.expo = {};
        for (int i = 0; i < f.nvars(); ++i) {
            if (mono.e[i] == 0) continue;
            const CurveComponent& comp = f.components[i];
            t.coeff = up::mul(t.coeff, up::pow(comp.p, mono.e[i]));
            t.expo = up::add(t.expo, up::scale(comp.q, Rational(static_cast<long>(mono.e[i]))));
            if (t.coeff.empty()) break;
        }
        terms.push_back(std::move(t));
    }
    return make_exppoly(std::move(terms), std::move(den));
}

double exppoly_log_abs(const ExpPoly& g, const std::complex<double>& w) {
    if (g.is_zero()) return -std::numeric_limits<double>::infinity();
    double shift = -std::numeric_limits<double>::infinity();
    std::vector<double> re(g.terms.size());
    for (std::size_t k = 0; k < g.terms.size(); ++k) {
        re[k] = up::eval(g.terms[k].expo, w).real();
        shift = std::max(shift, re[k]);
    }
    std::complex<double> sum(0.0, 0.0);
    for (std::size_t k = 0; k < g.terms.size(); ++k) {
        std::complex<double> e = up::eval(g.terms[k].expo, w);
        sum += up::eval(g.terms[k].coeff, w) * std::exp(e - shift);
    }
    double mag = std::abs(sum);
    double den_mag = std::abs(up::eval(g.den, w));
    if (mag == 0.0) return -std::numeric_limits<double>::infinity();
    if (den_mag == 0.0) return std::numeric_limits<double>::infinity();
    return shift + std::log(mag) - std::log(den_mag);
}

double log_curve_norm(const CurveSpec& f, const std::complex<double>& w) {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> logs(f.components.size());
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        const CurveComponent& c = f.components[i];
        double lp = c.p.empty() ? -std::numeric_limits<double>::infinity()
                                : std::log(std::abs(up::eval(c.p, w)));
        double lq = c.q.empty() ? 0.0 : up::eval(c.q, w).real();
        logs[i] = lp + lq;
        best = std::max(best, logs[i]);
    }
    if (!std::isfinite(best)) return best; // all components vanish at w
    double acc = 0.0;
    for (double l : logs)
        if (std::isfinite(l)) acc += std::exp(2.0 * (l - best));
    return best + 0.5 * std::log(acc);
}

} // namespace smtlab
