#include "smtlab/nevanlinna.hpp"

#include "smtlab/errors.hpp"

#include <cfloat>
#include <cmath>
#include <mpfr.h>
#include <numbers>

namespace smtlab {

namespace {

using Cplx = std::complex<double>;

struct SingularSample {};

void validate_quadrature(const QuadratureConfig& cfg) {
    if (cfg.initial_nodes < 16)
        throw std::invalid_argument("quadrature needs at least 16 initial nodes");
    if (!(cfg.tolerance > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (cfg.max_doublings < 1) throw std::invalid_argument("quadrature needs max_doublings >= 1");
}

// Trapezoid average over the circle with node doubling; spectrally
// accurate for smooth periodic integrands.
double circle_average(const std::function<double(double)>& f, const QuadratureConfig& cfg) {
    int n = cfg.initial_nodes;
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        double v = f(2.0 * std::numbers::pi * j / n);
        if (!std::isfinite(v)) throw SingularSample{};
        sum += v;
    }
    double prev = sum / n;
    for (int d = 1; d <= cfg.max_doublings; ++d) {
        double add = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = f(2.0 * std::numbers::pi * (j + 0.5) / n);
            if (!std::isfinite(v)) throw SingularSample{};
            add += v;
        }
        double cur = 0.5 * (prev + add / n);
        n *= 2;
        if (std::abs(cur - prev) < cfg.tolerance) return cur;
        prev = cur;
    }
    throw BudgetError("quadrature failed to converge within the doubling budget");
}

double radius_average(const std::function<double(const Cplx&)>& f, double r,
                      const QuadratureConfig& cfg, bool allow_perturb) {
    auto at = [&](double radius) {
        return circle_average(
            [&](double theta) {
                return f(Cplx(radius * std::cos(theta), radius * std::sin(theta)));
            },
            cfg);
    };
    try {
        return at(r);
    } catch (const SingularSample&) {
        if (allow_perturb) {
            double r2 = r * (1.0 + 8.0 * DBL_EPSILON);
            try {
                return at(r2);
            } catch (const SingularSample&) {
            }
        }
        throw DomainError("integrand is singular on the circle of radius " + std::to_string(r));
    }
}

} // namespace

double characteristic_T(const CurveSpec& f, double r, const QuadratureConfig& cfg) {
    validate_quadrature(cfg);
    if (!(r >= 1.0)) throw std::invalid_argument("characteristic_T: needs r >= 1");
    if (r == 1.0) return 0.0;
    auto integrand = [&](const Cplx& w) { return log_curve_norm(f, w); };
    return radius_average(integrand, r, cfg, false) - radius_average(integrand, 1.0, cfg, false);
}

namespace {

// exact circle average of log|h| on S(r) (Jensen's formula)
double jensen_average(const UPoly& h, double r) {
    double v = std::log(std::abs(h.back().get_d()));
    if (up::deg(h) >= 1)
        for (const ComplexRoot& root : complex_roots(h))
            v += root.multiplicity * std::log(std::max(r, std::abs(root.value)));
    return v;
}

double numerator_log_abs(const ExpPoly& g, const Cplx& w) {
    double shift = -std::numeric_limits<double>::infinity();
    for (const ExpTerm& t : g.terms) shift = std::max(shift, up::eval(t.expo, w).real());
    Cplx sum(0.0, 0.0);
    for (const ExpTerm& t : g.terms)
        sum += up::eval(t.coeff, w) * std::exp(up::eval(t.expo, w) - shift);
    double mag = std::abs(sum);
    if (mag == 0.0) return -std::numeric_limits<double>::infinity();
    return shift + std::log(mag);
}

} // namespace

double exppoly_log_average(const ExpPoly& g, double r, const QuadratureConfig& cfg) {
    if (g.is_zero()) throw DomainError("exppoly_log_average: identically zero function");
    if (g.single_exponential()) {
        const ExpTerm& t = g.terms.front();
        // avg log|c(w) e^{h(w)}| = Jensen(c) + Re h(0) by the mean value property
        double harmonic = t.expo.empty() ? 0.0 : t.expo[0].get_d();
        return jensen_average(t.coeff, r) + harmonic - jensen_average(g.den, r);
    }
    auto integrand = [&](const Cplx& w) { return numerator_log_abs(g, w); };
    return radius_average(integrand, r, cfg, true) - jensen_average(g.den, r);
}

double proximity_m(const CurveSpec& f, int hypersurface_degree, const ExpPoly& composed, double r,
                   const QuadratureConfig& cfg) {
    validate_quadrature(cfg);
    if (!(r >= 1.0)) throw std::invalid_argument("proximity_m: needs r >= 1");
    if (composed.is_zero())
        throw DomainError("proximity_m: degenerate composition, Q(f) is identically zero");
    if (r == 1.0) return 0.0;
    auto norm = [&](const Cplx& w) { return log_curve_norm(f, w); };
    double at_r = hypersurface_degree * radius_average(norm, r, cfg, false) -
                  exppoly_log_average(composed, r, cfg);
    double at_1 = hypersurface_degree * radius_average(norm, 1.0, cfg, false) -
                  exppoly_log_average(composed, 1.0, cfg);
    return at_r - at_1;
}

double proximity_m(const CurveSpec& f, const MovingPoly& Q, double r, const QuadratureConfig& cfg) {
    return proximity_m(f, Q.degree(), compose_with_curve(Q, f), r, cfg);
}

double ratfun_characteristic(const RationalFunction& a, double r) {
    if (a.is_zero()) throw DomainError("ratfun_characteristic: zero function");
    if (!(r >= 1.0)) throw std::invalid_argument("ratfun_characteristic: needs r >= 1");
    auto height = [&](double radius) {
        return std::max(jensen_average(a.num(), radius), jensen_average(a.den(), radius));
    };
    return height(r) - height(1.0);
}

FmtReport fmt_check(const CurveSpec& f, const MovingPoly& Q, const std::vector<double>& grid,
                    const QuadratureConfig& cfg) {
    if (grid.empty()) throw std::invalid_argument("fmt_check: empty r grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 1.0)) throw std::invalid_argument("fmt_check: grid values must exceed 1");
        if (i && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("fmt_check: grid must be increasing");
    }
    ExpPoly composed = compose_with_curve(Q, f);
    if (composed.is_zero())
        throw DomainError("fmt_check: degenerate composition, Q(f) is identically zero");

    FmtReport rep;
    rep.r_grid = grid;
    for (const auto& [mono, c] : Q.terms())
        if (!c.is_constant()) rep.moving_coefficients = true;

    int d = Q.degree();
    for (double r : grid) {
        double T = characteristic_T(f, r, cfg);
        double m = proximity_m(f, d, composed, r, cfg);
        double N = counting_N(composed, r);
        rep.T.push_back(T);
        rep.m.push_back(m);
        rep.N.push_back(N);
        rep.residual.push_back(d * T - m - N);
    }

    double slack = 10.0 * cfg.tolerance;
    if (!rep.moving_coefficients) {
        rep.criterion = "constant coefficients: max |rho(r) - rho(r_max)| <= 10*tolerance";
        double ref = rep.residual.back();
        rep.pass = true;
        for (double rho : rep.residual)
            if (std::abs(rho - ref) > slack) rep.pass = false;
    } else {
        rep.criterion = "moving coefficients: |rho|/T_f non-increasing beyond the first grid "
                        "quartile (artifact convention)";
        rep.pass = true;
        std::size_t start = grid.size() / 4;
        for (std::size_t i = start + 1; i < grid.size(); ++i) {
            double prev = std::abs(rep.residual[i - 1]) / rep.T[i - 1];
            double cur = std::abs(rep.residual[i]) / rep.T[i];
            if (cur > prev + slack) rep.pass = false;
        }
    }
    return rep;
}

SmtReport smt_check(const SmtScenario& sc) {
    validate_quadrature(sc.quad);
    if (sc.samples < 2) throw std::invalid_argument("smt_check: needs at least 2 r samples");
    if (!(sc.r_min > 1.0) || !(sc.r_max > sc.r_min))
        throw std::invalid_argument("smt_check: needs 1 < r_min < r_max");
    if (!(sc.epsilon > 0)) throw std::invalid_argument("smt_check: epsilon must be positive");
    if (sc.V.nvars != sc.f.nvars() || sc.V.nvars != sc.fam.nvars)
        throw std::invalid_argument("smt_check: variable counts of V, f and the family differ");

    auto dim = projective_dimension(sc.V);
    if (!dim) throw DomainError("smt_check: V is empty");

    // the curve must actually live on V
    for (const Poly& g : sc.V.generators) {
        if (!compose_with_curve(to_moving(g), sc.f).is_zero())
            throw DomainError("smt_check: V is inconsistent with the curve; generator '" +
                              poly_to_string(g, default_var_names(sc.V.nvars)) +
                              "' does not vanish on f");
    }

    std::vector<ExpPoly> composed;
    for (const auto& e : sc.fam.entries) {
        ExpPoly c = compose_with_curve(e.poly, sc.f);
        if (c.is_zero())
            throw DomainError("smt_check: degenerate scenario, hypersurface '" + e.name +
                              "' composes to zero on the curve");
        composed.push_back(std::move(c));
    }

    SmtReport rep;
    rep.n_f = *dim;
    rep.delta_degree = variety_degree(sc.V);
    DistributiveReport delta = distributive_constant(sc.V, sc.fam, sc.sampling);
    rep.delta_f = delta.delta;
    rep.delta_stable = delta.stable;

    int q = sc.fam.size();
    double factor = q - rep.delta_f.get_d() * (rep.n_f + 1) - sc.epsilon;

    double ratio = std::pow(sc.r_max / sc.r_min, 1.0 / (sc.samples - 1));
    rep.m_per_hypersurface.assign(q, {});
    rep.N_per_hypersurface.assign(q, {});
    double r = sc.r_min;
    for (int j = 0; j < sc.samples; ++j, r *= ratio) {
        if (j == sc.samples - 1) r = sc.r_max;
        rep.r_grid.push_back(r);
        double T = characteristic_T(sc.f, r, sc.quad);
        rep.T.push_back(T);
        double rhs = 0.0;
        for (int i = 0; i < q; ++i) {
            double N = counting_N(composed[i], r);
            double m = proximity_m(sc.f, sc.fam.entries[i].degree, composed[i], r, sc.quad);
            rep.N_per_hypersurface[i].push_back(N);
            rep.m_per_hypersurface[i].push_back(m);
            rhs += N / sc.fam.entries[i].degree;
        }
        double lhs = factor * T;
        rep.lhs.push_back(lhs);
        rep.rhs.push_back(rhs);
        rep.margin.push_back(rhs - lhs);
    }
    int holding = 0;
    for (double m : rep.margin)
        if (m > 0) ++holding;
    rep.fraction_holding = static_cast<double>(holding) / sc.samples;
    return rep;
}

Int truncation_bound(int q, const Rational& epsilon) {
    if (q < 1) throw std::invalid_argument("truncation_bound: needs q >= 1");
    if (!(epsilon > 0) || !(epsilon < 1))
        throw DomainError("truncation_bound: epsilon must lie in (0,1)");

    Rational base = epsilon + 1;
    for (mpfr_prec_t prec = 128; prec <= (1 << 14); prec *= 2) {
        mpfr_t b_lo, b_hi, t, u, lo, hi;
        mpfr_inits2(prec, b_lo, b_hi, t, u, lo, hi, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_q(b_lo, base.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(b_hi, base.get_mpq_t(), MPFR_RNDU);

        // bounds for q / log^2(1+eps)
        mpfr_log(t, b_lo, MPFR_RNDD);
        mpfr_sqr(t, t, MPFR_RNDD); // lower bound of log^2
        mpfr_log(u, b_hi, MPFR_RNDU);
        mpfr_sqr(u, u, MPFR_RNDU); // upper bound of log^2
        mpfr_ui_div(lo, static_cast<unsigned long>(q), u, MPFR_RNDD);
        mpfr_ui_div(hi, static_cast<unsigned long>(q), t, MPFR_RNDU);
        mpfr_floor(lo, lo);
        mpfr_floor(hi, hi);
        long e_lo = mpfr_get_si(lo, MPFR_RNDN);
        long e_hi = mpfr_get_si(hi, MPFR_RNDN);

        Int result;
        bool value_ok = false;
        if (e_lo == e_hi) {
            unsigned long e = static_cast<unsigned long>(e_lo) + 1;
            mpfr_pow_ui(lo, b_lo, e, MPFR_RNDD);
            mpfr_pow_ui(hi, b_hi, e, MPFR_RNDU);
            mpfr_floor(lo, lo);
            mpfr_floor(hi, hi);
            if (mpfr_cmp(lo, hi) == 0) {
                mpfr_get_z(result.get_mpz_t(), lo, MPFR_RNDN);
                value_ok = true;
            }
        }
        mpfr_clears(b_lo, b_hi, t, u, lo, hi, static_cast<mpfr_ptr>(nullptr));
        if (value_ok) return result;
    }
    throw BudgetError("truncation_bound: directed-rounding bounds did not converge");
}

} // namespace smtlab
