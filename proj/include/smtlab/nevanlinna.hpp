#pragma once

#include "smtlab/position.hpp"
#include "smtlab/roots.hpp"

#include <functional>
#include <optional>

namespace smtlab {

// One coordinate function f_i(z) = p(z) * exp(q(z)).
struct CurveComponent {
    UPoly p;
    UPoly q;
};

// Entire curve into P^N with polynomial-times-exponential coordinates.
// Construction verifies the representation is reduced: exp never
// vanishes, so the common zeros of the vector are the common roots of the
// p_i, and reduced means gcd over the nonzero p_i is constant.
struct CurveSpec {
    std::vector<CurveComponent> components;
    bool reduced = true;

    int nvars() const { return static_cast<int>(components.size()); }
};

CurveSpec make_curve(std::vector<CurveComponent> components);

// Canonical sum (1/den(z)) * sum_k coeff_k(z) exp(expo_k(z)): terms merged
// on equal exponent polynomials, zero coefficients dropped. Exponent
// polynomials with rational coefficients keep structural zero detection
// sound (exp of a nonzero rational constant is never 1).
struct ExpTerm {
    UPoly coeff;
    UPoly expo;
};

struct ExpPoly {
    std::vector<ExpTerm> terms; // sorted by exponent polynomial
    UPoly den{Rational(1)};     // monic

    bool is_zero() const { return terms.empty(); }
    bool single_exponential() const { return terms.size() <= 1; }
};

ExpPoly make_exppoly(std::vector<ExpTerm> terms, UPoly den);

// Q(z)(f(z)) expanded and merged; identically-zero output signals
// algebraic degeneracy of the curve for Q.
ExpPoly compose_with_curve(const MovingPoly& Q, const CurveSpec& f);

// log |g(w)|, overflow-safe (largest exponential factored out); -inf at
// zeros, +inf at denominator zeros.
double exppoly_log_abs(const ExpPoly& g, const std::complex<double>& w);

// log of the Euclidean norm of the curve vector at w.
double log_curve_norm(const CurveSpec& f, const std::complex<double>& w);

struct QuadratureConfig;

// Circle average of log|g| on S(r). Polynomial-type compositions (a single
// exponential term) evaluate exactly: Jensen's formula for the coefficient
// and denominator plus the mean value of the harmonic exponent. Genuinely
// exponential sums integrate the numerator numerically and subtract the
// denominator's Jensen average.
double exppoly_log_average(const ExpPoly& g, double r, const QuadratureConfig& cfg);

struct QuadratureConfig {
    int initial_nodes = 64;
    double tolerance = 1e-9;
    int max_doublings = 16;
};

// Nevanlinna characteristic T_f(r), normalized so T_f(1) = 0: circle
// averages of log||f|| by trapezoidal quadrature with node doubling.
double characteristic_T(const CurveSpec& f, double r, const QuadratureConfig& cfg);

// Proximity m_f(r,Q), also normalized at the base radius 1. If a zero of
// Q(f) or a coefficient pole lies on the integration circle, the radius is
// perturbed by an ulp-scale step once.
double proximity_m(const CurveSpec& f, const MovingPoly& Q, double r,
                   const QuadratureConfig& cfg);
double proximity_m(const CurveSpec& f, int hypersurface_degree, const ExpPoly& composed, double r,
                   const QuadratureConfig& cfg);

// Number of zeros of the numerator of g in |z| <= t by the argument
// principle (winding number of the boundary image); the winding must land
// within 1e-3 of an integer, after at most one radius perturbation.
int winding_zero_count(const ExpPoly& g, double t);

// Counting function N(r) = integral_1^r n(t)/t dt. Pure polynomial-type
// compositions (a single exponential term) use exact root isolation with
// multiplicities, truncated at level M when given. Genuinely exponential
// compositions use argument-principle counts with the jump radii refined
// by bisection; truncation is unavailable there.
double counting_N(const ExpPoly& g, double r, std::optional<int> M = std::nullopt);

// Characteristic of a moving coefficient: exact degree-and-Jensen formula
// max(J_num(r), J_den(r)) - max(J_num(1), J_den(1)) with
// J_h(r) = log|lc(h)| + sum_roots log max(r, |root|).
double ratfun_characteristic(const RationalFunction& a, double r);

struct FmtReport {
    std::vector<double> r_grid;
    std::vector<double> T, m, N, residual;
    bool moving_coefficients = false;
    bool pass = false;
    std::string criterion; // the PASS rule applied, an artifact convention for moving Q
};

// First Main Theorem residuals rho(r) = d T_f(r) - m_f(r,Q) - N_{Q(f)}(r)
// over an increasing grid. Constant-coefficient Q passes when rho is
// constant within 10x quadrature tolerance; moving Q passes when
// |rho|/T_f is non-increasing beyond the first quartile of the grid.
FmtReport fmt_check(const CurveSpec& f, const MovingPoly& Q, const std::vector<double>& grid,
                    const QuadratureConfig& cfg);

struct SmtScenario {
    Ideal V;
    CurveSpec f;
    HypersurfaceFamily fam;
    double epsilon = 0.5;
    double r_min = 5.0;
    double r_max = 200.0;
    int samples = 40;
    SamplingConfig sampling;
    QuadratureConfig quad;
};

struct SmtReport {
    int n_f = 0;
    Int delta_degree;    // algebraic degree delta_f (scheme degree convention)
    Rational delta_f;    // distributive constant
    bool delta_stable = true;
    std::vector<double> r_grid;
    std::vector<double> T;
    std::vector<std::vector<double>> m_per_hypersurface; // [i][grid]
    std::vector<std::vector<double>> N_per_hypersurface;
    std::vector<double> lhs, rhs, margin; // margin = rhs - lhs
    double fraction_holding = 0.0;
};

// Second Main Theorem scenario check: exact pre-computations (n_f,
// delta_f, Delta_f) plus the inequality
// (q - Delta_f (n_f+1) - eps) T_f(r) <= sum (1/d_i) N_{Q_i(f)}(r)
// sampled on a geometric r-grid.
SmtReport smt_check(const SmtScenario& scenario);

// floor((1+eps)^(floor(q/log^2(1+eps)) + 1)), evaluated in MPFR with
// directed rounding at increasing precision until both floors are
// unambiguous.
Int truncation_bound(int q, const Rational& epsilon);

} // namespace smtlab
