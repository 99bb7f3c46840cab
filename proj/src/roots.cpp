#include "smtlab/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace smtlab {

namespace {

using Cplx = std::complex<double>;

Cplx eval_with_derivative(const std::vector<Cplx>& c, const Cplx& x, Cplx& dp) {
    Cplx p(0.0, 0.0);
    dp = Cplx(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * x + p;
        p = p * x + *it;
    }
    return p;
}

// Durand-Kerner on a monic square-free polynomial, then a Newton polish.
std::vector<Cplx> simple_roots(const UPoly& monic) {
    int n = up::deg(monic);
    std::vector<Cplx> c(monic.size());
    for (std::size_t i = 0; i < monic.size(); ++i) c[i] = Cplx(monic[i].get_d(), 0.0);
    if (n == 1) return {-c[0]};

    double bound = 0.0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    bound += 1.0;

    std::vector<Cplx> w(n);
    Cplx seed(0.4, 0.9);
    Cplx acc = seed;
    for (int k = 0; k < n; ++k) {
        w[k] = bound * acc;
        acc *= seed;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            Cplx dp;
            Cplx num = eval_with_derivative(c, w[k], dp);
            Cplx den(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) den *= (w[k] - w[j]);
            if (den == Cplx(0.0, 0.0)) {
                w[k] += Cplx(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            Cplx delta = num / den;
            w[k] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(w[k])));
        }
        if (worst < 1e-14) break;
    }
    for (int k = 0; k < n; ++k) {
        for (int step = 0; step < 4; ++step) {
            Cplx dp;
            Cplx p = eval_with_derivative(c, w[k], dp);
            if (std::abs(dp) == 0.0) break;
            w[k] -= p / dp;
        }
    }
    return w;
}

} // namespace

std::vector<ComplexRoot> complex_roots(const UPoly& p) {
    if (p.empty()) throw std::invalid_argument("complex_roots: zero polynomial");
    std::vector<ComplexRoot> out;
    for (const auto& [factor, mult] : up::squarefree_decomposition(p)) {
        for (const Cplx& r : simple_roots(up::monic(factor))) out.push_back({r, mult});
    }
    return out;
}

} // namespace smtlab
