#include "smtlab/groebner.hpp"

#include "smtlab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace smtlab {

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
    for (const Poly& b : basis) {
        if (b.is_zero()) throw std::invalid_argument("normal_form: zero basis element");
        if (b.num_vars() != p.num_vars())
            throw std::invalid_argument("normal_form: variable count mismatch");
    }
    Poly rem(p.num_vars(), p.degree());
    Poly work = p;
    while (!work.is_zero()) {
        Monomial m = work.leading_monomial();
        Rational c = work.leading_coeff();
        const Poly* divisor = nullptr;
        for (const Poly& b : basis) {
            if (divides(b.leading_monomial(), m)) {
                divisor = &b;
                break;
            }
        }
        if (divisor) {
            Monomial q = div(m, divisor->leading_monomial());
            Rational f(c / divisor->leading_coeff());
            work = sub(work, mul(term_poly(p.num_vars(), q, f), *divisor));
        } else {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Rational cf(Rational(1) / f.leading_coeff());
    Rational cg(Rational(1) / g.leading_coeff());
    Poly a = mul(term_poly(f.num_vars(), div(l, f.leading_monomial()), cf), f);
    Poly b = mul(term_poly(g.num_vars(), div(l, g.leading_monomial()), cg), g);
    return sub(a, b);
}

namespace {

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

struct PairKey {
    int lcm_deg;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens) {
    std::vector<Poly> basis;
    for (const Poly& g : gens)
        if (!g.is_zero()) basis.push_back(monic(g));
    if (basis.empty()) return {};
    int nvars = basis.front().num_vars();
    for (const Poly& g : basis)
        if (g.num_vars() != nvars)
            throw std::invalid_argument("buchberger: variable count mismatch");

    std::set<PairKey> pending;
    std::set<std::pair<int, int>> pending_ix;
    auto push_pairs_for = [&](int n) {
        for (int i = 0; i < n; ++i) {
            Monomial l = lcm(basis[i].leading_monomial(), basis[n].leading_monomial());
            pending.insert({l.total_degree(), i, n});
            pending_ix.insert({i, n});
        }
    };
    for (int n = 1; n < static_cast<int>(basis.size()); ++n) push_pairs_for(n);

    while (!pending.empty()) {
        PairKey k = *pending.begin();
        pending.erase(pending.begin());
        pending_ix.erase({k.i, k.j});
        const Monomial& lmi = basis[k.i].leading_monomial();
        const Monomial& lmj = basis[k.j].leading_monomial();
        if (coprime(lmi, lmj)) continue; // Buchberger's first criterion
        Monomial l = lcm(lmi, lmj);
        // chain criterion: some other leading monomial divides the lcm and
        // both companion pairs were already handled
        bool skip = false;
        for (int t = 0; t < static_cast<int>(basis.size()); ++t) {
            if (t == k.i || t == k.j) continue;
            if (!divides(basis[t].leading_monomial(), l)) continue;
            auto p1 = std::minmax(t, k.i);
            auto p2 = std::minmax(t, k.j);
            if (!pending_ix.count({p1.first, p1.second}) &&
                !pending_ix.count({p2.first, p2.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        Poly r = normal_form(s_polynomial(basis[k.i], basis[k.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(monic(r));
            push_pairs_for(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop generators whose leading monomial another one divides
    std::vector<Poly> minimal;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
            if (i == j) continue;
            const Monomial& lmi = basis[i].leading_monomial();
            const Monomial& lmj = basis[j].leading_monomial();
            if (divides(lmj, lmi) && !(lmi == lmj && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce each generator against the others
    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
        return grevlex_compare(a.leading_monomial(), b.leading_monomial()) == Ordering::GREATER;
    });
    std::vector<Poly> reduced = minimal;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = others.empty() ? reduced[i] : monic(normal_form(reduced[i], others));
    }
    return {reduced};
}

MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    if (gb.generators.empty()) return {1, {}};
    MonomialIdeal out;
    out.nvars = gb.generators.front().num_vars();
    std::vector<Monomial> lms;
    for (const Poly& g : gb.generators) lms.push_back(g.leading_monomial());
    out.minimal_generators = minimalize(std::move(lms));
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return grevlex_compare(a, b) == Ordering::LESS;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool dominated = false;
        for (const Monomial& g : out)
            if (divides(g, m)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(m);
    }
    return out;
}

namespace {

using IntPoly = std::vector<Int>; // coefficients of t^k

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

IntPoly ip_shift(const IntPoly& a, int k) {
    if (a.empty()) return {};
    IntPoly r(a.size() + k, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

// Numerator of the Hilbert series of R/(gens) over (1-t)^nvars, by the
// colon recursion K(I + (m)) = K(I) - t^deg(m) * K(I : m).
IntPoly series_numerator(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {Int(1)};
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    const Monomial& m = gens.back();
    std::vector<Monomial> colon;
    colon.reserve(rest.size());
    for (const Monomial& g : rest) {
        Monomial q = g;
        for (std::size_t i = 0; i < q.e.size(); ++i) q.e[i] = std::max(g.e[i] - m.e[i], 0);
        colon.push_back(q);
    }
    IntPoly a = series_numerator(rest);
    IntPoly b = series_numerator(minimalize(std::move(colon)));
    return ip_sub(a, ip_shift(b, m.total_degree()));
}

Int ip_eval_one(const IntPoly& p) {
    Int s(0);
    for (const Int& c : p) s += c;
    return s;
}

// exact division by (1 - t); requires p(1) == 0
IntPoly ip_div_one_minus_t(const IntPoly& p) {
    IntPoly q(p.size() ? p.size() - 1 : 0, Int(0));
    Int carry(0);
    // p = (1-t) q  =>  q_k = p_k + q_{k-1}
    for (std::size_t k = 0; k < q.size(); ++k) {
        carry = (k == 0 ? p[0] : p[k] + carry);
        q[k] = carry;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return q;
}

int combinatorial_affine_dim(const std::vector<Monomial>& gens, int nvars) {
    // largest variable subset S with no generator supported inside S
    if (gens.empty()) return nvars;
    for (const Monomial& g : gens)
        if (g.total_degree() == 0) return -1; // unit ideal
    int best = 0;
    for (unsigned mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (const Monomial& g : gens) {
            bool inside = true;
            for (int v = 0; v < nvars; ++v)
                if (g.e[v] > 0 && !(mask & (1u << v))) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

} // namespace

Int MonomialHilbertData::hf(int u) const {
    if (u < 0) return Int(0);
    Int total(0);
    for (std::size_t j = 0; j < numerator.size(); ++j) {
        if (static_cast<int>(j) > u) break;
        total += numerator[j] * binomial(u - static_cast<int>(j) + nvars - 1, nvars - 1);
    }
    return total;
}

MonomialHilbertData monomial_hilbert_data(const MonomialIdeal& m) {
    if (m.nvars <= 0) throw std::invalid_argument("monomial_hilbert_data: bad variable count");
    if (m.nvars > 24) throw std::invalid_argument("monomial_hilbert_data: too many variables");
    MonomialHilbertData out;
    out.nvars = m.nvars;
    std::vector<Monomial> gens = minimalize(m.minimal_generators);
    out.numerator = series_numerator(gens);
    out.affine_dim = combinatorial_affine_dim(gens, m.nvars);

    IntPoly reduced = out.numerator;
    int cancelled = 0;
    while (!reduced.empty() && ip_eval_one(reduced) == 0) {
        reduced = ip_div_one_minus_t(reduced);
        ++cancelled;
    }
    out.degree = reduced.empty() ? Int(0) : ip_eval_one(reduced);
    if (out.affine_dim >= 0 && out.affine_dim != m.nvars - cancelled)
        throw InternalError("monomial Hilbert data: series pole order disagrees with "
                            "combinatorial dimension");
    return out;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& m, int u) {
    std::vector<Monomial> out;
    for (const Monomial& cand : monomials_of_degree(m.nvars, u)) {
        bool in_ideal = false;
        for (const Monomial& g : m.minimal_generators)
            if (divides(g, cand)) {
                in_ideal = true;
                break;
            }
        if (!in_ideal) out.push_back(cand);
    }
    return out;
}

} // namespace smtlab
