#include "smtlab/replace.hpp"

#include "smtlab/errors.hpp"

#include <random>

namespace smtlab {

DimensionProfile dimension_profile(const Ideal& V, const std::vector<Poly>& ordered_family) {
    if (ordered_family.empty())
        throw std::invalid_argument("dimension_profile: empty family");
    if (!projective_dimension(V)) throw DomainError("dimension_profile: V is empty");
    int d = ordered_family.front().degree();
    for (const Poly& q : ordered_family) {
        if (q.is_zero()) throw std::invalid_argument("dimension_profile: zero family member");
        if (q.degree() != d)
            throw DomainError("dimension_profile: family degrees differ (" + std::to_string(d) +
                              " vs " + std::to_string(q.degree()) + ")");
    }
    DimensionProfile p;
    std::vector<Poly> prefix;
    for (const Poly& q : ordered_family) {
        prefix.push_back(q);
        p.dims.push_back(projective_dimension(with_extra_generators(V, prefix)));
    }
    return p;
}

Thresholds thresholds_from_profile(const DimensionProfile& p, int n) {
    if (n < 1) throw std::invalid_argument("thresholds_from_profile: needs n >= 1");
    if (p.dims.empty()) throw std::invalid_argument("thresholds_from_profile: empty profile");
    if (!p.dims[0] || *p.dims[0] != n - 1)
        throw DomainError("thresholds_from_profile: D_0 must equal n-1 (Q_0 cuts V properly)");
    Thresholds out;
    out.t.assign(n + 1, 0);
    for (int u = 1; u < n; ++u) {
        int found = -1;
        for (int s = 0; s < static_cast<int>(p.dims.size()); ++s)
            if (p.dims[s] && *p.dims[s] == n - u - 1) {
                found = s;
                break;
            }
        if (found < 0)
            throw DomainError("thresholds_from_profile: profile skips dimension " +
                              std::to_string(n - u - 1));
        out.t[u] = found;
    }
    int empty_at = -1;
    for (int s = 0; s < static_cast<int>(p.dims.size()); ++s)
        if (!p.dims[s]) {
            empty_at = s;
            break;
        }
    if (empty_at < 0)
        throw DomainError("thresholds_from_profile: profile never empties; the family does not "
                          "cut V down (extend the family)");
    out.t[n] = empty_at;
    out.l = empty_at;
    out.offset = 0;
    for (int u = 0; u < n; ++u)
        if (out.t[u] >= out.t[u + 1])
            throw DomainError("thresholds_from_profile: thresholds not strictly increasing");
    return out;
}

ReplacementResult replace_family(const Ideal& V, const std::vector<Poly>& ordered_family,
                                 std::uint64_t seed, int retry_budget) {
    if (retry_budget < 1) throw std::invalid_argument("replace_family: retry budget must be >= 1");
    DimensionProfile profile = dimension_profile(V, ordered_family);
    int n = *projective_dimension(V);
    if (n < 1)
        throw DomainError("replace_family: V must be positive-dimensional");
    Thresholds th = thresholds_from_profile(profile, n);

    std::mt19937_64 eng(seed);
    auto draw = [&](long bound) {
        return -bound + static_cast<long>(eng() % static_cast<std::uint64_t>(2 * bound + 1));
    };

    ReplacementResult result;
    result.coefficients.push_back({Rational(1)});
    result.replacements.push_back(ordered_family[0]);
    result.certificate.push_back(profile.dims[0]);

    std::vector<Poly> chosen = {ordered_family[0]};
    for (int u = 1; u <= n; ++u) {
        int span = th.t[u];
        long bound = 4;
        bool accepted = false;
        int tries = 0;
        std::optional<int> last_dim;
        while (tries < retry_budget && !accepted) {
            ++tries;
            std::vector<Rational> coeffs;
            bool all_zero = true;
            for (int j = 0; j <= span; ++j) {
                long c = draw(bound);
                if (c != 0) all_zero = false;
                coeffs.emplace_back(c);
            }
            if (all_zero) coeffs[span] = Rational(1);
            Poly candidate(V.nvars, ordered_family[0].degree());
            for (int j = 0; j <= span; ++j)
                candidate = add(candidate, scale(ordered_family[j], coeffs[j]));
            if (candidate.is_zero()) {
                bound *= 2;
                continue;
            }
            std::vector<Poly> prefix = chosen;
            prefix.push_back(candidate);
            auto dim = projective_dimension(with_extra_generators(V, prefix));
            last_dim = dim;
            if (!dim || *dim <= n - u - 1) {
                result.coefficients.push_back(std::move(coeffs));
                result.replacements.push_back(candidate);
                result.certificate.push_back(dim);
                result.retries_used.push_back(tries - 1);
                chosen.push_back(std::move(candidate));
                accepted = true;
            } else {
                bound *= 2;
            }
        }
        if (!accepted)
            throw BudgetError("replace_family: retry budget exhausted at step u = " +
                              std::to_string(u) + " (last prefix dimension " +
                              (last_dim ? std::to_string(*last_dim) : std::string("empty")) +
                              ", needed <= " + std::to_string(n - u - 1) + ")");
    }
    return result;
}

Rational delta_from_thresholds(const Thresholds& t) {
    int n = static_cast<int>(t.t.size()) - 1;
    if (n < 1) throw std::invalid_argument("delta_from_thresholds: needs n >= 1");
    Rational best(0);
    for (int s = 1; s <= n; ++s) {
        Rational r(static_cast<long>(t.t[s] - t.t[0]), static_cast<long>(s));
        r.canonicalize();
        if (s == 1 || r > best) best = r;
    }
    return best;
}

std::vector<Rational> m_sequence(const Thresholds& t) {
    int n = static_cast<int>(t.t.size()) - 1;
    Rational delta = delta_from_thresholds(t);
    std::vector<Rational> m;
    m.push_back(delta); // m_n
    for (int u = n; u >= 1; --u) {
        Rational prev = m.back();
        Rational bump = prev - delta;
        if (bump < 0) bump = 0;
        m.push_back(Rational(static_cast<long>(t.t[u] - t.t[u - 1])) + bump);
    }
    return m; // m_n, m_{n-1}, ..., m_0
}

ProductInequalityReport weighted_product_inequality(const Thresholds& t,
                                                    const std::vector<Rational>& a) {
    int n = static_cast<int>(t.t.size()) - 1;
    if (static_cast<int>(a.size()) != n)
        throw std::invalid_argument("weighted_product_inequality: expected " + std::to_string(n) +
                                    " weights");
    for (int i = 0; i < n; ++i) {
        if (a[i] < 1)
            throw std::invalid_argument("weighted_product_inequality: weights must be >= 1");
        if (i + 1 < n && a[i] < a[i + 1])
            throw std::invalid_argument("weighted_product_inequality: weights must be non-increasing");
    }
    Rational delta = delta_from_thresholds(t);
    long p = delta.get_num().get_si();
    long q = delta.get_den().get_si();

    // lhs^q vs (prod a_i)^p: order-preserving since everything is >= 1
    Rational lhs(1), prod(1);
    for (int i = 0; i < n; ++i) {
        lhs *= pow_rational(a[i], t.t[i + 1] - t.t[i]);
        prod *= a[i];
    }
    ProductInequalityReport rep;
    rep.power = q;
    rep.lhs = pow_rational(lhs, q);
    rep.rhs = pow_rational(prod, p);
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

} // namespace smtlab
