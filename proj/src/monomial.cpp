#include "smtlab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace smtlab {

Ordering grevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw std::invalid_argument("grevlex_compare: exponent length mismatch");
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? Ordering::LESS : Ordering::GREATER;
    for (int i = static_cast<int>(a.e.size()) - 1; i >= 0; --i) {
        int d = a.e[i] - b.e[i];
        if (d != 0) return d < 0 ? Ordering::GREATER : Ordering::LESS;
    }
    return Ordering::EQUAL;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw std::invalid_argument("divides: exponent length mismatch");
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw std::invalid_argument("monomial mul: exponent length mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

Monomial div(const Monomial& a, const Monomial& b) {
    if (!divides(b, a)) throw std::invalid_argument("monomial div: not divisible");
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
        throw std::invalid_argument("monomial lcm: exponent length mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

namespace {

void enumerate(int nvars, int pos, int remaining, std::vector<int>& cur,
               std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[pos] = k;
        enumerate(nvars, pos + 1, remaining - k, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int u) {
    if (nvars <= 0) throw std::invalid_argument("monomials_of_degree: nvars must be positive");
    if (u < 0) return {};
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, 0, u, cur, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.at(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

} // namespace smtlab
