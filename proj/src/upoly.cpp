#include "smtlab/upoly.hpp"

#include <stdexcept>

namespace smtlab::up {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly constant(const Rational& c) {
    if (c == 0) return {};
    return {c};
}

UPoly z() { return {Rational(0), Rational(1)}; }

UPoly add(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly scale(const UPoly& a, const Rational& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

UPoly neg(const UPoly& a) {
    UPoly r = a;
    for (auto& x : r) x = -x;
    return r;
}

UPoly pow(const UPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("upoly pow: negative exponent");
    UPoly r = constant(Rational(1));
    UPoly base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw std::invalid_argument("upoly divrem: division by zero");
    UPoly rem = a, quot;
    int db = deg(b);
    if (deg(a) >= db) quot.assign(a.size() - b.size() + 1, Rational(0));
    while (deg(rem) >= db) {
        int k = deg(rem) - db;
        Rational c = rem.back() / b.back();
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

UPoly divexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.empty()) throw std::invalid_argument("upoly divexact: nonzero remainder");
    return q;
}

UPoly monic(const UPoly& a) {
    if (a.empty()) return a;
    UPoly r = a;
    Rational lc = r.back();
    for (auto& x : r) x /= lc;
    return r;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.empty()) {
        auto [q, r] = divrem(x, y);
        (void)q;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

UPoly derivative(const UPoly& a) {
    if (a.size() <= 1) return {};
    UPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Rational(static_cast<long>(i));
    trim(r);
    return r;
}

Rational eval(const UPoly& p, const Rational& x) {
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

std::complex<double> eval(const UPoly& p, const std::complex<double>& x) {
    std::complex<double> r(0.0, 0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + it->get_d();
    return r;
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (deg(p) <= 0) return out;
    UPoly f = monic(p);
    UPoly fp = derivative(f);
    UPoly a = gcd(f, fp);
    UPoly b = divexact(f, a);           // product of distinct roots
    UPoly c = divexact(fp, a);
    UPoly d = sub(c, derivative(b));
    int mult = 1;
    while (deg(b) > 0) {
        UPoly g = gcd(b, d);
        if (deg(g) > 0) out.emplace_back(g, mult);
        b = divexact(b, g);
        c = divexact(d, g);
        d = sub(c, derivative(b));
        ++mult;
    }
    return out;
}

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string s;
    for (int k = deg(p); k >= 0; --k) {
        const Rational& c = p[k];
        if (c == 0) continue;
        Rational ac = abs(c);
        if (s.empty()) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        bool unit = ac == 1;
        if (k == 0) {
            s += ac.get_str();
        } else {
            if (!unit) s += ac.get_str() + "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace smtlab::up
