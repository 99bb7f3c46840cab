#pragma once

#include "smtlab/errors.hpp"
#include "smtlab/monomial.hpp"
#include "smtlab/ratfun.hpp"

#include <map>
#include <string>

namespace smtlab {

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const RationalFunction& c) { return c.is_zero(); }
inline std::string coeff_str(const Rational& c) { return c.get_str(); }
inline std::string coeff_str(const RationalFunction& c) { return c.str(); }
} // namespace detail

// Sparse homogeneous polynomial: every stored term has the declared total
// degree and a nonzero coefficient. The zero polynomial keeps its degree
// tag so degree-graded addition stays total.
template <class C>
class BasicPoly {
public:
    using TermMap = std::map<Monomial, C, GrevlexGreater>;

    BasicPoly() : nvars_(1), deg_(0) {}
    BasicPoly(int num_vars, int degree) : nvars_(num_vars), deg_(degree) {
        if (num_vars <= 0) throw std::invalid_argument("polynomial needs at least one variable");
        if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    }

    int num_vars() const { return nvars_; }
    int degree() const { return deg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Adds c*m, merging with an existing term; silently drops zeros.
    void add_term(const Monomial& m, const C& c) {
        if (m.nvars() != nvars_)
            throw std::invalid_argument("term variable count mismatch");
        if (m.total_degree() != deg_)
            throw DomainError("non-homogeneous term: degree " + std::to_string(m.total_degree()) +
                              " in polynomial of degree " + std::to_string(deg_));
        if (detail::coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading monomial");
        return terms_.begin()->first;
    }
    const C& leading_coeff() const {
        if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
        return terms_.begin()->second;
    }

    bool operator==(const BasicPoly& o) const {
        return nvars_ == o.nvars_ && deg_ == o.deg_ && terms_ == o.terms_;
    }

private:
    int nvars_;
    int deg_;
    TermMap terms_;
};

using Poly = BasicPoly<Rational>;
using MovingPoly = BasicPoly<RationalFunction>;

template <class C>
BasicPoly<C> add(const BasicPoly<C>& a, const BasicPoly<C>& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomial add: variable count mismatch");
    if (a.degree() != b.degree())
        throw DomainError("polynomial add: degree mismatch (" + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()) + ")");
    BasicPoly<C> r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

template <class C>
BasicPoly<C> neg(const BasicPoly<C>& a) {
    BasicPoly<C> r(a.num_vars(), a.degree());
    for (const auto& [m, c] : a.terms()) r.add_term(m, -c);
    return r;
}

template <class C>
BasicPoly<C> sub(const BasicPoly<C>& a, const BasicPoly<C>& b) {
    return add(a, neg(b));
}

template <class C>
BasicPoly<C> mul(const BasicPoly<C>& a, const BasicPoly<C>& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("polynomial mul: variable count mismatch");
    BasicPoly<C> r(a.num_vars(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(mul(ma, mb), ca * cb);
    return r;
}

template <class C, class S>
BasicPoly<C> scale(const BasicPoly<C>& a, const S& s) {
    BasicPoly<C> r(a.num_vars(), a.degree());
    for (const auto& [m, c] : a.terms()) r.add_term(m, c * s);
    return r;
}

// c * m as a polynomial (monomial embedding).
template <class C>
BasicPoly<C> term_poly(int nvars, const Monomial& m, const C& c) {
    BasicPoly<C> r(nvars, m.total_degree());
    r.add_term(m, c);
    return r;
}

Poly monic(const Poly& p);

// Specializes a moving polynomial at the sample z0, dropping terms whose
// coefficient vanishes there. Throws DomainError naming the offending
// coefficient when z0 is a pole.
Poly evaluate_moving(const MovingPoly& q, const Rational& z0,
                     const std::vector<std::string>& vars = {});

// A moving polynomial with constant coefficients, as a fixed one.
Poly to_fixed(const MovingPoly& q);
MovingPoly to_moving(const Poly& p);

// Text conforming to the polynomial grammar; round-trips through parse_poly.
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);
std::string poly_to_string(const MovingPoly& p, const std::vector<std::string>& vars);

std::vector<std::string> default_var_names(int nvars);

} // namespace smtlab
