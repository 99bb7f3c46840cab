#include "smtlab/poly.hpp"

namespace smtlab {

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return scale(p, Rational(1) / p.leading_coeff());
}

std::vector<std::string> default_var_names(int nvars) {
    std::vector<std::string> v;
    v.reserve(nvars);
    for (int i = 0; i < nvars; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Poly evaluate_moving(const MovingPoly& q, const Rational& z0, const std::vector<std::string>& vars) {
    Poly out(q.num_vars(), q.degree());
    for (const auto& [m, c] : q.terms()) {
        auto v = c.eval(z0);
        if (!v) {
            auto names = vars.empty() ? default_var_names(q.num_vars()) : vars;
            throw DomainError("pole at sample z = " + z0.get_str() + " in coefficient of " +
                              monomial_to_string(m, names));
        }
        out.add_term(m, *v);
    }
    return out;
}

Poly to_fixed(const MovingPoly& q) {
    Poly out(q.num_vars(), q.degree());
    for (const auto& [m, c] : q.terms()) {
        if (!c.is_constant())
            throw DomainError("polynomial has a genuinely moving coefficient where a constant one is required");
        out.add_term(m, c.constant_value());
    }
    return out;
}

MovingPoly to_moving(const Poly& p) {
    MovingPoly out(p.num_vars(), p.degree());
    for (const auto& [m, c] : p.terms()) out.add_term(m, RationalFunction(c));
    return out;
}

namespace {

// Grammar-conformant term rendering. A leading negative constant folds the
// sign into the integer; non-constant coefficients keep their sign inside
// the parentheses and always join with '+'.
struct CoeffText {
    std::string abs_text; // without sign, "" when coefficient is 1
    bool negative = false;
    bool constant_one = false;
};

CoeffText coeff_text(const Rational& c) {
    CoeffText t;
    t.negative = c < 0;
    Rational a = abs(c);
    t.constant_one = a == 1;
    t.abs_text = a.get_str();
    return t;
}

CoeffText coeff_text(const RationalFunction& c) {
    if (c.is_constant()) return coeff_text(c.constant_value());
    CoeffText t;
    t.abs_text = "(" + c.str() + ")";
    return t;
}

template <class C>
std::string render(const BasicPoly<C>& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) {
        if (p.degree() == 0) return "0";
        Monomial m = Monomial::unit(p.num_vars());
        m.e[0] = p.degree();
        return "0*" + monomial_to_string(m, vars);
    }
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        CoeffText t = coeff_text(c);
        bool unit_mono = m.total_degree() == 0;
        std::string body;
        if (unit_mono) {
            body = t.abs_text;
        } else if (t.constant_one && !(first && t.negative)) {
            body = monomial_to_string(m, vars);
        } else {
            // a bare leading "-x0" is outside the grammar; spell out -1*
            body = (t.constant_one ? "1" : t.abs_text) + "*" + monomial_to_string(m, vars);
        }
        if (first) {
            s += (t.negative ? "-" : "") + body;
            first = false;
        } else {
            s += (t.negative ? " - " : " + ") + body;
        }
    }
    return s;
}

} // namespace

std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars) {
    return render(p, vars.empty() ? default_var_names(p.num_vars()) : vars);
}

std::string poly_to_string(const MovingPoly& p, const std::vector<std::string>& vars) {
    return render(p, vars.empty() ? default_var_names(p.num_vars()) : vars);
}

} // namespace smtlab
