#include "smtlab/rational.hpp"

#include <stdexcept>

namespace smtlab {

Rational rational_from_string(const std::string& text) {
    std::string t;
    t.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    r.canonicalize();
    return r;
}

Rational pow_rational(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw std::invalid_argument("0 raised to negative power");
        return Rational(0);
    }
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), k);
    Rational out;
    if (invert) {
        out = Rational(den, num);
    } else {
        out = Rational(num, den);
    }
    out.canonicalize();
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace smtlab
