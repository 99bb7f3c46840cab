#include "smtlab/parse.hpp"

#include <cctype>
#include <optional>

namespace smtlab {

namespace {

enum class Tok { INT, NAME, PLUS, MINUS, STAR, SLASH, CARET, LPAREN, RPAREN, END };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            cur_ = {Tok::END, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            cur_ = {Tok::INT, s_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            cur_ = {Tok::NAME, s_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
        case '+': cur_ = {Tok::PLUS, "+", start}; return;
        case '-': cur_ = {Tok::MINUS, "-", start}; return;
        case '*': cur_ = {Tok::STAR, "*", start}; return;
        case '/': cur_ = {Tok::SLASH, "/", start}; return;
        case '^': cur_ = {Tok::CARET, "^", start}; return;
        case '(': cur_ = {Tok::LPAREN, "(", start}; return;
        case ')': cur_ = {Tok::RPAREN, ")", start}; return;
        default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_{Tok::END, "", 0};
};

Int int_from(const Token& t) { return Int(t.text); }

int uint_from(const Token& t, const char* what) {
    Int v = int_from(t);
    if (!v.fits_sint_p()) throw ParseError(std::string(what) + " out of range", t.pos);
    return static_cast<int>(v.get_si());
}

// --- rational functions in z ---------------------------------------------

class RatFunParser {
public:
    explicit RatFunParser(Lexer& lex) : lex_(lex) {}

    RationalFunction parse_sum() {
        bool neg = false;
        if (lex_.peek().kind == Tok::MINUS) {
            lex_.take();
            neg = true;
        }
        RationalFunction acc = parse_term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::PLUS || lex_.peek().kind == Tok::MINUS) {
            bool minus = lex_.take().kind == Tok::MINUS;
            RationalFunction rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

private:
    RationalFunction parse_term() {
        RationalFunction acc = parse_factor();
        while (lex_.peek().kind == Tok::STAR || lex_.peek().kind == Tok::SLASH) {
            Token op = lex_.take();
            RationalFunction rhs = parse_factor();
            if (op.kind == Tok::SLASH) {
                if (rhs.is_zero())
                    throw ParseError("zero denominator in coefficient", op.pos);
                acc = acc / rhs;
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    RationalFunction parse_factor() {
        RationalFunction base = parse_atom();
        if (lex_.peek().kind == Tok::CARET) {
            Token caret = lex_.take();
            if (lex_.peek().kind != Tok::INT)
                throw ParseError("expected exponent after '^'", caret.pos + 1);
            int e = uint_from(lex_.take(), "exponent");
            RationalFunction acc{Rational(1)};
            for (int k = 0; k < e; ++k) acc = acc * base;
            return acc;
        }
        return base;
    }

    RationalFunction parse_atom() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::INT:
            lex_.take();
            return RationalFunction(Rational(int_from(t)));
        case Tok::NAME:
            lex_.take();
            if (t.text != "z")
                throw ParseError("unknown name '" + t.text + "' in coefficient (only z is allowed)",
                                 t.pos);
            return RationalFunction::variable();
        case Tok::LPAREN: {
            lex_.take();
            RationalFunction inner = parse_sum();
            if (lex_.peek().kind != Tok::RPAREN)
                throw ParseError("expected ')'", lex_.peek().pos);
            lex_.take();
            return inner;
        }
        default: throw ParseError("expected integer, 'z' or '(' in coefficient", t.pos);
        }
    }

    Lexer& lex_;
};

// --- outer polynomial grammar ---------------------------------------------

class PolyParser {
public:
    PolyParser(Lexer& lex, const std::vector<std::string>& vars) : lex_(lex), vars_(vars) {}

    MovingPoly parse() {
        bool neg = false;
        if (lex_.peek().kind == Tok::MINUS) {
            lex_.take();
            neg = true;
        }
        std::vector<std::pair<Monomial, RationalFunction>> parsed;
        parsed.push_back(parse_term(neg));
        while (lex_.peek().kind == Tok::PLUS || lex_.peek().kind == Tok::MINUS) {
            bool minus = lex_.take().kind == Tok::MINUS;
            parsed.push_back(parse_term(minus));
        }
        if (lex_.peek().kind != Tok::END)
            throw ParseError("trailing input after polynomial", lex_.peek().pos);

        int deg = parsed.front().first.total_degree();
        for (const auto& [m, c] : parsed) {
            if (m.total_degree() != deg)
                throw ParseError("non-homogeneous polynomial: terms of degree " +
                                     std::to_string(deg) + " and " +
                                     std::to_string(m.total_degree()),
                                 0);
        }
        MovingPoly p(static_cast<int>(vars_.size()), deg);
        for (const auto& [m, c] : parsed) p.add_term(m, c);
        return p;
    }

private:
    std::pair<Monomial, RationalFunction> parse_term(bool negate) {
        RationalFunction coeff{Rational(1)};
        Monomial mono = Monomial::unit(static_cast<int>(vars_.size()));
        Token t = lex_.peek();
        bool have_factor = false;
        if (t.kind == Tok::INT) {
            lex_.take();
            Int num = int_from(t);
            Rational c(num);
            if (lex_.peek().kind == Tok::SLASH) {
                Token slash = lex_.take();
                if (lex_.peek().kind != Tok::INT)
                    throw ParseError("expected denominator after '/'", slash.pos + 1);
                Token d = lex_.take();
                Int den = int_from(d);
                if (den == 0) throw ParseError("zero denominator in coefficient", d.pos);
                c = Rational(num, den);
                c.canonicalize();
            }
            coeff = RationalFunction(c);
        } else if (t.kind == Tok::LPAREN) {
            lex_.take();
            RatFunParser rp(lex_);
            coeff = rp.parse_sum();
            if (lex_.peek().kind != Tok::RPAREN)
                throw ParseError("expected ')' after coefficient", lex_.peek().pos);
            lex_.take();
        } else if (t.kind == Tok::NAME) {
            apply_factor(mono);
            have_factor = true;
        } else {
            throw ParseError("expected coefficient or variable", t.pos);
        }
        (void)have_factor;
        while (lex_.peek().kind == Tok::STAR) {
            Token star = lex_.take();
            if (lex_.peek().kind != Tok::NAME)
                throw ParseError("expected variable after '*'", star.pos + 1);
            apply_factor(mono);
        }
        if (negate) coeff = -coeff;
        return {mono, coeff};
    }

    void apply_factor(Monomial& mono) {
        Token name = lex_.take();
        int idx = -1;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name.text) {
                idx = static_cast<int>(i);
                break;
            }
        if (idx < 0) throw ParseError("unknown variable '" + name.text + "'", name.pos);
        int e = 1;
        if (lex_.peek().kind == Tok::CARET) {
            Token caret = lex_.take();
            if (lex_.peek().kind != Tok::INT)
                throw ParseError("expected exponent after '^'", caret.pos + 1);
            e = uint_from(lex_.take(), "exponent");
        }
        mono.e[idx] += e;
    }

    Lexer& lex_;
    const std::vector<std::string>& vars_;
};

} // namespace

MovingPoly parse_poly(const std::string& text, const std::vector<std::string>& variables) {
    if (variables.empty()) throw std::invalid_argument("parse_poly: no variables declared");
    for (std::size_t i = 0; i < variables.size(); ++i)
        for (std::size_t j = i + 1; j < variables.size(); ++j)
            if (variables[i] == variables[j])
                throw std::invalid_argument("parse_poly: duplicate variable '" + variables[i] + "'");
    Lexer lex(text);
    PolyParser parser(lex, variables);
    return parser.parse();
}

Poly parse_fixed_poly(const std::string& text, const std::vector<std::string>& variables) {
    return to_fixed(parse_poly(text, variables));
}

RationalFunction parse_ratfun(const std::string& text) {
    Lexer lex(text);
    RatFunParser rp(lex);
    RationalFunction r = rp.parse_sum();
    if (lex.peek().kind != Tok::END)
        throw ParseError("trailing input after rational function", lex.peek().pos);
    return r;
}

} // namespace smtlab
