#include "qrs/parser.hpp"

#include <cctype>
#include <sstream>

#include "qrs/errors.hpp"

namespace qrs {

// ---------------------------------------------------------------------------
// Rendering

namespace {

// exponent of u (or v) printed as a power of r (or s): multiples of 3
// become integer powers, the rest rational powers with denominator 3
void append_rs_power(std::ostringstream& os, char base, int32_t e) {
    if (e == 0)
        return;
    os << '*' << base;
    if (e % 3 == 0) {
        int32_t k = e / 3;
        if (k != 1)
            os << '^' << k;
    } else {
        os << "^(" << e << "/3)";
    }
}

// one Laurent term, sign stripped; returns the factor chain
std::string laurent_term_str(const LaurentPoly::Term& t) {
    Rational c = t.c < 0 ? Rational(-t.c) : t.c;
    std::ostringstream os;
    bool have_factor = false;
    if (numerator(c) != 1 || (t.eu == 0 && t.ev == 0)) {
        os << numerator(c).str();
        have_factor = true;
    }
    if (denominator(c) != 1) {
        if (have_factor)
            os << '*';
        os << denominator(c).str() << "^-1";
        have_factor = true;
    }
    std::ostringstream rest;
    append_rs_power(rest, 'r', t.eu);
    append_rs_power(rest, 's', t.ev);
    std::string rs = rest.str();
    if (!rs.empty()) {
        if (!have_factor)
            rs.erase(0, 1);  // drop the leading '*'
        os << rs;
        have_factor = true;
    }
    if (!have_factor)
        os << '1';
    return os.str();
}

bool glex_term_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    int64_t da = int64_t(a.eu) + a.ev, db = int64_t(b.eu) + b.ev;
    if (da != db)
        return da < db;
    if (a.eu != b.eu)
        return a.eu < b.eu;
    return a.ev < b.ev;
}

// sum of Laurent terms, leading term first
std::string laurent_str(const LaurentPoly& p) {
    if (p.is_zero())
        return "0";
    std::vector<LaurentPoly::Term> ts = p.terms();
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return glex_term_less(b, a);
    });
    std::ostringstream os;
    for (size_t i = 0; i < ts.size(); ++i) {
        bool neg = ts[i].c < 0;
        if (i == 0)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        os << laurent_term_str(ts[i]);
    }
    return os.str();
}

struct ScalarRender {
    bool negative = false;
    std::string body;        // rendering of |x|
    bool product_safe = true;  // can be juxtaposed with '*' without parens
};

ScalarRender render_scalar_parts(const Scalar& x) {
    ScalarRender out;
    if (x.is_zero()) {
        out.body = "0";
        return out;
    }
    LaurentPoly num = x.num();
    const LaurentPoly& den = x.den();
    // sign lives in the numerator (the denominator is monic)
    if (num.leading_term().c < 0) {
        out.negative = true;
        num = -num;
    }
    if (den.is_one() || den.is_monomial()) {
        // fold a monomial denominator into Laurent exponents
        LaurentPoly folded = num;
        if (!den.is_one()) {
            const auto& m = den.terms()[0];
            folded = num.shifted(-m.eu, -m.ev, Rational(1) / m.c);
        }
        out.body = laurent_str(folded);
        out.product_safe = folded.size() == 1;
        return out;
    }
    std::ostringstream os;
    if (!num.is_one()) {
        if (num.size() == 1) {
            os << laurent_term_str(num.terms()[0]) << '*';
        } else {
            os << '(' << laurent_str(num) << ")*";
        }
    }
    os << '(' << laurent_str(den) << ")^-1";
    out.body = os.str();
    out.product_safe = true;
    return out;
}

}  // namespace

std::string render(const Scalar& c) {
    ScalarRender r = render_scalar_parts(c);
    return r.negative ? "-" + r.body : r.body;
}

std::string render_monomial(const AlgebraSignature& sig, const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!first)
            os << '*';
        os << sig.generators()[i].name;
        if (m.exps[i] != 1)
            os << '^' << m.exps[i];
        first = false;
    }
    if (first)
        return "1";
    return os.str();
}

std::string render(const Element& x) {
    if (x.is_zero())
        return "0";
    const AlgebraSignature& sig = *x.signature();
    std::ostringstream os;
    bool first = true;
    // leading term first
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        ScalarRender sr = render_scalar_parts(c);
        if (first)
            os << (sr.negative ? "-" : "");
        else
            os << (sr.negative ? " - " : " + ");
        first = false;
        if (m.is_unit()) {
            os << sr.body;
            continue;
        }
        std::string gens = render_monomial(sig, m);
        if (sr.body == "1") {
            os << gens;
        } else if (sr.product_safe) {
            os << sr.body << '*' << gens;
        } else {
            os << '(' << sr.body << ")*" << gens;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };

struct Lexer {
    std::string_view text;
    size_t pos = 0;
    Tok tok = Tok::End;
    std::string ident;
    Integer number;

    explicit Lexer(std::string_view t) : text(t) { advance(); }

    void advance() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos >= text.size()) {
            tok = Tok::End;
            return;
        }
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            number = Integer(std::string(text.substr(start, pos - start)));
            tok = Tok::Int;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < text.size() &&
                   std::isalnum(static_cast<unsigned char>(text[pos])))
                ++pos;
            ident = std::string(text.substr(start, pos - start));
            tok = Tok::Ident;
            return;
        }
        ++pos;
        switch (c) {
            case '+': tok = Tok::Plus; return;
            case '-': tok = Tok::Minus; return;
            case '*': tok = Tok::Star; return;
            case '^': tok = Tok::Caret; return;
            case '(': tok = Tok::LParen; return;
            case ')': tok = Tok::RParen; return;
            case '/': tok = Tok::Slash; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'");
        }
    }
};

enum class AtomKind { R, S, Number, Gen, Paren };

struct Parser {
    Lexer lex;
    SigPtr sig;

    Parser(std::string_view text, SigPtr s) : lex(text), sig(std::move(s)) {}

    void expect(Tok t, const char* what) {
        if (lex.tok != t)
            throw ParseError(std::string("expected ") + what);
        lex.advance();
    }

    Element parse_expr() {
        Element acc = parse_term();
        while (lex.tok == Tok::Plus || lex.tok == Tok::Minus) {
            bool add = lex.tok == Tok::Plus;
            lex.advance();
            Element rhs = parse_term();
            acc = add ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Element parse_term() {
        Element acc = parse_factor();
        while (lex.tok == Tok::Star) {
            lex.advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Element parse_factor() {
        bool negate = false;
        if (lex.tok == Tok::Minus) {
            negate = true;
            lex.advance();
        }
        auto [value, kind] = parse_atom();
        if (lex.tok == Tok::Caret) {
            lex.advance();
            value = apply_exponent(std::move(value), kind);
        }
        return negate ? -value : value;
    }

    std::pair<Element, AtomKind> parse_atom() {
        switch (lex.tok) {
            case Tok::Int: {
                Rational q(lex.number);
                lex.advance();
                return {Element::constant(sig, Scalar(q)), AtomKind::Number};
            }
            case Tok::Ident: {
                std::string name = lex.ident;
                lex.advance();
                if (name == "r")
                    return {Element::constant(sig, Scalar::r()), AtomKind::R};
                if (name == "s")
                    return {Element::constant(sig, Scalar::s()), AtomKind::S};
                int pos = sig->index_of(name);
                if (pos < 0)
                    throw ParseError("unknown symbol: " + name);
                return {Element::generator(sig, pos), AtomKind::Gen};
            }
            case Tok::LParen: {
                lex.advance();
                Element inner = parse_expr();
                expect(Tok::RParen, "')'");
                return {std::move(inner), AtomKind::Paren};
            }
            default:
                throw ParseError("expected a generator, number, or '('");
        }
    }

    long read_int(const char* what) {
        bool neg = false;
        if (lex.tok == Tok::Minus) {
            neg = true;
            lex.advance();
        }
        if (lex.tok != Tok::Int)
            throw ParseError(std::string("expected ") + what);
        Integer n = lex.number;
        lex.advance();
        if (n > 1000000)
            throw ParseError("exponent too large");
        long v = n.convert_to<long>();
        return neg ? -v : v;
    }

    Element apply_exponent(Element base, AtomKind kind) {
        if (lex.tok == Tok::LParen) {
            // rational exponent: '(' ['-'] int ['/' int] ')'
            lex.advance();
            long num = read_int("exponent numerator");
            long den = 1;
            if (lex.tok == Tok::Slash) {
                lex.advance();
                if (lex.tok != Tok::Int)
                    throw ParseError("malformed rational exponent");
                den = lex.number.convert_to<long>();
                lex.advance();
            }
            expect(Tok::RParen, "')' after exponent");
            if (den == 1)
                return apply_int_exponent(std::move(base), kind, num);
            if (kind != AtomKind::R && kind != AtomKind::S)
                throw ParseError("rational exponents are only valid on r and s");
            if (den != 3)
                throw ParseError("malformed rational exponent: denominator must be 1 or 3");
            Rational e(num, den);
            Scalar val = kind == AtomKind::R ? Scalar::from_rs(e, Rational(0))
                                             : Scalar::from_rs(Rational(0), e);
            return Element::constant(base.signature(), val);
        }
        long n = read_int("integer exponent");
        return apply_int_exponent(std::move(base), kind, n);
    }

    Element apply_int_exponent(Element base, AtomKind kind, long n) {
        (void)kind;
        try {
            return base.pow(static_cast<int>(n));
        } catch (const AlgebraError& e) {
            throw ParseError(e.what());
        } catch (const MathError& e) {
            throw ParseError(e.what());
        }
    }
};

}  // namespace

Element parse(std::string_view text, SigPtr sig) {
    Parser p(text, std::move(sig));
    Element result = p.parse_expr();
    if (p.lex.tok != Tok::End)
        throw ParseError("trailing input after expression");
    return result;
}

Scalar parse_scalar(std::string_view text) {
    // scalar expressions are parsed over any signature; use the torus
    Element x = parse(text, AlgebraSignature::preset(Preset::Q3));
    if (!x.is_scalar())
        throw ParseError("expected a pure scalar expression");
    return x.scalar_value();
}

}  // namespace qrs
