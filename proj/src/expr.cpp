#include "ncdisc/expr.hpp"

#include <cctype>
#include <optional>

#include "ncdisc/errors.hpp"

namespace ncdisc {

namespace {

constexpr unsigned kMaxExponent = 100000;

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool match(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " (offset " + std::to_string(pos) + ")");
    }
    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("expected digits");
        return text.substr(start, pos - start);
    }
    unsigned exponent() {
        std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        unsigned long e = std::stoul(d);
        if (e > kMaxExponent) fail("exponent too large");
        return static_cast<unsigned>(e);
    }
    Rational rational() {
        std::string num = digits();
        Rational r = parse_rational(num);
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::string den = digits();
            Rational d = parse_rational(den);
            if (d == 0) fail("zero denominator");
            r /= d;
        }
        return r;
    }
    // letter already peeked; returns (letter, optional immediate index)
    std::pair<char, std::optional<long>> symbol() {
        skip_ws();
        char letter = text[pos++];
        std::optional<long> index;
        size_t start = pos;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos > start) {
            std::string d = text.substr(start, pos - start);
            if (d.size() > 6) fail("symbol index too large");
            index = std::stol(d);
        }
        return {letter, index};
    }
};

template <typename Ev>
typename Ev::Value parse_expr(Lexer& lx, const Ev& ev);

template <typename Ev>
typename Ev::Value parse_atom(Lexer& lx, const Ev& ev) {
    if (lx.eof()) lx.fail("unexpected end of input");
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
        return ev.constant(lx.rational());
    if (c == '(') {
        lx.match('(');
        auto v = parse_expr(lx, ev);
        if (!lx.match(')')) lx.fail("expected ')'");
        return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [letter, index] = lx.symbol();
        return ev.symbol(letter, index, lx);
    }
    lx.fail(std::string("unexpected character '") + c + "'");
}

template <typename Ev>
typename Ev::Value parse_factor(Lexer& lx, const Ev& ev) {
    auto v = parse_atom(lx, ev);
    if (lx.match('^')) return ev.power(v, lx.exponent());
    return v;
}

template <typename Ev>
typename Ev::Value parse_term(Lexer& lx, const Ev& ev) {
    auto v = parse_factor(lx, ev);
    while (lx.match('*')) v = v * parse_factor(lx, ev);
    return v;
}

template <typename Ev>
typename Ev::Value parse_expr(Lexer& lx, const Ev& ev) {
    bool negate = lx.match('-');
    auto v = parse_term(lx, ev);
    if (negate) v = -v;
    for (;;) {
        if (lx.match('+'))
            v = v + parse_term(lx, ev);
        else if (lx.match('-'))
            v = v - parse_term(lx, ev);
        else
            break;
    }
    return v;
}

template <typename Ev>
typename Ev::Value parse_full(const std::string& text, const Ev& ev) {
    Lexer lx(text);
    auto v = parse_expr(lx, ev);
    if (!lx.eof())
        lx.fail(std::string("trailing input starting at '") + lx.peek() +
                "'");
    return v;
}

struct NCEval {
    using Value = NCPoly;
    AlgebraSpecPtr spec;

    Value constant(const Rational& r) const {
        return NCPoly::constant(spec,
                                Coefficient::from_rational(spec->field(), r));
    }
    Value symbol(char letter, std::optional<long> index, Lexer& lx) const {
        if (letter == 'z' && !index)
            return NCPoly::constant(spec, Coefficient::zeta(spec->field()));
        if (letter != 'x')
            lx.fail(std::string("unknown symbol '") + letter +
                    "' in a generator expression");
        if (!index) lx.fail("generator symbol needs an index, e.g. x1");
        if (*index < 1 || *index > spec->gen_count())
            lx.fail("generator index " + std::to_string(*index) +
                    " is out of range 1.." +
                    std::to_string(spec->gen_count()));
        return NCPoly::generator(spec, static_cast<int>(*index - 1));
    }
    Value power(const Value& v, unsigned e) const { return pow(v, e); }
};

struct CommEval {
    using Value = CommPoly;
    int var_count;
    FieldPtr field;

    Value constant(const Rational& r) const {
        return CommPoly::constant(var_count,
                                   Coefficient::from_rational(field, r));
    }
    Value symbol(char letter, std::optional<long> index, Lexer& lx) const {
        if (letter == 'z' && !index)
            return CommPoly::constant(var_count, Coefficient::zeta(field));
        if (letter != 'z')
            lx.fail(std::string("unknown symbol '") + letter +
                    "' in a central expression");
        if (*index < 1 || *index > var_count)
            lx.fail("variable index " + std::to_string(*index) +
                    " is out of range 1.." + std::to_string(var_count));
        return CommPoly::variable(var_count, field,
                                  static_cast<int>(*index - 1));
    }
    Value power(const Value& v, unsigned e) const { return pow(v, e); }
};

struct CoeffEval {
    using Value = Coefficient;
    FieldPtr field;

    Value constant(const Rational& r) const {
        return Coefficient::from_rational(field, r);
    }
    Value symbol(char letter, std::optional<long> index, Lexer& lx) const {
        if (letter == 'z' && !index) return Coefficient::zeta(field);
        lx.fail("only rational numbers and the field generator z are "
                "allowed here");
    }
    Value power(const Value& v, unsigned e) const {
        return v.pow(static_cast<long>(e));
    }
};

} // namespace

NCPoly parse_ncpoly(const std::string& text, const AlgebraSpecPtr& spec) {
    return parse_full(text, NCEval{spec});
}

CommPoly parse_commpoly(const std::string& text, int var_count,
                        const FieldPtr& field) {
    return parse_full(text, CommEval{var_count, field});
}

Coefficient parse_coefficient(const std::string& text, const FieldPtr& field) {
    return parse_full(text, CoeffEval{field});
}

} // namespace ncdisc
