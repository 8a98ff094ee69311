#include "mixsegre/document.hpp"

#include "mixsegre/error.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace mixsegre {

namespace {

enum class Tok { ident, integer, symbol, newline, section, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        col += n;
    };
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            out.push_back({Tok::newline, "\n", line, col});
            ++i;
            ++line;
            col = 1;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
            out.push_back({Tok::ident, std::string(text.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::integer, std::string(text.substr(i, j - i)), line, col});
            advance(j - i);
        } else if (ch == '[') {
            const std::size_t close = text.find(']', i);
            if (close == std::string_view::npos || text.substr(i, close - i).find('\n') != std::string_view::npos)
                throw ParseError(line, col, "unterminated section header");
            out.push_back({Tok::section, std::string(text.substr(i + 1, close - i - 1)), line, col});
            advance(close - i + 1);
        } else if (std::string_view(",;=+-*/^()").find(ch) != std::string_view::npos) {
            out.push_back({Tok::symbol, std::string(1, ch), line, col});
            advance(1);
        } else {
            throw ParseError(line, col, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    InputDocument document() {
        InputDocument doc;
        for (;;) {
            skip_newlines();
            const Token& t = peek();
            if (t.kind == Tok::end) return doc;
            if (t.kind == Tok::section) {
                next();
                if (t.text == "surface") {
                    if (doc.surface) fail(t, "duplicate [surface] section");
                    doc.surface = surface();
                } else if (t.text == "options") {
                    options(doc.options);
                } else {
                    fail(t, "unknown section [" + t.text + "]");
                }
                continue;
            }
            if (t.kind != Tok::ident) fail(t, "expected a statement");
            if (t.text == "ring") {
                next();
                if (doc.ring) fail(t, "duplicate ring declaration");
                doc.ring = ring();
            } else if (t.text == "ambient") {
                next();
                require_ring(doc, t);
                if (doc.ambient) fail(t, "duplicate ambient declaration");
                expect("=");
                doc.ambient = Ideal(doc.ring, polys(doc.ring));
                expect(";");
            } else if (t.text == "ideal") {
                next();
                require_ring(doc, t);
                const Token name = next();
                if (name.kind != Tok::ident) fail(name, "expected an ideal name");
                for (const auto& [n, _] : doc.ideals)
                    if (n == name.text) fail(name, "duplicate ideal name '" + name.text + "'");
                expect("=");
                doc.ideals.emplace_back(name.text, Ideal(doc.ring, polys(doc.ring)));
                expect(";");
            } else {
                fail(t, "unknown statement '" + t.text + "'");
            }
        }
    }

    Polynomial polynomial_only(const Ring& ring) {
        skip_newlines();
        Polynomial p = expr(ring);
        skip_newlines();
        if (peek().kind != Tok::end) fail(peek(), "trailing input after polynomial");
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    [[noreturn]] static void fail(const Token& t, const std::string& what) { throw ParseError(t.line, t.column, what); }

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool accept(const char* symbol) {
        if (peek().kind == Tok::symbol && peek().text == symbol) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const char* symbol) {
        skip_newlines();
        if (!accept(symbol)) fail(peek(), std::string("expected '") + symbol + "'");
    }
    void skip_newlines() {
        while (peek().kind == Tok::newline) ++pos_;
    }
    void require_ring(const InputDocument& doc, const Token& at) {
        if (!doc.ring) fail(at, "'" + at.text + "' before the ring declaration");
    }

    Ring ring() {
        std::vector<std::string> names;
        do {
            skip_newlines();
            const Token t = next();
            if (t.kind != Tok::ident) fail(t, "expected a variable name");
            for (const auto& n : names)
                if (n == t.text) fail(t, "duplicate variable '" + t.text + "'");
            names.push_back(t.text);
            skip_newlines();
        } while (accept(","));
        expect(";");
        try {
            return PolynomialRing::make(std::move(names));
        } catch (const Error& e) {
            fail(peek(), e.what());
        }
    }

    std::vector<Polynomial> polys(const Ring& ring) {
        std::vector<Polynomial> out;
        do {
            skip_newlines();
            out.push_back(expr(ring));
            skip_newlines();
        } while (accept(","));
        return out;
    }

    Polynomial expr(const Ring& ring) {
        Polynomial p = term(ring);
        for (;;) {
            skip_newlines();
            if (accept("+"))
                p += term(ring);
            else if (accept("-"))
                p -= term(ring);
            else
                return p;
        }
    }

    Polynomial term(const Ring& ring) {
        Polynomial p = unary(ring);
        for (;;) {
            if (accept("*")) {
                p *= unary(ring);
            } else if (peek().kind == Tok::symbol && peek().text == "/") {
                const Token at = next();
                const Polynomial d = unary(ring);
                if (!d.is_constant() || d.is_zero()) fail(at, "division only by a nonzero rational constant");
                p = Rational(1 / d.constant_term()) * p;
            } else {
                return p;
            }
        }
    }

    Polynomial unary(const Ring& ring) {
        skip_newlines();
        if (accept("-")) return -unary(ring);
        if (accept("+")) return unary(ring);
        return power(ring);
    }

    Polynomial power(const Ring& ring) {
        Polynomial base = atom(ring);
        if (accept("^")) {
            const Token e = next();
            if (e.kind != Tok::integer) fail(e, "expected a nonnegative integer exponent");
            if (e.text.size() > 6) fail(e, "exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(e.text)));
        }
        return base;
    }

    Polynomial atom(const Ring& ring) {
        skip_newlines();
        const Token t = next();
        if (t.kind == Tok::integer) return Polynomial::constant(ring, Rational(Integer(t.text)));
        if (t.kind == Tok::ident) {
            const auto idx = ring->index_of(t.text);
            if (!idx) fail(t, "unknown variable '" + t.text + "'");
            return Polynomial::variable(ring, *idx);
        }
        if (t.kind == Tok::symbol && t.text == "(") {
            Polynomial p = expr(ring);
            expect(")");
            return p;
        }
        fail(t, t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    // Tokens up to the end of the current line.
    std::vector<Token> line_tokens() {
        std::vector<Token> out;
        while (peek().kind != Tok::newline && peek().kind != Tok::end && peek().kind != Tok::section)
            out.push_back(next());
        return out;
    }

    static Rational signed_number(const std::vector<Token>& toks, std::size_t& i, bool allow_fraction) {
        bool negative = false;
        if (i < toks.size() && toks[i].kind == Tok::symbol && (toks[i].text == "-" || toks[i].text == "+")) {
            negative = toks[i].text == "-";
            ++i;
        }
        if (i >= toks.size() || toks[i].kind != Tok::integer)
            fail(i < toks.size() ? toks[i] : toks.back(), "expected a number");
        Rational q(Integer(toks[i++].text));
        if (allow_fraction && i + 1 < toks.size() && toks[i].kind == Tok::symbol && toks[i].text == "/") {
            if (toks[i + 1].kind != Tok::integer) fail(toks[i + 1], "expected a denominator");
            const Integer d(toks[i + 1].text);
            if (d == 0) fail(toks[i + 1], "zero denominator");
            q /= Rational(d);
            q.canonicalize();
            i += 2;
        }
        return negative ? Rational(-q) : q;
    }

    static std::vector<Rational> number_list(const std::vector<Token>& toks, std::size_t i, bool allow_fraction) {
        std::vector<Rational> out;
        while (i < toks.size()) {
            out.push_back(signed_number(toks, i, allow_fraction));
            if (i < toks.size() && toks[i].kind == Tok::symbol && toks[i].text == ",") ++i;
            else if (i < toks.size() && toks[i].kind == Tok::symbol && toks[i].text == ";" && i + 1 == toks.size()) ++i;
        }
        return out;
    }

    SurfaceBlock surface() {
        SurfaceBlock block;
        for (;;) {
            skip_newlines();
            if (peek().kind == Tok::end || peek().kind == Tok::section) break;
            const auto toks = line_tokens();
            if (toks.front().kind == Tok::ident) {
                const Token& key = toks.front();
                if (toks.size() < 2 || toks[1].text != "=") fail(key, "expected '=' after '" + key.text + "'");
                RationalVector values = number_list(toks, 2, true);
                if (key.text == "u") block.u = std::move(values);
                else if (key.text == "v") block.v = std::move(values);
                else if (key.text == "w") block.w = std::move(values);
                else if (key.text == "c") block.c = std::move(values);
                else fail(key, "unknown surface vector '" + key.text + "'");
            } else {
                std::vector<Integer> row;
                for (const auto& q : number_list(toks, 0, false)) row.push_back(q.get_num());
                block.matrix.push_back(std::move(row));
            }
        }
        if (block.matrix.empty()) fail(peek(), "[surface] needs an intersection matrix");
        return block;
    }

    void options(DocumentOptions& opts) {
        for (;;) {
            skip_newlines();
            if (peek().kind == Tok::end || peek().kind == Tok::section) return;
            const Token key = next();
            if (key.kind != Tok::ident) fail(key, "expected an option name");
            if (!accept("=")) fail(peek(), "expected '='");
            const Token value = next();
            if (value.kind != Tok::integer) fail(value, "expected a nonnegative integer");
            std::uint64_t v = 0;
            try {
                std::size_t used = 0;
                v = std::stoull(value.text, &used);
            } catch (const std::exception&) {
                fail(value, "option value out of range");
            }
            auto small = [&]() -> unsigned {
                if (v > std::numeric_limits<unsigned>::max()) fail(value, "option value out of range");
                return static_cast<unsigned>(v);
            };
            if (key.text == "seed") opts.seed = v;
            else if (key.text == "bound") opts.bound = v;
            else if (key.text == "rounds") opts.rounds = small();
            else if (key.text == "nmax") opts.nmax = small();
            else fail(key, "unknown option '" + key.text + "'");
            accept(",");
            accept(";");
        }
    }
};

std::string join_numbers(const RationalVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
    return out;
}

std::string generators_text(const Ideal& I) {
    std::string out;
    for (std::size_t i = 0; i < I.generators().size(); ++i) out += (i ? ", " : "") + I.generators()[i].to_string();
    return out;
}

bool same_generators(const Ideal& a, const Ideal& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.generators()[i].to_string() != b.generators()[i].to_string()) return false;
    return true;
}

} // namespace

const Ideal& InputDocument::ideal(const std::string& name) const {
    for (const auto& [n, I] : ideals)
        if (n == name) return I;
    throw InvalidArgument("cli", "no ideal named '" + name + "' in the document");
}

InputDocument parse_input(std::string_view text) { return Parser(lex(text)).document(); }

Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    return Parser(lex(text)).polynomial_only(ring);
}

std::string serialize(const InputDocument& doc) {
    std::ostringstream out;
    if (doc.ring) {
        out << "ring ";
        for (std::size_t i = 0; i < doc.ring->nvars(); ++i) out << (i ? ", " : "") << doc.ring->variables()[i];
        out << ";\n";
    }
    if (doc.ambient) out << "ambient = " << generators_text(*doc.ambient) << ";\n";
    for (const auto& [name, I] : doc.ideals) out << "ideal " << name << " = " << generators_text(I) << ";\n";
    if (doc.surface) {
        out << "[surface]\n";
        for (const auto& row : doc.surface->matrix) {
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << to_string(row[j]);
            out << "\n";
        }
        out << "u = " << join_numbers(doc.surface->u) << "\n";
        out << "v = " << join_numbers(doc.surface->v) << "\n";
        out << "w = " << join_numbers(doc.surface->w) << "\n";
        if (doc.surface->c) out << "c = " << join_numbers(*doc.surface->c) << "\n";
    }
    const auto& o = doc.options;
    if (o.seed || o.bound || o.rounds || o.nmax) {
        out << "[options]\n";
        if (o.seed) out << "seed = " << *o.seed << "\n";
        if (o.bound) out << "bound = " << *o.bound << "\n";
        if (o.rounds) out << "rounds = " << *o.rounds << "\n";
        if (o.nmax) out << "nmax = " << *o.nmax << "\n";
    }
    return out.str();
}

bool documents_equal(const InputDocument& a, const InputDocument& b) {
    if (static_cast<bool>(a.ring) != static_cast<bool>(b.ring)) return false;
    if (a.ring && a.ring->variables() != b.ring->variables()) return false;
    if (a.ambient.has_value() != b.ambient.has_value()) return false;
    if (a.ambient && !same_generators(*a.ambient, *b.ambient)) return false;
    if (a.ideals.size() != b.ideals.size()) return false;
    for (std::size_t i = 0; i < a.ideals.size(); ++i)
        if (a.ideals[i].first != b.ideals[i].first || !same_generators(a.ideals[i].second, b.ideals[i].second))
            return false;
    return a.surface == b.surface && a.options == b.options;
}

} // namespace mixsegre
