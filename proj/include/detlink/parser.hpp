// Text format for polynomials and ideal files.
//
//   poly    :=  [sign] term { (+|-) term }
//   term    :=  factor { '*' factor }
//   factor  :=  primary [ '^' nat ]
//   primary :=  rational | variable | '(' poly ')'
//   rational:=  digits [ '/' digits ]
//
// Juxtaposition is not multiplication; '*' is mandatory. Ideal files start
// with a "vars: ..." header, one generator per line, '#' comments.
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "detlink/polynomial.hpp"

namespace detlink {

namespace parse_detail {

struct Lexer {
    std::string_view src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    struct Token {
        enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End } kind;
        std::string text;
        int line, col;
    };

    void skip_ws() {
        while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' || src[pos] == '\r' ||
                                    src[pos] == '\n')) {
            if (src[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    Token next() {
        skip_ws();
        if (pos >= src.size()) return {Token::End, "", line, col};
        char c = src[pos];
        int tl = line, tc = col;
        auto one = [&](Token::Kind k) {
            ++pos;
            ++col;
            return Token{k, std::string(1, c), tl, tc};
        };
        switch (c) {
            case '+': return one(Token::Plus);
            case '-': return one(Token::Minus);
            case '*': return one(Token::Star);
            case '^': return one(Token::Caret);
            case '/': return one(Token::Slash);
            case '(': return one(Token::LParen);
            case ')': return one(Token::RParen);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string t;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                t += src[pos++];
                ++col;
            }
            return {Token::Number, t, tl, tc};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string t;
            while (pos < src.size() && (std::isalnum(static_cast<unsigned char>(src[pos])) ||
                                        src[pos] == '_')) {
                t += src[pos++];
                ++col;
            }
            return {Token::Ident, t, tl, tc};
        }
        throw ParseError("unexpected character", tl, tc, std::string(1, c));
    }
};

class PolyParser {
  public:
    PolyParser(std::string_view text, RingPtr ring, int base_line = 1)
        : ring_(std::move(ring)) {
        lex_.src = text;
        lex_.line = base_line;
        cur_ = lex_.next();
    }

    Polynomial parse() {
        Polynomial p = expr();
        expect_end();
        return p;
    }

  private:
    using Token = Lexer::Token;
    Lexer lex_;
    Token cur_;
    RingPtr ring_;

    void advance() { cur_ = lex_.next(); }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what, cur_.line, cur_.col, cur_.kind == Token::End ? "<end>" : cur_.text);
    }
    void expect_end() {
        if (cur_.kind != Token::End) fail("trailing input");
    }

    Polynomial expr() {
        bool neg = false;
        if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            neg = cur_.kind == Token::Minus;
            advance();
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool sub = cur_.kind == Token::Minus;
            advance();
            Polynomial t = term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (cur_.kind == Token::Star) {
            advance();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (cur_.kind == Token::Caret) {
            advance();
            if (cur_.kind != Token::Number) fail("expected exponent");
            unsigned long e = std::stoul(cur_.text);
            if (e > 0xffff) fail("exponent too large");
            advance();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial primary() {
        if (cur_.kind == Token::Number) {
            BigInt num = BigInt::from_string(cur_.text);
            advance();
            if (cur_.kind == Token::Slash) {
                advance();
                if (cur_.kind != Token::Number) fail("expected denominator");
                BigInt den = BigInt::from_string(cur_.text);
                if (den.is_zero()) fail("zero denominator");
                advance();
                return Polynomial::constant(ring_, Rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (cur_.kind == Token::Ident) {
            size_t i = ring_->index_of(cur_.text);
            if (i == RingDescriptor::npos) fail("unknown variable");
            advance();
            return Polynomial::variable(ring_, i);
        }
        if (cur_.kind == Token::LParen) {
            advance();
            Polynomial p = expr();
            if (cur_.kind != Token::RParen) fail("expected ')'");
            advance();
            return p;
        }
        fail("expected term");
    }
};

}  // namespace parse_detail

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return parse_detail::PolyParser(text, ring).parse();
}

// comma-separated generator list over the given ring
inline std::vector<Polynomial> parse_generators(std::string_view text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') ++depth;
        if (i < text.size() && text[i] == ')') --depth;
        if (i == text.size() || (text[i] == ',' && depth == 0)) {
            std::string_view piece = text.substr(start, i - start);
            size_t a = piece.find_first_not_of(" \t\r\n");
            if (a != std::string_view::npos) out.push_back(parse_polynomial(piece, ring));
            start = i + 1;
        }
    }
    return out;
}

struct ParsedIdealFile {
    RingPtr ring;
    std::vector<Polynomial> generators;
};

// Format:
//   # comment
//   vars: x1 x2 x3
//   x1^2*x2
//   x3^3
inline ParsedIdealFile parse_ideal_text(std::string_view text,
                                        const std::string& tag = block_tag::xblock) {
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, int>> gen_lines;
    int lineno = 0;
    size_t pos = 0;
    bool have_vars = false;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                                : eol - pos);
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a != std::string_view::npos) {
            line = line.substr(a);
            size_t b = line.find_last_not_of(" \t\r");
            line = line.substr(0, b + 1);
            if (!have_vars) {
                if (line.substr(0, 5) != "vars:")
                    throw ParseError("expected \"vars:\" header", lineno, 1, std::string(line));
                std::string rest(line.substr(5));
                std::string name;
                for (char c : rest + " ") {
                    if (std::isspace(static_cast<unsigned char>(c))) {
                        if (!name.empty()) {
                            for (const auto& v : vars)
                                if (v == name)
                                    throw ParseError("duplicate variable name", lineno, 1, name);
                            vars.push_back(name);
                            name.clear();
                        }
                    } else {
                        name += c;
                    }
                }
                if (vars.empty()) throw ParseError("empty variable list", lineno, 1, "vars:");
                have_vars = true;
            } else {
                gen_lines.emplace_back(std::string(line), lineno);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!have_vars) throw ParseError("missing \"vars:\" header", lineno, 1, "<end>");
    ParsedIdealFile out;
    out.ring = RingDescriptor::make(vars, tag);
    for (const auto& [src, ln] : gen_lines)
        out.generators.push_back(parse_detail::PolyParser(src, out.ring, ln).parse());
    return out;
}

}  // namespace detlink
