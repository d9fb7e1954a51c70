#pragma once

// Recursive-descent parser for polynomial expressions.
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := '-' factor | base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   var      := 'z' nat            (1-based)
//   rational := int ('/' nat)?
//
// Implicit multiplication is rejected: "z1z2" is an error.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/polynomial.hpp"

namespace germ {

namespace detail {

class PolyParser {
public:
    enum class Variables { Indexed, SingleT };

    PolyParser(std::string_view text, Variables vars) : text_(text), vars_(vars) { tokenize(); }

    Polynomial parse(std::optional<std::size_t> var_count) {
        std::size_t max_index = 0;
        for (const auto& t : tokens_)
            if (t.kind == Kind::Var) max_index = std::max(max_index, t.index + 1);
        if (var_count) {
            for (const auto& t : tokens_)
                if (t.kind == Kind::Var && t.index >= *var_count)
                    throw UnknownVariable(t.pos, "variable z1..z" + std::to_string(*var_count),
                                          t.lexeme);
            n_ = *var_count;
        } else {
            n_ = std::max<std::size_t>(max_index, 1);
        }
        if (tokens_.front().kind == Kind::End) throw ParseError(0, "expression", "");
        Polynomial p = expr();
        if (peek().kind != Kind::End) fail("operator or end of input");
        return p;
    }

private:
    enum class Kind { Number, Var, Op, End };

    struct Token {
        Kind kind;
        std::size_t pos;
        std::string lexeme;
        std::size_t index = 0;  // Var only (0-based)
    };

    void tokenize() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = i;
                while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
                tokens_.push_back({Kind::Number, start, std::string(text_.substr(start, i - start))});
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = i;
                while (i < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[i])) ||
                                            text_[i] == '_'))
                    ++i;
                std::string word(text_.substr(start, i - start));
                tokens_.push_back(variable(word, start));
            } else if (c == '+' || c == '-' || c == '*' || c == '^' || c == '/' || c == '(' ||
                       c == ')') {
                tokens_.push_back({Kind::Op, i, std::string(1, c)});
                ++i;
            } else {
                throw ParseError(i, "number, variable, or operator", std::string(1, c));
            }
        }
        tokens_.push_back({Kind::End, text_.size(), ""});
    }

    // "z1z2" lexes as one word; report it as implicit multiplication at
    // the second variable rather than as an unknown name.
    Token variable(const std::string& word, std::size_t start) {
        if (vars_ == Variables::SingleT) {
            if (word == "t") return {Kind::Var, start, word, 0};
            throw UnknownVariable(start, "variable t", word);
        }
        if (word.size() < 2 || word[0] != 'z' || !std::isdigit(static_cast<unsigned char>(word[1])))
            throw UnknownVariable(start, "variable z<index>", word);
        std::size_t k = 1;
        while (k < word.size() && std::isdigit(static_cast<unsigned char>(word[k]))) ++k;
        if (k != word.size()) {
            throw ParseError(start + k, "operator or end of input (no implicit multiplication)",
                             word.substr(k, 1));
        }
        std::string digits = word.substr(1);
        if (digits.size() > 6) throw UnknownVariable(start, "variable index", word);
        std::size_t idx = std::stoul(digits);
        if (idx == 0) throw UnknownVariable(start, "variable index >= 1", word);
        return {Kind::Var, start, word, idx - 1};
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_op(char c) const { return peek().kind == Kind::Op && peek().lexeme[0] == c; }

    [[noreturn]] void fail(const char* expected) const {
        throw ParseError(peek().pos, expected, peek().lexeme);
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (at_op('+') || at_op('-')) {
            bool minus = next().lexeme[0] == '-';
            Polynomial rhs = term();
            if (minus)
                acc -= rhs;
            else
                acc += rhs;
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (at_op('*')) {
            next();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        if (at_op('-')) {
            next();
            return -factor();
        }
        Polynomial b = base();
        if (at_op('^')) {
            next();
            if (peek().kind != Kind::Number) fail("exponent");
            const Token& e = next();
            if (e.lexeme.size() > 4) throw ParseError(e.pos, "exponent below 10000", e.lexeme);
            b = b.pow(static_cast<unsigned>(std::stoul(e.lexeme)));
        }
        return b;
    }

    Polynomial base() {
        const Token& t = peek();
        switch (t.kind) {
            case Kind::Number: {
                next();
                Integer num(t.lexeme);
                Integer den = 1;
                if (at_op('/')) {
                    next();
                    if (peek().kind != Kind::Number) fail("denominator");
                    const Token& d = next();
                    den = Integer(d.lexeme);
                    if (den == 0) throw ParseError(d.pos, "nonzero denominator", d.lexeme);
                }
                return Polynomial::constant(n_, Rational(num, den));
            }
            case Kind::Var:
                next();
                return Polynomial::variable(n_, t.index);
            case Kind::Op:
                if (t.lexeme[0] == '(') {
                    next();
                    Polynomial inner = expr();
                    if (!at_op(')')) fail("')'");
                    next();
                    return inner;
                }
                break;
            case Kind::End:
                break;
        }
        fail("number, variable, or '('");
    }

    std::string_view text_;
    Variables vars_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t n_ = 1;
};

}  // namespace detail

/// Parses a polynomial in z1..zn. When var_count is omitted it is the
/// largest variable index that occurs (at least 1).
inline Polynomial parse_poly(std::string_view text, std::optional<std::size_t> var_count = std::nullopt) {
    return detail::PolyParser(text, detail::PolyParser::Variables::Indexed).parse(var_count);
}

/// Parses a univariate polynomial in the curve parameter t.
inline Polynomial parse_curve_coordinate(std::string_view text) {
    return detail::PolyParser(text, detail::PolyParser::Variables::SingleT).parse(1);
}

/// "z3" -> 2. Throws UnknownVariable.
inline std::size_t parse_variable_name(std::string_view name) {
    if (name.size() < 2 || name[0] != 'z') throw UnknownVariable(0, "variable z<index>", std::string(name));
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i])) || i > 6)
            throw UnknownVariable(0, "variable z<index>", std::string(name));
    std::size_t idx = std::stoul(std::string(name.substr(1)));
    if (idx == 0) throw UnknownVariable(0, "variable index >= 1", std::string(name));
    return idx - 1;
}

}  // namespace germ
