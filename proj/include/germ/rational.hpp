#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germ/errors.hpp"

namespace germ {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// A point of Q^n.
using Point = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Point& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += to_string(p[i]);
    }
    return out + ")";
}

/// Parses "[-]digits[/digits]". Throws ParseError on malformed input or a
/// zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](std::size_t pos, const char* expected) {
        throw ParseError(pos, expected, std::string(text.substr(pos, 1)));
    };
    std::size_t i = 0;
    while (i < text.size() && text[i] == ' ') ++i;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail(pos, "digit");
        return Integer(std::string(text.substr(start, pos - start)));
    };
    Integer num = digits(i);
    Integer den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_pos = i;
        den = digits(i);
        if (den == 0) throw ParseError(den_pos, "nonzero denominator", "0");
    }
    while (i < text.size() && text[i] == ' ') ++i;
    if (i != text.size()) fail(i, "end of rational");
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

/// Comma-separated list of rationals, e.g. "1,1/2,-3".
inline std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view item = text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start);
        try {
            out.push_back(parse_rational(item));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), e.expected(), e.found());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Square root in Q, if it exists.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer n = numerator_of(q);
    Integer d = denominator_of(q);
    Integer rn = boost::multiprecision::sqrt(n);
    Integer rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn, rd);
}

}  // namespace germ
