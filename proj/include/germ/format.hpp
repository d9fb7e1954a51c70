#pragma once

#include <string>

#include "germ/polynomial.hpp"

namespace germ {

/// Canonical text: ascending graded-lex term order, explicit '*' and '^',
/// variables named z1..zn. parse_poly(format_poly(f)) == f.
inline std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool negative = c < 0;
        Rational magnitude = negative ? Rational(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "z" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += to_string(magnitude);
        else if (magnitude == 1)
            out += mono;
        else
            out += to_string(magnitude) + "*" + mono;
    }
    return out;
}

}  // namespace germ
