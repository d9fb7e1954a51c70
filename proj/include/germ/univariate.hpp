#pragma once

// Dense univariate polynomials over Q (index = power). Used for binary
// forms and Newton-polygon edge polynomials.

#include <cstddef>
#include <vector>

#include "germ/rational.hpp"

namespace germ::univariate {

using Dense = std::vector<Rational>;

inline void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// -1 for the zero polynomial.
inline long degree(const Dense& p) { return static_cast<long>(p.size()) - 1; }

inline Dense derivative(const Dense& p) {
    Dense d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim(d);
    return d;
}

inline Dense multiply(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Remainder of a modulo b (b nonzero).
inline Dense remainder(Dense a, const Dense& b) {
    trim(a);
    while (degree(a) >= degree(b)) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        trim(a);
    }
    return a;
}

inline Dense monic(Dense p) {
    trim(p);
    if (p.empty()) return p;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

inline Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Number of distinct complex roots.
inline long squarefree_degree(const Dense& p) {
    Dense q = p;
    trim(q);
    if (q.empty()) return -1;
    return degree(q) - degree(gcd(q, derivative(q)));
}

/// True when p = c * q^2 over C, i.e. every complex root has even
/// multiplicity. The monic square root of a monic polynomial is unique up
/// to sign and has rational coefficients, so it is recovered from the top
/// coefficients and checked by squaring.
inline bool is_square_over_complex(const Dense& p) {
    Dense g = monic(p);
    if (g.empty()) return true;
    long d = degree(g);
    if (d % 2) return false;
    const std::size_t k = static_cast<std::size_t>(d / 2);
    // q = x^k + q_{k-1} x^{k-1} + ... ; match coefficients of x^{2k-1} .. x^k.
    Dense q(k + 1, Rational(0));
    q[k] = 1;
    for (std::size_t step = 1; step <= k; ++step) {
        std::size_t power = 2 * k - step;
        Rational known = 0;
        for (std::size_t i = k - step + 1; i <= k; ++i) {
            std::size_t j = power - i;
            if (j >= k - step + 1 && j <= k) known += q[i] * q[j];
        }
        q[k - step] = (g[power] - known) / 2;
    }
    return multiply(q, q) == g;
}

}  // namespace germ::univariate
