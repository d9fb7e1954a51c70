#pragma once

// Sparse multivariate polynomials over Q and the elementary operations on
// them: evaluation, partial derivatives, Taylor shifts, order extraction.
//
// Variables are addressed by 0-based index; index i prints as z{i+1}.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germ/errors.hpp"
#include "germ/rational.hpp"

namespace germ {

/// Exponent vector; its length is the ambient variable count.
using Monomial = std::vector<unsigned>;

/// Marker returned by variable_order for the zero polynomial.
inline constexpr unsigned infinite_order = std::numeric_limits<unsigned>::max();

inline unsigned total_degree(const Monomial& m) {
    unsigned s = 0;
    for (unsigned e : m) s += e;
    return s;
}

/// Graded lexicographic order with z1 > z2 > ... > zn, ascending
/// (lowest total degree first).
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t var_count) : var_count_(var_count) {}

    static Polynomial constant(std::size_t var_count, const Rational& c) {
        Polynomial p(var_count);
        p.add_term(Monomial(var_count, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t var_count, std::size_t index) {
        if (index >= var_count) throw IndexOutOfRange("variable index out of range");
        Monomial m(var_count, 0);
        m[index] = 1;
        Polynomial p(var_count);
        p.add_term(m, Rational(1));
        return p;
    }

    static Polynomial term(Monomial m, const Rational& c) {
        Polynomial p(m.size());
        p.add_term(m, c);
        return p;
    }

    std::size_t var_count() const noexcept { return var_count_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && germ::total_degree(terms_.begin()->first) == 0);
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial(var_count_, 0)); }

    /// Maximal total degree; 0 for the zero polynomial.
    unsigned total_degree() const {
        return terms_.empty() ? 0 : germ::total_degree(terms_.rbegin()->first);
    }

    unsigned degree_in(std::size_t var) const {
        check_index(var);
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    /// Adds c*x^m in place, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != var_count_) throw DimensionMismatch("monomial length differs from variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.var_count_);
        Monomial m(a.var_count_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(var_count_, 1);
        Polynomial base = *this;
        while (k) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return result;
    }

    /// Keeps only terms satisfying `keep`.
    template <typename Pred>
    Polynomial filtered(Pred keep) const {
        Polynomial r(var_count_);
        for (const auto& [m, c] : terms_)
            if (keep(m)) r.terms_.emplace_hint(r.terms_.end(), m, c);
        return r;
    }

    /// Drops every term of total degree > order.
    Polynomial truncated(unsigned order) const {
        return filtered([order](const Monomial& m) { return germ::total_degree(m) <= order; });
    }

    /// Coefficients with respect to one variable: result[k] is the
    /// coefficient of z_var^k (a polynomial free of z_var, same ambient
    /// variable count).
    std::vector<Polynomial> coefficients_in(std::size_t var) const {
        std::vector<Polynomial> out(degree_in(var) + 1, Polynomial(var_count_));
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            rest[var] = 0;
            out[m[var]].add_term(rest, c);
        }
        return out;
    }

    /// Removes a variable the polynomial does not depend on; later
    /// variables shift down by one index.
    Polynomial drop_variable(std::size_t var) const {
        check_index(var);
        Polynomial r(var_count_ - 1);
        for (const auto& [m, c] : terms_) {
            if (m[var] != 0) throw InvalidArgument("polynomial depends on the dropped variable");
            Monomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
            r.add_term(rest, c);
        }
        return r;
    }

    /// Multiplies by x^m.
    Polynomial times_monomial(const Monomial& mono) const {
        if (mono.size() != var_count_) throw DimensionMismatch("monomial length differs from variable count");
        Polynomial r(var_count_);
        for (const auto& [m, c] : terms_) {
            Monomial s = m;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += mono[i];
            r.terms_.emplace(std::move(s), c);
        }
        return r;
    }

    void check_index(std::size_t var) const {
        if (var >= var_count_) throw IndexOutOfRange("variable index out of range");
    }

private:
    void check_same(const Polynomial& o) const {
        if (o.var_count_ != var_count_) throw DimensionMismatch("polynomials live in different rings");
    }

    std::size_t var_count_ = 0;
    TermMap terms_;
};

/// Exact value f(p).
inline Rational evaluate(const Polynomial& f, const Point& p) {
    if (p.size() != f.var_count()) throw DimensionMismatch("point dimension differs from variable count");
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size() && t != 0; ++i)
            for (unsigned k = 0; k < m[i]; ++k) t *= p[i];
        sum += t;
    }
    return sum;
}

inline Polynomial derivative(const Polynomial& f, std::size_t var) {
    f.check_index(var);
    Polynomial r(f.var_count());
    for (const auto& [m, c] : f.terms()) {
        if (m[var] == 0) continue;
        Monomial d = m;
        --d[var];
        r.add_term(d, c * m[var]);
    }
    return r;
}

inline Point gradient_at(const Polynomial& f, const Point& p) {
    Point g;
    g.reserve(f.var_count());
    for (std::size_t i = 0; i < f.var_count(); ++i) g.push_back(evaluate(derivative(f, i), p));
    return g;
}

/// Substitutes z_var <- replacement, by Horner's rule in z_var.
inline Polynomial substitute(const Polynomial& f, std::size_t var, const Polynomial& replacement) {
    auto coeffs = f.coefficients_in(var);
    Polynomial result(f.var_count());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        result = result * replacement;
        result += *it;
    }
    return result;
}

/// f~ with f~(x) = f(p + x). The germ of f at p is the germ of f~ at 0.
inline Polynomial shift(const Polynomial& f, const Point& p) {
    if (p.size() != f.var_count()) throw DimensionMismatch("point dimension differs from variable count");
    Polynomial r = f;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        r = substitute(r, i, Polynomial::variable(f.var_count(), i) +
                                 Polynomial::constant(f.var_count(), p[i]));
    }
    return r;
}

/// Minimal exponent of z_var over the support; infinite_order for f = 0.
inline unsigned variable_order(const Polynomial& f, std::size_t var) {
    f.check_index(var);
    unsigned k = infinite_order;
    for (const auto& [m, c] : f.terms()) k = std::min(k, m[var]);
    return k;
}

struct HomogeneousPart {
    Polynomial form;
    unsigned degree = 0;
};

/// Sum of the terms of minimal total degree.
inline HomogeneousPart lowest_homogeneous_form(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("lowest form of the zero polynomial");
    unsigned low = total_degree(f.terms().begin()->first);
    return {f.filtered([low](const Monomial& m) { return total_degree(m) == low; }), low};
}

struct MonomialUnit {
    Monomial exponent;
    Polynomial unit;
};

/// Writes f = x^alpha * U with alpha the componentwise minimal exponent of
/// the support. Returns nullopt when U(0) = 0.
inline std::optional<MonomialUnit> monomial_unit_split(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("monomial/unit split of the zero polynomial");
    Monomial alpha(f.var_count());
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = variable_order(f, i);
    Polynomial u(f.var_count());
    for (const auto& [m, c] : f.terms()) {
        Monomial q = m;
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= alpha[i];
        u.add_term(q, c);
    }
    if (u.constant_term() == 0) return std::nullopt;
    return MonomialUnit{std::move(alpha), std::move(u)};
}

/// Exact quotient a / b. Throws InexactDivision when b does not divide a.
inline Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    if (a.var_count() != b.var_count()) throw DimensionMismatch("polynomials live in different rings");
    const auto& [lead_b, lead_cb] = *b.terms().rbegin();
    Polynomial q(a.var_count());
    Polynomial r = a;
    while (!r.is_zero()) {
        const auto& [lead_r, lead_cr] = *r.terms().rbegin();
        Monomial t = lead_r;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < lead_b[i]) throw InexactDivision("divisor does not divide dividend");
            t[i] -= lead_b[i];
        }
        Polynomial step = Polynomial::term(t, lead_cr / lead_cb);
        q += step;
        r -= step * b;
    }
    return q;
}

}  // namespace germ
