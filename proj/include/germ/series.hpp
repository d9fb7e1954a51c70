#pragma once

// Power series truncated at a total degree: the finite stand-in for a germ
// at the origin. All equalities between series hold modulo terms of total
// degree > order.

#include <algorithm>
#include <optional>
#include <utility>

#include "germ/polynomial.hpp"

namespace germ {

class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(const Polynomial& body, unsigned order)
        : body_(body.truncated(order)), order_(order) {}

    static TruncatedSeries constant(std::size_t var_count, const Rational& c, unsigned order) {
        return {Polynomial::constant(var_count, c), order};
    }

    const Polynomial& body() const noexcept { return body_; }
    unsigned order() const noexcept { return order_; }
    std::size_t var_count() const noexcept { return body_.var_count(); }
    Rational constant_term() const { return body_.constant_term(); }
    bool is_zero() const noexcept { return body_.is_zero(); }

    TruncatedSeries truncated(unsigned order) const { return {body_, std::min(order, order_)}; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return {a.body_ + b.body_, std::min(a.order_, b.order_)};
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return {a.body_ - b.body_, std::min(a.order_, b.order_)};
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a) { return {-a.body_, a.order_}; }
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
        return {s * a.body_, a.order_};
    }

    /// Product truncated at min(a.order, b.order). Only pairs of terms whose
    /// degrees fit under the order are multiplied.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.var_count() != b.var_count()) throw DimensionMismatch("series live in different rings");
        unsigned order = std::min(a.order_, b.order_);
        Polynomial r(a.var_count());
        Monomial m(a.var_count());
        for (const auto& [ma, ca] : a.body_.terms()) {
            unsigned da = total_degree(ma);
            if (da > order) break;
            for (const auto& [mb, cb] : b.body_.terms()) {
                if (da + total_degree(mb) > order) break;
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        TruncatedSeries out;
        out.body_ = std::move(r);
        out.order_ = order;
        return out;
    }

private:
    Polynomial body_;
    unsigned order_ = 0;
};

/// a == b modulo total degree > order.
inline bool congruent(const Polynomial& a, const Polynomial& b, unsigned order) {
    return (a - b).truncated(order).is_zero();
}

/// Inverse of a unit by Newton iteration r <- r(2 - a r), doubling the
/// number of correct degrees each step.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
    Rational c = a.constant_term();
    if (c == 0) throw NotAUnit("series with zero constant term is not invertible");
    const std::size_t n = a.var_count();
    const unsigned order = a.order();
    TruncatedSeries r = TruncatedSeries::constant(n, 1 / c, 0);
    unsigned correct = 1;  // degrees 0..correct-1 are exact
    while (correct <= order) {
        unsigned next = std::min(2 * correct - 1, order);
        TruncatedSeries r_next(r.body(), next);
        TruncatedSeries two = TruncatedSeries::constant(n, 2, next);
        r = r_next * (two - a.truncated(next) * r_next);
        correct = next + 1;
    }
    return r;
}

/// Square root of a unit with positive constant term, by Newton iteration
/// r <- (r + a/r)/2 from the rational square root of the constant term.
/// Returns nullopt when that constant term has no square root in Q.
inline std::optional<TruncatedSeries> square_root(const TruncatedSeries& a) {
    Rational c = a.constant_term();
    if (c == 0) throw NotAUnit("series with zero constant term has no unit square root");
    auto root = rational_sqrt(c);
    if (!root) return std::nullopt;
    const std::size_t n = a.var_count();
    const unsigned order = a.order();
    TruncatedSeries r = TruncatedSeries::constant(n, *root, 0);
    unsigned correct = 1;
    while (correct <= order) {
        unsigned next = std::min(2 * correct - 1, order);
        TruncatedSeries r_next(r.body(), next);
        r = Rational(1, 2) * (r_next + a.truncated(next) * inverse(r_next));
        correct = next + 1;
    }
    return r;
}

}  // namespace germ
