#pragma once

// Regularity in a distinguished variable, shear coordinate changes that
// achieve it, and Weierstrass preparation f = u * w at a truncation order.

#include <cstddef>
#include <vector>

#include "germ/polynomial.hpp"
#include "germ/series.hpp"

namespace germ {

struct RegularityReport {
    bool regular = false;
    unsigned order = infinite_order;
    /// Shear z_i <- z_i + shear[i] * z_j applied to reach regularity; empty
    /// when no change was applied.
    std::vector<Rational> shear;
};

/// Order of vanishing of t -> f(0,...,t,...,0) (t in slot var).
inline RegularityReport regular_order(const Polynomial& f, std::size_t var) {
    if (f.is_zero()) throw ZeroPolynomial("regularity of the zero polynomial");
    f.check_index(var);
    RegularityReport report;
    for (const auto& [m, c] : f.terms()) {
        if (total_degree(m) == m[var]) {
            report.order = m[var];  // terms are sorted by degree: first hit is minimal
            report.regular = true;
            break;
        }
    }
    return report;
}

/// Applies z_i <- z_i + shear[i] * z_var for every i != var.
inline Polynomial apply_shear(const Polynomial& f, std::size_t var, const std::vector<Rational>& shear) {
    if (shear.size() != f.var_count()) throw DimensionMismatch("shear length differs from variable count");
    Polynomial r = f;
    const std::size_t n = f.var_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (i == var || shear[i] == 0) continue;
        r = substitute(r, i, Polynomial::variable(n, i) + shear[i] * Polynomial::variable(n, var));
    }
    return r;
}

struct Regularized {
    Polynomial poly;
    RegularityReport report;
};

/// The k-th entry of 0, 1, -1, 2, -2, ...
inline Rational shear_candidate(unsigned k) {
    Rational magnitude((k + 1) / 2);
    return k % 2 == 1 ? magnitude : Rational(-magnitude);
}

/// Tries uniform shears from 0, 1, -1, 2, -2, ... on every variable except
/// var until the result is regular in var.
inline Regularized make_regular(const Polynomial& f, std::size_t var, unsigned max_attempts = 8) {
    if (f.is_zero()) throw ZeroPolynomial("cannot regularize the zero polynomial");
    f.check_index(var);
    if (f.constant_term() != 0) throw InvalidArgument("make_regular expects f(origin) = 0");
    for (unsigned k = 0; k < max_attempts; ++k) {
        std::vector<Rational> shear(f.var_count(), shear_candidate(k));
        shear[var] = 0;
        Polynomial g = k == 0 ? f : apply_shear(f, var, shear);
        RegularityReport report = regular_order(g, var);
        if (report.regular) {
            if (k != 0) report.shear = std::move(shear);
            return {std::move(g), std::move(report)};
        }
    }
    throw ShearExhausted("no shear among the first " + std::to_string(max_attempts) +
                         " candidates makes the polynomial regular");
}

/// Unit times Weierstrass polynomial, both truncated at total degree order:
///   u * (y^d + e_1 y^(d-1) + ... + e_d) == f  (mod degree > order)
/// with y = z_{distinguished_var}, e_i free of y and e_i(0) = 0.
struct WeierstrassData {
    unsigned degree = 0;
    std::vector<TruncatedSeries> coefficients;  // e_1 .. e_d
    TruncatedSeries unit;
    std::size_t distinguished_var = 0;
    unsigned order = 0;

    std::size_t var_count() const { return unit.var_count(); }

    /// w as a truncated series in all variables.
    TruncatedSeries polynomial() const {
        const std::size_t n = var_count();
        Monomial y(n, 0);
        y[distinguished_var] = degree;
        Polynomial w = Polynomial::term(y, 1);
        for (unsigned i = 1; i <= degree; ++i) {
            Monomial p(n, 0);
            p[distinguished_var] = degree - i;
            w += coefficients[i - 1].body().times_monomial(p);
        }
        return {w, order};
    }

    friend bool operator==(const WeierstrassData&, const WeierstrassData&) = default;
};

namespace detail {

inline unsigned degree_without(const Monomial& m, std::size_t var) { return total_degree(m) - m[var]; }

inline Polynomial truncate_in(const Polynomial& p, std::size_t var, unsigned max_degree) {
    return p.filtered([=](const Monomial& m) { return m[var] <= max_degree; });
}

/// a * b with every term of var-degree > max_degree discarded.
inline Polynomial multiply_truncated_in(const Polynomial& a, const Polynomial& b, std::size_t var,
                                        unsigned max_degree) {
    Polynomial r(a.var_count());
    Monomial m(a.var_count());
    for (const auto& [ma, ca] : a.terms()) {
        if (ma[var] > max_degree) continue;
        for (const auto& [mb, cb] : b.terms()) {
            if (ma[var] + mb[var] > max_degree) continue;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

}  // namespace detail

/// Solves f = u * w slice by slice in the degree of the non-distinguished
/// variables x. Slice 0 gives u_0(y) = f(0,y) / y^d; slice k is one
/// division of the known remainder by y^d after multiplying by u_0^{-1}.
/// Each slice consumes d degrees of y-precision, so the y-expansions are
/// carried to degree (order + 1) * d.
inline WeierstrassData weierstrass_prepare(const Polynomial& f, std::size_t var, unsigned order) {
    if (f.is_zero()) throw NotRegular("the zero polynomial is not regular");
    f.check_index(var);
    RegularityReport report = regular_order(f, var);
    if (!report.regular) throw NotRegular("f(0,...,z_j,...,0) vanishes identically");
    const unsigned d = report.order;
    if (d == 0) throw InvalidArgument("weierstrass_prepare expects f(origin) = 0");
    if (order < d) throw OrderTooSmall("truncation order is below the Weierstrass degree");

    const std::size_t n = f.var_count();
    const unsigned y_precision = (order + 1) * d;
    auto slice_of = [&](const Monomial& m) { return detail::degree_without(m, var); };

    std::vector<Polynomial> f_slices(order + 1, Polynomial(n));
    for (const auto& [m, c] : f.terms())
        if (slice_of(m) <= order) f_slices[slice_of(m)].add_term(m, c);

    Monomial y_d(n, 0);
    y_d[var] = d;
    auto divide_by_y_d = [&](const Polynomial& p) {
        Polynomial q(n);
        for (const auto& [m, c] : p.terms()) {
            Monomial r = m;
            r[var] -= d;
            q.add_term(r, c);
        }
        return q;
    };

    Polynomial u0 = detail::truncate_in(divide_by_y_d(f_slices[0]), var, y_precision);
    // u0 depends on y alone, so total degree equals y-degree here.
    Polynomial u0_inverse = inverse(TruncatedSeries(u0, y_precision)).body();

    std::vector<Polynomial> u_slices{u0};
    std::vector<Polynomial> w_slices{Polynomial::term(y_d, 1)};
    for (unsigned k = 1; k <= order; ++k) {
        Polynomial rest = f_slices[k];
        for (unsigned i = 1; i < k; ++i)
            rest -= detail::multiply_truncated_in(u_slices[i], w_slices[k - i], var, y_precision);
        rest = detail::truncate_in(rest, var, y_precision);
        Polynomial scaled = detail::multiply_truncated_in(rest, u0_inverse, var, y_precision);
        Polynomial low = scaled.filtered([&](const Monomial& m) { return m[var] < d; });
        Polynomial high = divide_by_y_d(scaled - low);
        w_slices.push_back(low);
        u_slices.push_back(detail::multiply_truncated_in(u0, high, var, y_precision));
    }

    WeierstrassData data;
    data.degree = d;
    data.distinguished_var = var;
    data.order = order;
    Polynomial unit(n);
    for (const auto& s : u_slices) unit += s.truncated(order);
    data.unit = TruncatedSeries(unit, order);

    Polynomial lower(n);
    for (unsigned k = 1; k < w_slices.size(); ++k) lower += w_slices[k];
    auto coeffs = lower.coefficients_in(var);
    coeffs.resize(d, Polynomial(n));
    for (unsigned i = 1; i <= d; ++i) data.coefficients.emplace_back(coeffs[d - i], order);
    return data;
}

}  // namespace germ
