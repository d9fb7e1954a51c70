#pragma once

// Classification of the germ of a polynomial at a rational point.
//
// Decisive on units, smooth points, Weierstrass degree 1 and 2 in any
// dimension, and bivariate germs caught by the Newton-polygon criteria
// (which take precedence over the quadratic test in the plane).
// Everything else is Undetermined with a reason.

#include <algorithm>
#include <optional>

#include "germ/local_square.hpp"
#include "germ/newton_polygon.hpp"

namespace germ {

inline constexpr unsigned default_truncation_order = 8;

struct GermQuery {
    Polynomial f;
    Point point;
    unsigned order = default_truncation_order;
    std::optional<std::size_t> distinguished_var;  // defaults to the last variable
};

inline GermStatus analyze_germ(const GermQuery& q) {
    const Polynomial& f = q.f;
    if (q.point.size() != f.var_count()) throw DimensionMismatch("point dimension differs from variable count");
    if (q.order < 2) throw InvalidArgument("truncation order must be at least 2");

    Rational value = evaluate(f, q.point);
    if (value != 0) return GermStatus::make(GermKind::Unit, cert::NonzeroValue{value});

    Point grad = gradient_at(f, q.point);
    if (std::any_of(grad.begin(), grad.end(), [](const Rational& g) { return g != 0; }))
        return GermStatus::make(GermKind::SmoothIrreducible, cert::SmoothPoint{grad});

    if (f.is_zero()) return GermStatus::undetermined("germ is identically zero");

    const std::size_t n = f.var_count();
    const std::size_t var = q.distinguished_var.value_or(n - 1);
    f.check_index(var);

    Polynomial g = shift(f, q.point);
    std::vector<Rational> shear;
    if (!regular_order(g, var).regular) {
        auto reg = make_regular(g, var);
        g = std::move(reg.poly);
        shear = std::move(reg.report.shear);
    }
    // A polynomial that is already a Weierstrass polynomial is then kept
    // exactly, so truncation never hides a term of the input.
    const unsigned order = std::max(q.order, g.total_degree());
    WeierstrassData w = weierstrass_prepare(g, var, order);

    auto finish = [&](GermStatus s) {
        s.preparation = w;
        s.shear = shear;
        return s;
    };

    if (w.degree == 1) return finish(GermStatus::make(GermKind::SingularIrreducible, cert::DegreeOne{}));

    if (w.coefficients.back().is_zero()) {
        GermStatus s = GermStatus::make(GermKind::SingularReducible, cert::DistinguishedVarDivides{var});
        Monomial y(n, 0);
        y[var] = 1;
        Polynomial quotient(n);
        const TruncatedSeries wp = w.polynomial();
        for (const auto& [m, c] : wp.body().terms()) {
            Monomial r = m;
            --r[var];  // every term carries y since e_d = 0
            quotient.add_term(r, c);
        }
        s.factors = std::pair{TruncatedSeries(Polynomial::term(y, 1), order), TruncatedSeries(quotient, order)};
        return finish(std::move(s));
    }

    if (n == 2) {
        // The polygon decides first in the plane; the quadratic test fills
        // in when it is silent and supplies explicit factors when it can.
        GermStatus s = polygon_verdict(newton_polygon(w));
        if (w.degree == 2) {
            GermStatus q = quadratic_germ_test(w);
            if (s.kind == GermKind::Undetermined) return finish(std::move(q));
            if (s.kind == GermKind::SingularReducible && q.factors) s.factors = std::move(q.factors);
        }
        return finish(std::move(s));
    }
    if (w.degree == 2) return finish(quadratic_germ_test(w));
    return finish(GermStatus::undetermined("degree >= 3 in dimension >= 3 outside decidable fragment"));
}

}  // namespace germ
