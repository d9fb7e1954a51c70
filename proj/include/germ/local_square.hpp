#pragma once

// Deciding whether a germ at the origin is a square, and the quadratic
// splitting test built on it: y^2 + e1 y + e2 splits iff e1^2 - 4 e2 is a
// square in the local ring.

#include <string>
#include <variant>

#include "germ/status.hpp"
#include "germ/univariate.hpp"

namespace germ {

struct SquareYes {
    /// Root r with r^2 == D mod order; empty when only symbolic over C.
    std::optional<TruncatedSeries> root;
    cert::MonomialUnitSquare certificate;
};

struct SquareNo {
    Certificate certificate;
};

struct SquareUndetermined {
    std::string reason;
};

using SquareTest = std::variant<SquareYes, SquareNo, SquareUndetermined>;

namespace detail {

// Binary or unary form (at most two variables occur). Returns nullopt when
// more variables occur.
inline std::optional<bool> form_is_square(const Polynomial& form) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < form.var_count(); ++i)
        if (form.degree_in(i) > 0) vars.push_back(i);
    if (vars.size() > 2) return std::nullopt;
    if (vars.size() <= 1) {
        // c * x^m: a square exactly when m is even.
        return form.total_degree() % 2 == 0;
    }
    // Dehomogenize at the second variable.
    univariate::Dense p(form.total_degree() + 1, Rational(0));
    for (const auto& [m, c] : form.terms()) p[m[vars[0]]] = c;
    return univariate::is_square_over_complex(p);
}

}  // namespace detail

/// Decision procedure for "D is a square of a germ at the origin", sound
/// on every answer it gives and Undetermined otherwise.
inline SquareTest is_local_square(const Polynomial& D, unsigned order) {
    const std::size_t n = D.var_count();
    if (D.is_zero()) {
        return SquareYes{TruncatedSeries(Polynomial(n), order),
                         {Monomial(n, 0), TruncatedSeries(Polynomial(n), order)}};
    }
    if (auto split = monomial_unit_split(D)) {
        Monomial half(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (split->exponent[i] % 2) return SquareNo{cert::OddVariableOrder{i, split->exponent[i]}};
            half[i] = split->exponent[i] / 2;
        }
        auto unit_root = square_root(TruncatedSeries(split->unit, order));
        if (!unit_root) return SquareYes{std::nullopt, {half, std::nullopt}};
        TruncatedSeries root(unit_root->body().times_monomial(half), order);
        return SquareYes{root, {half, *unit_root}};
    }
    for (std::size_t i = 0; i < n; ++i) {
        unsigned k = variable_order(D, i);
        if (k % 2) return SquareNo{cert::OddVariableOrder{i, k}};
    }
    auto lowest = lowest_homogeneous_form(D);
    if (lowest.degree % 2) return SquareNo{cert::LowestFormNotASquare{lowest.form, lowest.degree}};
    auto square = detail::form_is_square(lowest.form);
    if (square && !*square) return SquareNo{cert::LowestFormNotASquare{lowest.form, lowest.degree}};
    return SquareUndetermined{"no square certificate applies to " +
                              std::string(square ? "a square lowest form" : "a form in more than two variables")};
}

/// Splits or certifies irreducibility of a degree-2 Weierstrass polynomial.
inline GermStatus quadratic_germ_test(const WeierstrassData& w) {
    if (w.degree != 2) throw InvalidArgument("quadratic_germ_test needs a degree-2 Weierstrass polynomial");
    const TruncatedSeries& e1 = w.coefficients[0];
    const TruncatedSeries& e2 = w.coefficients[1];
    TruncatedSeries disc = e1 * e1 - Rational(4) * e2;
    SquareTest test = is_local_square(disc.body(), w.order);

    if (auto* no = std::get_if<SquareNo>(&test)) return GermStatus::make(GermKind::SingularIrreducible, no->certificate);
    if (auto* und = std::get_if<SquareUndetermined>(&test)) return GermStatus::undetermined(und->reason);

    auto& yes = std::get<SquareYes>(test);
    GermStatus status = GermStatus::make(GermKind::SingularReducible, yes.certificate);
    if (yes.root) {
        const std::size_t n = w.var_count();
        TruncatedSeries y(Polynomial::variable(n, w.distinguished_var), w.order);
        // (y - (-e1 + r)/2) (y - (-e1 - r)/2)
        status.factors = std::pair{y + Rational(1, 2) * (e1 - *yes.root), y + Rational(1, 2) * (e1 + *yes.root)};
    }
    return status;
}

}  // namespace germ
