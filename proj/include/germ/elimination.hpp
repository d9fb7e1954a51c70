#pragma once

// Sylvester resultants, discriminants, coprimality of germs at a point,
// and the discreteness test for the zero set of a resultant.

#include <cstddef>
#include <utility>
#include <vector>

#include "germ/polynomial.hpp"
#include "germ/weierstrass.hpp"

namespace germ {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

namespace detail {

inline Polynomial cofactor_determinant(const PolyMatrix& m, std::size_t var_count) {
    const std::size_t size = m.size();
    if (size == 1) return m[0][0];
    Polynomial det(var_count);
    for (std::size_t col = 0; col < size; ++col) {
        if (m[0][col].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < size; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][col] * cofactor_determinant(minor, var_count);
        if (col % 2)
            det -= term;
        else
            det += term;
    }
    return det;
}

// Fraction-free Gaussian elimination; every division is exact.
inline Polynomial bareiss_determinant(PolyMatrix m, std::size_t var_count) {
    const std::size_t size = m.size();
    Polynomial previous = Polynomial::constant(var_count, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && m[pivot][k].is_zero()) ++pivot;
            if (pivot == size) return Polynomial(var_count);
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, previous);
            }
            m[i][k] = Polynomial(var_count);
        }
        previous = m[k][k];
    }
    return negate ? -m[size - 1][size - 1] : m[size - 1][size - 1];
}

}  // namespace detail

/// Determinant of a square matrix of polynomials.
inline Polynomial determinant(const PolyMatrix& m, std::size_t var_count) {
    if (m.empty()) return Polynomial::constant(var_count, 1);
    if (m.size() <= 4) return detail::cofactor_determinant(m, var_count);
    return detail::bareiss_determinant(m, var_count);
}

/// Sylvester matrix of f and g as polynomials in z_var; rows hold
/// coefficients from the highest power down.
inline PolyMatrix sylvester_matrix(const Polynomial& f, const Polynomial& g, std::size_t var) {
    auto cf = f.coefficients_in(var);
    auto cg = g.coefficients_in(var);
    const std::size_t df = cf.size() - 1, dg = cg.size() - 1;
    const std::size_t size = df + dg;
    const std::size_t n = f.var_count();
    PolyMatrix m(size, std::vector<Polynomial>(size, Polynomial(n)));
    for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k <= df; ++k) m[r][r + k] = cf[df - k];
    for (std::size_t r = 0; r < df; ++r)
        for (std::size_t k = 0; k <= dg; ++k) m[dg + r][r + k] = cg[dg - k];
    return m;
}

/// Res_{z_var}(f, g). The result lives in the same ring as f and g and
/// does not involve z_var.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var) {
    if (f.var_count() != g.var_count()) throw DimensionMismatch("polynomials live in different rings");
    f.check_index(var);
    if (f.degree_in(var) == 0 || g.degree_in(var) == 0 || f.is_zero() || g.is_zero())
        throw DegreeZero("resultant needs positive degree in the eliminated variable");
    return determinant(sylvester_matrix(f, g, var), f.var_count());
}

/// (-1)^(d(d-1)/2) * Res(f, df/dz_var) / lc. For y^2 + a y + b this is a^2 - 4b.
inline Polynomial discriminant(const Polynomial& f, std::size_t var) {
    f.check_index(var);
    const unsigned d = f.degree_in(var);
    if (d < 2) throw DegreeTooSmall("discriminant needs degree >= 2");
    Polynomial lc = f.coefficients_in(var)[d];
    if (!lc.is_constant()) throw NonConstantLeadingCoefficient("leading coefficient must be a rational constant");
    Polynomial r = resultant(f, derivative(f, var), var) * (1 / lc.constant_term());
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

struct CoprimeReport {
    /// Res_{z_var} of the shifted (and, if needed, sheared) inputs.
    Polynomial resultant;
    bool coprime_germ_at_point = false;
    bool vanishing_at_point = false;
    std::size_t var = 0;
    /// Shear shared by both inputs; empty when none was needed.
    std::vector<Rational> shear;
};

/// Coprimality of the germs of g and h at p. A nonzero resultant is the
/// witness that the germs stay coprime at every nearby point.
inline CoprimeReport coprime_at(const Polynomial& g, const Polynomial& h, const Point& p, std::size_t var) {
    if (g.var_count() != h.var_count()) throw DimensionMismatch("polynomials live in different rings");
    Polynomial gs = shift(g, p);
    Polynomial hs = shift(h, p);
    CoprimeReport report;
    report.var = var;
    Polynomial product = gs * hs;
    if (product.is_zero()) throw NotRegular("the zero polynomial is not regular");
    if (!regular_order(product, var).regular) {
        auto reg = make_regular(product, var);
        report.shear = reg.report.shear;
        gs = apply_shear(gs, var, report.shear);
        hs = apply_shear(hs, var, report.shear);
    }
    report.resultant = resultant(gs, hs, var);
    report.coprime_germ_at_point = !report.resultant.is_zero();
    report.vanishing_at_point = report.resultant.constant_term() == 0;
    return report;
}

/// Decides whether {R = 0} is discrete near p, where R is a polynomial in
/// the base variables (the variables left after elimination).
inline bool zero_set_discrete(const Polynomial& resultant_poly, const Point& p) {
    if (p.size() != resultant_poly.var_count()) throw DimensionMismatch("point dimension differs from variable count");
    if (resultant_poly.is_zero()) return false;
    if (evaluate(resultant_poly, p) != 0) return true;
    return resultant_poly.var_count() <= 1;
}

}  // namespace germ
