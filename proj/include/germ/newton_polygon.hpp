#pragma once

// Newton polygon of a bivariate Weierstrass polynomial and the branch
// criteria read off from it.

#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "germ/status.hpp"
#include "germ/univariate.hpp"

namespace germ {

/// Exponent pair (i, j): i for the base variable x, j for the
/// distinguished variable y.
using LatticePoint = std::pair<unsigned, unsigned>;

struct NewtonEdge {
    LatticePoint start;  // upper-left end
    LatticePoint end;    // lower-right end
    unsigned run = 0;    // primitive step in i
    unsigned drop = 0;   // primitive step in j
    unsigned lattice_length = 0;
    /// Coefficients at start + k*(run, -drop), k = 0..lattice_length.
    std::vector<Rational> edge_coefficients;
};

struct NewtonPolygon {
    std::set<LatticePoint> support;
    std::vector<NewtonEdge> edges;
};

/// Lower convex hull of the support of w from (0, d) to (m, 0), where m is
/// the order of e_d.
inline NewtonPolygon newton_polygon(const WeierstrassData& w) {
    if (w.var_count() != 2) throw DimensionMismatch("newton_polygon needs a bivariate germ");
    if (w.coefficients.back().is_zero())
        throw DistinguishedVarDividesError("e_d = 0: the distinguished variable divides w");
    const std::size_t y = w.distinguished_var;
    const std::size_t x = 1 - y;

    NewtonPolygon poly;
    std::map<LatticePoint, Rational> coeff;
    const TruncatedSeries wp = w.polynomial();
    for (const auto& [m, c] : wp.body().terms()) {
        poly.support.insert({m[x], m[y]});
        coeff[{m[x], m[y]}] = c;
    }
    const unsigned m_end = variable_order(w.coefficients.back().body(), x);

    // Lowest point in each column up to m_end.
    std::map<unsigned, unsigned> lowest;
    for (const auto& [i, j] : poly.support)
        if (i <= m_end && (!lowest.count(i) || j < lowest[i])) lowest[i] = j;

    auto cross = [](LatticePoint o, LatticePoint a, LatticePoint b) {
        long ax = long(a.first) - long(o.first), ay = long(a.second) - long(o.second);
        long bx = long(b.first) - long(o.first), by = long(b.second) - long(o.second);
        return ax * by - ay * bx;
    };
    std::vector<LatticePoint> hull;
    for (const auto& [i, j] : lowest) {
        LatticePoint p{i, j};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }

    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
        NewtonEdge e;
        e.start = hull[k];
        e.end = hull[k + 1];
        unsigned di = e.end.first - e.start.first;
        unsigned dj = e.start.second - e.end.second;
        e.lattice_length = std::gcd(di, dj);
        e.run = di / e.lattice_length;
        e.drop = dj / e.lattice_length;
        for (unsigned s = 0; s <= e.lattice_length; ++s) {
            LatticePoint q{e.start.first + s * e.run, e.start.second - s * e.drop};
            auto it = coeff.find(q);
            e.edge_coefficients.push_back(it == coeff.end() ? Rational(0) : it->second);
        }
        poly.edges.push_back(std::move(e));
    }
    return poly;
}

/// Branch criteria from the polygon; Undetermined when none applies.
inline GermStatus polygon_verdict(const NewtonPolygon& poly) {
    if (poly.edges.size() >= 2)
        return GermStatus::make(GermKind::SingularReducible, cert::MultiEdgePolygon{poly.edges.size()});
    if (poly.edges.empty()) return GermStatus::undetermined("empty Newton polygon");

    const NewtonEdge& e = poly.edges.front();
    const unsigned d = e.start.second - e.end.second;
    const unsigned m = e.end.first - e.start.first;
    bool binomial = true;
    for (std::size_t k = 1; k + 1 < e.edge_coefficients.size(); ++k)
        if (e.edge_coefficients[k] != 0) binomial = false;
    if (binomial) {
        if (e.lattice_length == 1)
            return GermStatus::make(GermKind::SingularIrreducible, cert::BinomialCoprimeEdge{d, m});
        return GermStatus::make(GermKind::SingularReducible, cert::BinomialNoncoprimeEdge{e.lattice_length});
    }
    long roots = univariate::squarefree_degree(e.edge_coefficients);
    if (roots >= 2)
        return GermStatus::make(GermKind::SingularReducible,
                                cert::EdgePolynomialSplits{static_cast<unsigned>(roots), e.edge_coefficients});
    return GermStatus::undetermined("degenerate single edge: edge polynomial has one repeated root");
}

}  // namespace germ
