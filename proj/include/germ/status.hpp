#pragma once

// Classification results for germs and the certificates that back them.
// Every certificate carries the data an independent checker needs.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "germ/polynomial.hpp"
#include "germ/series.hpp"
#include "germ/weierstrass.hpp"

namespace germ {

namespace cert {

/// The minimal exponent of variable `var` in D is `order`, which is odd.
/// In a power-series ring a square has even minimal exponent in every
/// variable, so D is not a square.
struct OddVariableOrder {
    std::size_t var = 0;
    unsigned order = 0;
    friend bool operator==(const OddVariableOrder&, const OddVariableOrder&) = default;
};

/// The lowest homogeneous form of D is not a square over C (odd degree,
/// or a binary form with a root of odd multiplicity).
struct LowestFormNotASquare {
    Polynomial form;
    unsigned degree = 0;
    friend bool operator==(const LowestFormNotASquare&, const LowestFormNotASquare&) = default;
};

/// D = x^(2*half_exponent) * U with U(0) != 0, so D is a square over C.
/// unit_root is the square root of U with positive constant term when
/// U(0) is a rational square; otherwise the root is only symbolic.
struct MonomialUnitSquare {
    Monomial half_exponent;
    std::optional<TruncatedSeries> unit_root;
    friend bool operator==(const MonomialUnitSquare&, const MonomialUnitSquare&) = default;
};

/// e_d = 0, so the distinguished variable divides w.
struct DistinguishedVarDivides {
    std::size_t var = 0;
    friend bool operator==(const DistinguishedVarDivides&, const DistinguishedVarDivides&) = default;
};

struct MultiEdgePolygon {
    std::size_t edge_count = 0;
    friend bool operator==(const MultiEdgePolygon&, const MultiEdgePolygon&) = default;
};

/// Single edge (0,d)-(m,0) with only its endpoints in the support and
/// gcd(d, m) = 1.
struct BinomialCoprimeEdge {
    unsigned d = 0;
    unsigned m = 0;
    friend bool operator==(const BinomialCoprimeEdge&, const BinomialCoprimeEdge&) = default;
};

struct BinomialNoncoprimeEdge {
    unsigned gcd = 0;
    friend bool operator==(const BinomialNoncoprimeEdge&, const BinomialNoncoprimeEdge&) = default;
};

/// The edge polynomial has factor_count distinct complex roots (>= 2).
struct EdgePolynomialSplits {
    unsigned factor_count = 0;
    std::vector<Rational> edge_coefficients;
    friend bool operator==(const EdgePolynomialSplits&, const EdgePolynomialSplits&) = default;
};

struct SmoothPoint {
    Point gradient;
    friend bool operator==(const SmoothPoint&, const SmoothPoint&) = default;
};

struct NonzeroValue {
    Rational value;
    friend bool operator==(const NonzeroValue&, const NonzeroValue&) = default;
};

struct DegreeOne {
    friend bool operator==(const DegreeOne&, const DegreeOne&) = default;
};

}  // namespace cert

using Certificate =
    std::variant<cert::OddVariableOrder, cert::LowestFormNotASquare, cert::MonomialUnitSquare,
                 cert::DistinguishedVarDivides, cert::MultiEdgePolygon, cert::BinomialCoprimeEdge,
                 cert::BinomialNoncoprimeEdge, cert::EdgePolynomialSplits, cert::SmoothPoint,
                 cert::NonzeroValue, cert::DegreeOne>;

/// Stable kebab-case name of a certificate variant.
inline std::string certificate_kind(const Certificate& c) {
    static const char* const names[] = {
        "odd-variable-order",      "lowest-form-not-a-square", "monomial-unit-square",
        "distinguished-var-divides", "multi-edge-polygon",     "binomial-coprime-edge",
        "binomial-noncoprime-edge", "edge-polynomial-splits",  "smooth-point",
        "nonzero-value",           "degree-one"};
    return names[c.index()];
}

enum class GermKind { Unit, SmoothIrreducible, SingularIrreducible, SingularReducible, Undetermined };

inline std::string to_string(GermKind k) {
    switch (k) {
        case GermKind::Unit: return "Unit";
        case GermKind::SmoothIrreducible: return "SmoothIrreducible";
        case GermKind::SingularIrreducible: return "SingularIrreducible";
        case GermKind::SingularReducible: return "SingularReducible";
        case GermKind::Undetermined: return "Undetermined";
    }
    return "?";
}

inline bool is_irreducible(GermKind k) {
    return k == GermKind::SmoothIrreducible || k == GermKind::SingularIrreducible;
}

/// Outcome of classifying one germ.
///
/// Factors, when present, are monic in the distinguished variable, live in
/// the shifted (and sheared) coordinates of `preparation`, and multiply to
/// w modulo the preparation order.
struct GermStatus {
    GermKind kind = GermKind::Undetermined;
    std::optional<Certificate> certificate;
    std::optional<std::pair<TruncatedSeries, TruncatedSeries>> factors;
    std::string reason;  // Undetermined only
    std::optional<WeierstrassData> preparation;
    std::vector<Rational> shear;

    static GermStatus make(GermKind kind, std::optional<Certificate> c = std::nullopt) {
        GermStatus s;
        s.kind = kind;
        s.certificate = std::move(c);
        return s;
    }

    static GermStatus undetermined(std::string reason) {
        GermStatus s;
        s.reason = std::move(reason);
        return s;
    }

    friend bool operator==(const GermStatus&, const GermStatus&) = default;
};

}  // namespace germ
