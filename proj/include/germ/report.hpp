#pragma once

// Text and JSON renderings of classification results.
//
// JSON rationals are "num/den" strings so that no value passes through
// binary floating point. Series serialize as term lists
// [[exponents...], "coefficient"].

#include <json.hpp>

#include <string>
#include <vector>

#include "germ/format.hpp"
#include "germ/scan.hpp"

namespace germ {

inline constexpr const char* tool_name = "germ";
inline constexpr const char* tool_version = "0.1.0";

inline std::string variable_name(std::size_t var) { return "z" + std::to_string(var + 1); }

// ---------------------------------------------------------------- text --

inline std::string describe(const Certificate& c) {
    struct Visitor {
        std::string operator()(const cert::OddVariableOrder& x) const {
            return "odd-order(" + variable_name(x.var) + ", " + std::to_string(x.order) + ")";
        }
        std::string operator()(const cert::LowestFormNotASquare& x) const {
            return "lowest-form-not-a-square(" + format_poly(x.form) + ", degree " + std::to_string(x.degree) + ")";
        }
        std::string operator()(const cert::MonomialUnitSquare& x) const {
            std::string half;
            for (std::size_t i = 0; i < x.half_exponent.size(); ++i)
                half += (i ? "," : "") + std::to_string(x.half_exponent[i]);
            return "monomial-unit-square(half-exponent (" + half + "), unit root " +
                   (x.unit_root ? format_poly(x.unit_root->body()) : std::string("symbolic over C")) + ")";
        }
        std::string operator()(const cert::DistinguishedVarDivides& x) const {
            return "distinguished-var-divides(" + variable_name(x.var) + ")";
        }
        std::string operator()(const cert::MultiEdgePolygon& x) const {
            return "multi-edge-polygon(" + std::to_string(x.edge_count) + ")";
        }
        std::string operator()(const cert::BinomialCoprimeEdge& x) const {
            return "binomial-coprime-edge(" + std::to_string(x.d) + ", " + std::to_string(x.m) + ")";
        }
        std::string operator()(const cert::BinomialNoncoprimeEdge& x) const {
            return "binomial-noncoprime-edge(" + std::to_string(x.gcd) + ")";
        }
        std::string operator()(const cert::EdgePolynomialSplits& x) const {
            return "edge-polynomial-splits(" + std::to_string(x.factor_count) + ")";
        }
        std::string operator()(const cert::SmoothPoint& x) const {
            return "smooth-point(gradient " + to_string(x.gradient) + ")";
        }
        std::string operator()(const cert::NonzeroValue& x) const {
            return "nonzero-value(" + to_string(x.value) + ")";
        }
        std::string operator()(const cert::DegreeOne&) const { return "degree-one"; }
    };
    return std::visit(Visitor{}, c);
}

/// Human-readable lines for one status, each prefixed by indent.
inline std::string render_status(const GermStatus& s, const std::string& indent = "") {
    std::string out = indent + "status: " + to_string(s.kind) + "\n";
    if (s.certificate) out += indent + "certificate: " + describe(*s.certificate) + "\n";
    if (s.kind == GermKind::Undetermined) out += indent + "reason: " + s.reason + "\n";
    if (s.preparation) {
        const auto& w = *s.preparation;
        out += indent + "weierstrass: degree " + std::to_string(w.degree) + " in " +
               variable_name(w.distinguished_var) + ", order " + std::to_string(w.order);
        if (!s.shear.empty()) {
            out += ", shear";
            for (std::size_t i = 0; i < s.shear.size(); ++i)
                if (s.shear[i] != 0)
                    out += " " + variable_name(i) + "<-" + variable_name(i) + "+" + to_string(s.shear[i]) + "*" +
                           variable_name(w.distinguished_var);
        }
        out += "\n" + indent + "w = " + format_poly(w.polynomial().body()) + "\n";
    }
    if (s.factors) {
        out += indent + "factor 1: " + format_poly(s.factors->first.body()) + "\n";
        out += indent + "factor 2: " + format_poly(s.factors->second.body()) + "\n";
    } else if (s.kind == GermKind::SingularReducible) {
        out += indent + "factors: not computed (certificate only)\n";
    }
    return out;
}

// ---------------------------------------------------------------- json --

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Json point_json(const Point& p) {
    Json a = Json::array();
    for (const auto& x : p) a.push_back(rational_json(x));
    return a;
}

inline Json terms_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& [m, c] : p.terms()) a.push_back(Json::array({Json(m), rational_json(c)}));
    return a;
}

/// Inverse of terms_json.
inline Polynomial polynomial_from_terms(const Json& terms, std::size_t var_count) {
    Polynomial p(var_count);
    for (const auto& t : terms) p.add_term(t.at(0).get<Monomial>(), parse_rational(t.at(1).get<std::string>()));
    return p;
}

inline Json certificate_json(const Certificate& c) {
    struct Visitor {
        Json operator()(const cert::OddVariableOrder& x) const {
            return {{"variable", variable_name(x.var)}, {"order", x.order}};
        }
        Json operator()(const cert::LowestFormNotASquare& x) const {
            return {{"form", format_poly(x.form)}, {"degree", x.degree}};
        }
        Json operator()(const cert::MonomialUnitSquare& x) const {
            Json j{{"half_exponent", x.half_exponent}, {"symbolic", !x.unit_root.has_value()}};
            j["unit_root"] = x.unit_root ? terms_json(x.unit_root->body()) : Json(nullptr);
            return j;
        }
        Json operator()(const cert::DistinguishedVarDivides& x) const { return {{"variable", variable_name(x.var)}}; }
        Json operator()(const cert::MultiEdgePolygon& x) const { return {{"edge_count", x.edge_count}}; }
        Json operator()(const cert::BinomialCoprimeEdge& x) const { return {{"d", x.d}, {"m", x.m}}; }
        Json operator()(const cert::BinomialNoncoprimeEdge& x) const { return {{"gcd", x.gcd}}; }
        Json operator()(const cert::EdgePolynomialSplits& x) const {
            Json coeffs = Json::array();
            for (const auto& q : x.edge_coefficients) coeffs.push_back(rational_json(q));
            return {{"factor_count", x.factor_count}, {"edge_coefficients", coeffs}};
        }
        Json operator()(const cert::SmoothPoint& x) const { return {{"gradient", point_json(x.gradient)}}; }
        Json operator()(const cert::NonzeroValue& x) const { return {{"value", rational_json(x.value)}}; }
        Json operator()(const cert::DegreeOne&) const { return Json::object(); }
    };
    return {{"kind", certificate_kind(c)}, {"data", std::visit(Visitor{}, c)}};
}

inline Json status_json(const GermStatus& s) {
    Json j;
    j["status"] = to_string(s.kind);
    j["certificate"] = s.certificate ? certificate_json(*s.certificate) : Json(nullptr);
    if (s.factors)
        j["factors"] = Json::array({terms_json(s.factors->first.body()), terms_json(s.factors->second.body())});
    else
        j["factors"] = nullptr;
    if (s.kind == GermKind::Undetermined) j["reason"] = s.reason;
    if (s.preparation) {
        const auto& w = *s.preparation;
        j["weierstrass"] = {{"degree", w.degree},
                            {"variable", variable_name(w.distinguished_var)},
                            {"order", w.order},
                            {"w", terms_json(w.polynomial().body())},
                            {"shear", point_json(s.shear)}};
    }
    return j;
}

inline Json scan_json(const ScanReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"t", rational_json(s.t)},
                           {"point", point_json(s.point)},
                           {"on_locus", s.on_locus},
                           {"status", to_string(s.status.kind)}});
    Json j{{"base_status", to_string(r.base.kind)}, {"samples", samples}, {"verdict", to_string(r.verdict)}};
    j["witness_t"] = r.witness ? rational_json(r.samples[*r.witness].t) : Json(nullptr);
    return j;
}

}  // namespace germ
