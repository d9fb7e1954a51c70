#pragma once

// Classification of germs along a rational parametric curve through a base
// point: finite evidence for or against stability of irreducibility.

#include <optional>
#include <string>
#include <vector>

#include "germ/analyze.hpp"

namespace germ {

enum class ScanVerdict { StableEvidence, Unstable, Inconclusive };

inline std::string to_string(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::StableEvidence: return "STABLE_EVIDENCE";
        case ScanVerdict::Unstable: return "UNSTABLE";
        case ScanVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct ScanSample {
    Rational t;
    Point point;
    bool on_locus = false;
    GermStatus status;
    friend bool operator==(const ScanSample&, const ScanSample&) = default;
};

struct ScanReport {
    std::vector<Polynomial> curve;  // coordinates as polynomials in t
    GermStatus base;
    std::vector<ScanSample> samples;  // input order
    ScanVerdict verdict = ScanVerdict::Inconclusive;
    std::optional<std::size_t> witness;  // index into samples when Unstable
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

inline Point curve_point(const std::vector<Polynomial>& curve, const Rational& t) {
    Point q;
    q.reserve(curve.size());
    for (const auto& c : curve) q.push_back(evaluate(c, Point{t}));
    return q;
}

inline ScanReport scan_stability(const Polynomial& f, const Point& base, const std::vector<Polynomial>& curve,
                                 const std::vector<Rational>& t_values,
                                 unsigned order = default_truncation_order) {
    if (curve.size() != f.var_count() || base.size() != f.var_count())
        throw DimensionMismatch("curve, point and polynomial dimensions differ");
    for (const auto& c : curve)
        if (c.var_count() != 1) throw DimensionMismatch("curve coordinates must be univariate in t");
    if (t_values.empty()) throw InvalidArgument("scan needs at least one t value");
    if (curve_point(curve, 0) != base) throw InvalidArgument("curve(0) must equal the base point");

    ScanReport report;
    report.curve = curve;
    report.base = analyze_germ({f, base, order, std::nullopt});
    for (const Rational& t : t_values) {
        ScanSample s;
        s.t = t;
        s.point = curve_point(curve, t);
        s.on_locus = evaluate(f, s.point) == 0;
        s.status = analyze_germ({f, s.point, order, std::nullopt});
        report.samples.push_back(std::move(s));
    }

    bool any_on_locus = false, any_undetermined = false, all_irreducible = true;
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        const ScanSample& s = report.samples[i];
        if (!s.on_locus) continue;
        any_on_locus = true;
        if (s.status.kind == GermKind::Undetermined) any_undetermined = true;
        if (!is_irreducible(s.status.kind)) all_irreducible = false;
        if (!report.witness && s.t != 0 && s.status.kind == GermKind::SingularReducible &&
            is_irreducible(report.base.kind))
            report.witness = i;
    }
    if (report.witness)
        report.verdict = ScanVerdict::Unstable;
    else if (!any_on_locus || any_undetermined)
        report.verdict = ScanVerdict::Inconclusive;
    else if (all_irreducible)
        report.verdict = ScanVerdict::StableEvidence;
    else
        report.verdict = ScanVerdict::Inconclusive;
    return report;
}

}  // namespace germ
