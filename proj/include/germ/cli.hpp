#pragma once

// Command-line front end. run_cli is the whole program; tools/germ.cpp
// only forwards argv to it.
//
// Exit codes: 0 success (Undetermined included), 1 usage, 2 parse error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "germ/elimination.hpp"
#include "germ/parse.hpp"
#include "germ/report.hpp"

namespace germ {

namespace detail {

struct CliOptions {
    std::string poly, f_text, g_text, h_text, point, curve, t_values, var;
    unsigned order = default_truncation_order;
    bool json = false;
    std::string demo;
};

inline std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

inline Point point_or_origin(const std::string& text, std::size_t n) {
    if (text.empty()) return Point(n, Rational(0));
    Point p = parse_rational_list(text);
    if (p.size() != n)
        throw DimensionMismatch("point has " + std::to_string(p.size()) + " coordinates, polynomial has " +
                                std::to_string(n) + " variables");
    return p;
}

/// Parses several polynomials into one common ring z1..zn, n large enough
/// for every text and for `min_vars`.
inline std::vector<Polynomial> parse_common(const std::vector<std::string>& texts, std::size_t min_vars) {
    std::size_t n = min_vars;
    for (const auto& t : texts) n = std::max(n, parse_poly(t).var_count());
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_poly(t, n));
    return out;
}

inline Json envelope(const std::string& command, const CliOptions& o, const Point& point, Json result,
                     std::chrono::steady_clock::time_point start) {
    Json input;
    if (!o.poly.empty()) input["poly"] = o.poly;
    if (!o.f_text.empty()) input["f"] = o.f_text;
    if (!o.g_text.empty()) input["g"] = o.g_text;
    if (!o.h_text.empty()) input["h"] = o.h_text;
    input["point"] = point_json(point);
    input["order"] = o.order;
    auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    return Json{{"tool", tool_name},     {"version", tool_version}, {"command", command},
                {"input", input},        {"result", result},        {"timing_ms", elapsed.count()}};
}

inline void run_demo_counterexample(std::ostream& out) {
    const unsigned order = default_truncation_order;
    Polynomial f = parse_poly("z3^2 - z1*z2^2");
    out << "f = " << format_poly(f) << "\n\n";

    out << "[1] germ at the origin (0,0,0)\n";
    GermStatus origin = analyze_germ({f, Point(3, Rational(0)), order, std::nullopt});
    out << render_status(origin, "    ");
    auto co = coprime_at(f, derivative(f, 2), Point(3, Rational(0)), 2);
    Polynomial base_res = co.resultant.drop_variable(2);
    out << "    Res_z3(f, df/dz3) = " << format_poly(co.resultant) << " (coprime: "
        << (co.coprime_germ_at_point ? "yes" : "no") << ")\n";
    out << "    zero set of the resultant discrete near (0,0): "
        << (zero_set_discrete(base_res, Point(2, Rational(0))) ? "yes" : "no") << "\n\n";

    Point p{1, 0, 0};
    out << "[2] germ at " << to_string(p) << ", shifted to the origin\n";
    out << "    f(p + x) = " << format_poly(shift(f, p)) << "\n";
    GermStatus shifted = analyze_germ({f, p, order, std::nullopt});
    out << render_status(shifted, "    ");
    if (shifted.factors && shifted.preparation) {
        TruncatedSeries product = shifted.factors->first * shifted.factors->second;
        bool ok = congruent(product.body(), shifted.preparation->polynomial().body(), shifted.preparation->order);
        out << "    factor 1 * factor 2 == w mod degree " << shifted.preparation->order << ": "
            << (ok ? "yes" : "no") << "\n";
    }
    out << "\n";

    std::vector<Rational> ts{Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)};
    std::vector<Polynomial> curve{parse_curve_coordinate("t"), parse_curve_coordinate("0"),
                                  parse_curve_coordinate("0")};
    out << "[3] scan along (t,0,0), t in {1,1/2,1/4,1/8}\n";
    ScanReport scan = scan_stability(f, Point(3, Rational(0)), curve, ts, order);
    for (const auto& s : scan.samples)
        out << "    t=" << to_string(s.t) << " " << to_string(s.point) << " "
            << (s.on_locus ? "on-locus" : "off-locus") << " " << to_string(s.status.kind) << "\n";
    out << "    verdict: " << to_string(scan.verdict) << "\n\n";

    out << "summary: the germ of f is irreducible at the origin but reducible at (t,0,0) for every\n"
           "sampled t != 0, so irreducibility of germs is not stable in dimension 3.\n";
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::CliOptions;
    CLI::App app{"Exact analysis of germs of polynomial functions at rational points", "germ"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);
    CliOptions o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", o.order, "truncation order (total degree)")->check(CLI::Range(2u, 64u));
        sub->add_flag("--json", o.json, "emit a JSON report");
    };

    auto* analyze = app.add_subcommand("analyze", "classify the germ of a polynomial at a point");
    analyze->add_option("--poly", o.poly, "polynomial, e.g. \"z3^2 - z1*z2^2\"")->required();
    analyze->add_option("--point", o.point, "comma-separated rational coordinates (default: origin)");
    analyze->add_option("--var", o.var, "distinguished variable (default: last)");
    add_common(analyze);

    auto* scan = app.add_subcommand("scan", "classify germs along a parametric curve");
    scan->add_option("--poly", o.poly, "polynomial")->required();
    scan->add_option("--point", o.point, "base point = curve(0) (default: origin)");
    scan->add_option("--curve", o.curve, "coordinates as polynomials in t, e.g. \"t,0,0\"")->required();
    scan->add_option("--t", o.t_values, "comma-separated rational parameter values")->required();
    add_common(scan);

    auto* prepare = app.add_subcommand("prepare", "Weierstrass preparation f = u * w at a point");
    prepare->add_option("--poly", o.poly, "polynomial")->required();
    prepare->add_option("--point", o.point, "point (default: origin)");
    prepare->add_option("--var", o.var, "distinguished variable (default: last)");
    add_common(prepare);

    auto* res = app.add_subcommand("resultant", "Sylvester resultant in one variable");
    res->add_option("--f", o.f_text, "first polynomial")->required();
    res->add_option("--g", o.g_text, "second polynomial")->required();
    res->add_option("--var", o.var, "eliminated variable")->required();
    add_common(res);

    auto* disc = app.add_subcommand("discriminant", "discriminant in one variable");
    disc->add_option("--poly", o.poly, "polynomial")->required();
    disc->add_option("--var", o.var, "variable")->required();
    add_common(disc);

    auto* coprime = app.add_subcommand("coprime", "coprimality of two germs at a point");
    coprime->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    coprime->add_option("--g", o.g_text, "first polynomial")->required();
    coprime->add_option("--h", o.h_text, "second polynomial")->required();
    coprime->add_option("--point", o.point, "point (default: origin)");
    coprime->add_option("--var", o.var, "distinguished variable (default: last)");
    add_common(coprime);

    auto* demo = app.add_subcommand("demo", "canned walkthroughs");
    demo->add_option("name", o.demo, "demo name")->required()->check(CLI::IsMember({"counterexample"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (*analyze || *prepare) {
            Polynomial f = parse_poly(o.poly);
            if (!o.var.empty()) f = parse_poly(o.poly, std::max(f.var_count(), parse_variable_name(o.var) + 1));
            Point p = detail::point_or_origin(o.point, f.var_count());
            std::optional<std::size_t> var;
            if (!o.var.empty()) var = parse_variable_name(o.var);

            if (*analyze) {
                GermStatus s = analyze_germ({f, p, o.order, var});
                if (o.json) {
                    out << detail::envelope("analyze", o, p, status_json(s), start).dump(2) << "\n";
                } else {
                    out << "germ of " << format_poly(f) << " at " << to_string(p) << ", order " << o.order << "\n";
                    out << render_status(s);
                }
                return 0;
            }

            std::size_t j = var.value_or(f.var_count() - 1);
            Polynomial g = shift(f, p);
            std::vector<Rational> shear;
            if (!regular_order(g, j).regular) {
                auto reg = make_regular(g, j);
                g = reg.poly;
                shear = reg.report.shear;
            }
            WeierstrassData w = weierstrass_prepare(g, j, o.order);
            if (o.json) {
                Json coeffs = Json::array();
                for (const auto& e : w.coefficients) coeffs.push_back(terms_json(e.body()));
                Json result{{"degree", w.degree},
                            {"variable", variable_name(j)},
                            {"shear", point_json(shear)},
                            {"unit", terms_json(w.unit.body())},
                            {"coefficients", coeffs},
                            {"w", terms_json(w.polynomial().body())}};
                out << detail::envelope("prepare", o, p, result, start).dump(2) << "\n";
            } else {
                out << "local polynomial: " << format_poly(g) << "\n";
                out << "degree " << w.degree << " in " << variable_name(j) << ", order " << o.order << "\n";
                out << "u = " << format_poly(w.unit.body()) << "\n";
                for (unsigned i = 0; i < w.degree; ++i)
                    out << "e" << i + 1 << " = " << format_poly(w.coefficients[i].body()) << "\n";
                out << "w = " << format_poly(w.polynomial().body()) << "\n";
            }
            return 0;
        }

        if (*scan) {
            Polynomial f = parse_poly(o.poly);
            Point p = detail::point_or_origin(o.point, f.var_count());
            std::vector<Polynomial> curve;
            for (const auto& c : detail::split_top_level(o.curve)) curve.push_back(parse_curve_coordinate(c));
            std::vector<Rational> ts = parse_rational_list(o.t_values);
            ScanReport r = scan_stability(f, p, curve, ts, o.order);
            if (o.json) {
                Json result = status_json(r.base);
                result["scan"] = scan_json(r);
                out << detail::envelope("scan", o, p, result, start).dump(2) << "\n";
            } else {
                out << "scan of " << format_poly(f) << " from " << to_string(p) << ", order " << o.order << "\n";
                out << "base status: " << to_string(r.base.kind);
                if (r.base.certificate) out << " [" << describe(*r.base.certificate) << "]";
                out << "\n";
                for (const auto& s : r.samples) {
                    out << "t=" << to_string(s.t) << " " << to_string(s.point) << " "
                        << (s.on_locus ? "on-locus" : "off-locus") << " " << to_string(s.status.kind);
                    if (s.status.certificate) out << " [" << describe(*s.status.certificate) << "]";
                    out << "\n";
                }
                out << "verdict: " << to_string(r.verdict);
                if (r.witness) out << " (witness t=" << to_string(r.samples[*r.witness].t) << ")";
                out << "\n";
            }
            return 0;
        }

        if (*res || *coprime) {
            std::size_t j = o.var.empty() ? 0 : parse_variable_name(o.var);
            auto polys = detail::parse_common({*res ? o.f_text : o.g_text, *res ? o.g_text : o.h_text},
                                              o.var.empty() ? 1 : j + 1);
            std::size_t n = polys[0].var_count();
            if (o.var.empty()) j = n - 1;
            if (*res) {
                Polynomial r = resultant(polys[0], polys[1], j);
                if (o.json)
                    out << detail::envelope("resultant", o, {}, {{"resultant", format_poly(r)}, {"terms", terms_json(r)}},
                                            start).dump(2)
                        << "\n";
                else
                    out << format_poly(r) << "\n";
                return 0;
            }
            Point p = detail::point_or_origin(o.point, n);
            CoprimeReport c = coprime_at(polys[0], polys[1], p, j);
            if (o.json) {
                Json result{{"resultant", format_poly(c.resultant)},
                            {"coprime", c.coprime_germ_at_point},
                            {"vanishing_at_point", c.vanishing_at_point},
                            {"variable", variable_name(j)},
                            {"shear", point_json(c.shear)}};
                out << detail::envelope("coprime", o, p, result, start).dump(2) << "\n";
            } else {
                out << "resultant in " << variable_name(j) << ": " << format_poly(c.resultant) << "\n";
                out << "coprime at " << to_string(p) << ": " << (c.coprime_germ_at_point ? "yes" : "no") << "\n";
                out << "resultant vanishes at the point: " << (c.vanishing_at_point ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (*disc) {
            std::size_t j = parse_variable_name(o.var);
            Polynomial f = parse_poly(o.poly);
            if (j >= f.var_count()) f = parse_poly(o.poly, j + 1);
            Polynomial d = discriminant(f, j);
            if (o.json)
                out << detail::envelope("discriminant", o, {}, {{"discriminant", format_poly(d)}, {"terms", terms_json(d)}},
                                        start).dump(2)
                    << "\n";
            else
                out << format_poly(d) << "\n";
            return 0;
        }

        if (*demo) {
            detail::run_demo_counterexample(out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace germ
