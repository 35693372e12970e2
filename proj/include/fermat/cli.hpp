#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/oracle.hpp"
#include "fermat/solver.hpp"
#include "fermat/svg.hpp"

// Command-line front end. Exit statuses: 0 success, 1 I/O failure,
// 2 usage error.

namespace fermat {

struct CliRequest {
    enum class Method { analytic, weiszfeld, grid };
    enum class Output { text, json };

    std::array<Point2, 3> points;
    Method method = Method::analytic;
    Output output = Output::text;
    std::optional<std::string> svg_path;
    SolverConfig config;
};

// Thrown by parse_args on -h/--help; carries the rendered help text.
// Control flow, not an error: callers print the text and exit 0.
struct HelpRequested {
    std::string text;
};

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline double parse_coordinate(const std::string& token) {
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size())
            throw UsageError("not a decimal literal: '" + token + "'");
        if (!std::isfinite(v))
            throw UsageError("coordinate must be finite: '" + token + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw UsageError("not a decimal literal: '" + token + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("coordinate out of range: '" + token + "'");
    }
}

inline std::array<Point2, 3> points_from_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open input file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("points"))
        throw UsageError("input file '" + path + "' must be an object with a \"points\" key");
    const auto& pts = doc["points"];
    if (!pts.is_array() || pts.size() != 3)
        throw UsageError("\"points\" must be an array of exactly three [x,y] pairs");
    std::array<Point2, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& p = pts[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
            throw UsageError("\"points\"[" + std::to_string(i) + "] must be an [x,y] number pair");
        out[i] = Point2(p[0].get<double>(), p[1].get<double>());
    }
    return out;
}

} // namespace detail

// Accepts positional `x1 y1 x2 y2 x3 y3` or `--input FILE` with a JSON
// body {"points": [[x,y],[x,y],[x,y]]}. Throws UsageError (exit 2) on
// malformed input and IoError (exit 1) when the input file cannot be
// read.
inline CliRequest parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Fermat point of a triangle", "fermat"};
    std::vector<std::string> coords;
    std::string input_path;
    std::string method = "analytic";
    std::string svg_path;
    bool as_json = false;
    bool no_oracle_check = false;
    double residual_tol = 0.0;
    double class_tol = 0.0;

    app.add_option("coords", coords, "x1 y1 x2 y2 x3 y3");
    auto* input_opt = app.add_option("--input", input_path, "JSON input file");
    app.add_option("--method", method, "analytic|weiszfeld|grid")
        ->check(CLI::IsMember({"analytic", "weiszfeld", "grid"}));
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--svg", svg_path, "write an SVG figure to this path");
    auto* rtol_opt = app.add_option("--residual-tol", residual_tol,
                                    "stationarity check tolerance (default 1e-9)");
    auto* ctol_opt = app.add_option("--class-tol", class_tol,
                                    "angle classification tolerance (default 1e-12)");
    app.add_flag("--no-oracle-check", no_oracle_check, "skip the numerical cross-check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested{app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CliRequest req;
    if (!coords.empty() && *input_opt)
        throw UsageError("give either six coordinates or --input, not both");
    if (coords.empty() && !*input_opt)
        throw UsageError("expected six coordinates `x1 y1 x2 y2 x3 y3` or --input FILE");
    if (*input_opt) {
        req.points = detail::points_from_json_file(input_path);
    } else {
        if (coords.size() != 6)
            throw UsageError("expected 6 coordinates, got " + std::to_string(coords.size()));
        std::array<double, 6> v;
        for (std::size_t i = 0; i < 6; ++i)
            v[i] = detail::parse_coordinate(coords[i]);
        req.points = {Point2(v[0], v[1]), Point2(v[2], v[3]), Point2(v[4], v[5])};
    }

    if (method == "weiszfeld")
        req.method = CliRequest::Method::weiszfeld;
    else if (method == "grid")
        req.method = CliRequest::Method::grid;
    if (as_json)
        req.output = CliRequest::Output::json;
    if (!svg_path.empty())
        req.svg_path = svg_path;
    if (*rtol_opt) {
        if (!(residual_tol > 0.0))
            throw UsageError("--residual-tol must be positive");
        req.config.residual_tolerance = residual_tol;
    }
    if (*ctol_opt) {
        if (!(class_tol > 0.0))
            throw UsageError("--class-tol must be positive");
        req.config.classification_tolerance = class_tol;
    }
    req.config.oracle_check = !no_oracle_check;
    return req;
}

namespace detail {

inline std::optional<std::string> degenerate_note(const Classification& cls) {
    switch (cls.kind) {
    case TriangleClass::DegenerateCollinear:
        return "degenerate input (collinear vertices): returning the middle vertex, the "
               "1-median of the collinear points; this extends the nondegenerate theory";
    case TriangleClass::DegenerateCoincident:
        return "degenerate input (coincident vertices): returning the repeated location, the "
               "1-median of the vertex multiset; this extends the nondegenerate theory";
    default:
        return std::nullopt;
    }
}

inline nlohmann::json result_to_json(const SolverResult& r, std::optional<std::string> note) {
    nlohmann::json diag;
    diag["residual_norm"] =
        r.diagnostics.residual_norm ? nlohmann::json(*r.diagnostics.residual_norm) : nullptr;
    diag["angles"] = r.diagnostics.angles_at_solution
                         ? nlohmann::json(*r.diagnostics.angles_at_solution)
                         : nullptr;
    diag["vertex_margins"] = r.diagnostics.vertex_margins
                                 ? nlohmann::json(*r.diagnostics.vertex_margins)
                                 : nullptr;
    diag["oracle_distance"] =
        r.diagnostics.oracle_distance ? nlohmann::json(*r.diagnostics.oracle_distance) : nullptr;

    nlohmann::json doc;
    doc["schema"] = 1;
    doc["classification"] = to_string(r.classification.kind);
    doc["vertex"] = r.classification.kind == TriangleClass::WideAngleAtVertex
                        ? nlohmann::json(r.classification.vertex)
                        : nullptr;
    doc["fermat_point"] = {r.fermat_point.x, r.fermat_point.y};
    doc["total_distance"] = r.total;
    doc["diagnostics"] = diag;
    doc["note"] = note ? nlohmann::json(*note) : nullptr;
    return doc;
}

inline void write_text(std::ostream& out, const SolverResult& r,
                       const std::optional<std::string>& note) {
    out << "classification:  " << to_string(r.classification.kind) << "\n";
    if (r.classification.kind == TriangleClass::WideAngleAtVertex)
        out << "vertex:          " << r.classification.vertex << "\n";
    out << "fermat_point:    " << fmt17(r.fermat_point.x) << " " << fmt17(r.fermat_point.y)
        << "\n";
    out << "total_distance:  " << fmt17(r.total) << "\n";
    out << "residual_norm:   "
        << (r.diagnostics.residual_norm ? fmt17(*r.diagnostics.residual_norm) : "n/a") << "\n";
    out << "angles:          ";
    if (r.diagnostics.angles_at_solution) {
        const auto& a = *r.diagnostics.angles_at_solution;
        out << fmt17(a[0]) << " " << fmt17(a[1]) << " " << fmt17(a[2]);
    } else {
        out << "n/a";
    }
    out << "\n";
    out << "vertex_margins:  ";
    if (r.diagnostics.vertex_margins) {
        const auto& m = *r.diagnostics.vertex_margins;
        out << fmt17(m[0]) << " " << fmt17(m[1]) << " " << fmt17(m[2]);
    } else {
        out << "n/a";
    }
    out << "\n";
    out << "oracle_distance: "
        << (r.diagnostics.oracle_distance ? fmt17(*r.diagnostics.oracle_distance) : "n/a") << "\n";
    if (r.diagnostics.conditioning_warning)
        out << "warning:         ill-conditioned input (smallest interior angle < 1e-9 rad or "
               "degenerate)\n";
    if (note)
        out << "note:            " << *note << "\n";
}

// Diagnostics for a point produced by one of the numerical methods.
inline SolverResult describe_method_point(const Point2& p, const Triangle& t,
                                          const Classification& cls) {
    SolverResult r;
    r.fermat_point = p;
    r.classification = cls;
    r.total = total_distance(p, t);
    const bool distinct = t.p1 != t.p2 && t.p2 != t.p3 && t.p3 != t.p1;
    if (distinct) {
        r.diagnostics.vertex_margins = {vertex_optimality_margin(1, t),
                                        vertex_optimality_margin(2, t),
                                        vertex_optimality_margin(3, t)};
        const auto angles = interior_angles(t);
        r.diagnostics.conditioning_warning = std::min({angles[0], angles[1], angles[2]}) < 1e-9;
    } else {
        r.diagnostics.conditioning_warning = true;
    }
    if (distinct && vertex_index_of(p, t) == 0) {
        r.diagnostics.residual_norm = unit_vector_residual(p, t).norm;
        r.diagnostics.angles_at_solution = {angle_at(p, t.p1, t.p2), angle_at(p, t.p2, t.p3),
                                            angle_at(p, t.p3, t.p1)};
    }
    return r;
}

} // namespace detail

// Runs the request and writes the report. Returns the process exit
// status: 0 on success, 1 when the SVG file cannot be written.
inline int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
    const Triangle t{req.points[0], req.points[1], req.points[2]};

    SolverConfig analytic_cfg = req.config;
    if (req.method != CliRequest::Method::analytic)
        analytic_cfg.oracle_check = false; // cross-check handled below
    const SolverResult analytic = fermat_point(t, analytic_cfg);

    SolverResult shown = analytic;
    std::optional<std::string> note = detail::degenerate_note(analytic.classification);
    switch (req.method) {
    case CliRequest::Method::analytic:
        break;
    case CliRequest::Method::weiszfeld: {
        const OracleReport rep = weiszfeld_from_centroid(t);
        shown = detail::describe_method_point(rep.point, t, analytic.classification);
        if (req.config.oracle_check)
            shown.diagnostics.oracle_distance = distance(rep.point, analytic.fermat_point);
        if (!rep.converged)
            note = "weiszfeld did not converge within " +
                   std::to_string(rep.iterations_or_levels) + " iterations";
        break;
    }
    case CliRequest::Method::grid: {
        const OracleReport rep = grid_refine_minimize(t);
        shown = detail::describe_method_point(rep.point, t, analytic.classification);
        if (req.config.oracle_check)
            shown.diagnostics.oracle_distance = distance(rep.point, analytic.fermat_point);
        break;
    }
    }

    if (req.output == CliRequest::Output::json) {
        out << detail::result_to_json(shown, note).dump(2) << "\n";
    } else {
        detail::write_text(out, shown, note);
    }

    if (req.svg_path) {
        try {
            emit_svg(t, shown, *req.svg_path);
        } catch (const IoError& e) {
            err << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return 0;
}

} // namespace fermat
