#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include "fermat/solver.hpp"

// Standalone SVG 1.1 figure: the triangle, the Fermat point with its
// three spokes, and (interior case) the two Torricelli circles used by
// the construction. Output is a pure function of the inputs, so
// repeated renders are byte-identical.

namespace fermat {

namespace detail {

inline std::string svg_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// SVG y grows downward; emit mirrored y to keep the mathematical
// orientation.
inline std::string svg_xy(const Point2& p) { return svg_num(p.x) + "," + svg_num(-p.y); }

struct SvgBounds {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool empty = true;
    void add(const Point2& p, double pad = 0.0) {
        if (empty) {
            xmin = p.x - pad;
            xmax = p.x + pad;
            ymin = p.y - pad;
            ymax = p.y + pad;
            empty = false;
            return;
        }
        xmin = std::min(xmin, p.x - pad);
        xmax = std::max(xmax, p.x + pad);
        ymin = std::min(ymin, p.y - pad);
        ymax = std::max(ymax, p.y + pad);
    }
};

} // namespace detail

inline std::string render_svg(const Triangle& t, const SolverResult& result) {
    using detail::svg_num;
    using detail::svg_xy;

    const bool interior =
        result.classification.kind == TriangleClass::AllAnglesBelowTwoPiOverThree;

    detail::SvgBounds box;
    box.add(t.p1);
    box.add(t.p2);
    box.add(t.p3);
    box.add(result.fermat_point);

    Circle c1, c2;
    if (interior) {
        c1 = torricelli_circle(t.p1, t.p2, t.p3);
        c2 = torricelli_circle(t.p2, t.p3, t.p1);
        box.add(c1.center, c1.radius);
        box.add(c2.center, c2.radius);
    }

    double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    if (span <= 0.0)
        span = 1.0;
    const double margin = 0.1 * span;
    const double stroke = 0.008 * span;
    const double dot = 0.015 * span;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    s += svg_num(box.xmin - margin) + " " + svg_num(-box.ymax - margin) + " " +
         svg_num(box.xmax - box.xmin + 2.0 * margin) + " " +
         svg_num(box.ymax - box.ymin + 2.0 * margin) + "\">\n";

    s += "  <polygon points=\"" + svg_xy(t.p1) + " " + svg_xy(t.p2) + " " + svg_xy(t.p3) +
         "\" fill=\"none\" stroke=\"#1b3a6b\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";

    if (interior) {
        for (const Circle& c : {c1, c2}) {
            s += "  <circle cx=\"" + svg_num(c.center.x) + "\" cy=\"" + svg_num(-c.center.y) +
                 "\" r=\"" + svg_num(c.radius) +
                 "\" fill=\"none\" stroke=\"#9aa7b8\" stroke-width=\"" + svg_num(0.5 * stroke) +
                 "\" stroke-dasharray=\"" + svg_num(2.0 * stroke) + "\"/>\n";
            s += "  <circle cx=\"" + svg_num(c.center.x) + "\" cy=\"" + svg_num(-c.center.y) +
                 "\" r=\"" + svg_num(0.6 * dot) + "\" fill=\"#9aa7b8\"/>\n";
        }
    }

    for (int i = 1; i <= 3; ++i) {
        const Point2& v = t.vertex(i);
        s += "  <line x1=\"" + svg_num(result.fermat_point.x) + "\" y1=\"" +
             svg_num(-result.fermat_point.y) + "\" x2=\"" + svg_num(v.x) + "\" y2=\"" +
             svg_num(-v.y) + "\" stroke=\"#b8332a\" stroke-width=\"" + svg_num(stroke) + "\"/>\n";
    }

    for (int i = 1; i <= 3; ++i) {
        const Point2& v = t.vertex(i);
        s += "  <circle cx=\"" + svg_num(v.x) + "\" cy=\"" + svg_num(-v.y) + "\" r=\"" +
             svg_num(dot) + "\" fill=\"#1b3a6b\"/>\n";
    }
    s += "  <circle cx=\"" + svg_num(result.fermat_point.x) + "\" cy=\"" +
         svg_num(-result.fermat_point.y) + "\" r=\"" + svg_num(dot) + "\" fill=\"#b8332a\"/>\n";
    s += "</svg>\n";
    return s;
}

inline void emit_svg(const Triangle& t, const SolverResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << render_svg(t, result);
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

} // namespace fermat
