#pragma once

#include <array>
#include <limits>
#include <optional>

#include "fermat/geometry.hpp"
#include "fermat/objective.hpp"
#include "fermat/oracle.hpp"

// Analytic Fermat-point computation. A triangle with an interior angle
// at or above 2*pi/3 has its Fermat point on that vertex; otherwise
// the point is the unique interior location seeing all three sides at
// 2*pi/3, constructed by intersecting two Torricelli circles. Every
// interior answer is certified afterward by the unit-vector residual
// and, optionally, an independent Weiszfeld run.

namespace fermat {

struct SolverConfig {
    double classification_tolerance = kDefaultClassificationTolerance; // radians
    double residual_tolerance = 1e-9;
    bool oracle_check = true;
};

struct Diagnostics {
    // Stationarity residual |e1+e2+e3| at the solution; absent when the
    // solution sits on a vertex, where the residual is undefined.
    std::optional<double> residual_norm;
    // Angles P1-P0-P2, P2-P0-P3, P3-P0-P1 at an interior solution.
    std::optional<std::array<double, 3>> angles_at_solution;
    // 2*cos(alpha_i/2) per vertex; absent when vertices coincide.
    std::optional<std::array<double, 3>> vertex_margins;
    // Distance to the independent Weiszfeld minimizer, when checked.
    std::optional<double> oracle_distance;
    // Set when the smallest interior angle is below 1e-9 radians (or
    // the triangle is degenerate); oracle agreement may degrade.
    bool conditioning_warning = false;
};

struct SolverResult {
    Point2 fermat_point;
    Classification classification;
    double total = 0.0;
    Diagnostics diagnostics;
};

// The circle through side_a and side_b from whose near arc (the arc on
// the same side of the chord as `opposite`) the chord subtends an
// inscribed angle of 2*pi/3. By the inscribed-angle theorem its radius
// is chord/sqrt(3) and its center sits on the perpendicular bisector
// at chord/(2*sqrt(3)) from the midpoint, across the chord from
// `opposite`.
inline Circle torricelli_circle(const Point2& side_a, const Point2& side_b,
                                const Point2& opposite) {
    if (side_a == side_b)
        throw DegenerateSide("torricelli_circle: chord endpoints coincide");
    const double orient = signed_area2(side_a, side_b, opposite);
    if (orient == 0.0)
        throw CollinearOpposite("torricelli_circle: opposite point lies on the chord line");

    const Vec2 chord = side_b - side_a;
    const double len = norm(chord);
    const Point2 mid{0.5 * (side_a.x + side_b.x), 0.5 * (side_a.y + side_b.y)};
    const Vec2 left_normal{-chord.dy / len, chord.dx / len};
    const double side = orient > 0.0 ? 1.0 : -1.0; // +1 if `opposite` lies left of a->b
    const double offset = len / (2.0 * std::numbers::sqrt3);
    return Circle(mid + (-side * offset) * left_normal, len / std::numbers::sqrt3);
}

// The unique interior point from which every side subtends 2*pi/3,
// obtained as the intersection of the Torricelli circles over sides
// p1p2 and p2p3 that lies inside the triangle. Requires all interior
// angles below 2*pi/3.
inline Point2 isogonic_point(const Triangle& t,
                             double classification_tolerance = kDefaultClassificationTolerance) {
    const Classification cls = classify(t, classification_tolerance);
    if (cls.kind != TriangleClass::AllAnglesBelowTwoPiOverThree)
        throw NotAllAnglesBelowThreshold(
            "isogonic_point: requires all interior angles below 2*pi/3, got " +
            to_string(cls.kind));

    const Circle over_p1p2 = torricelli_circle(t.p1, t.p2, t.p3);
    const Circle over_p2p3 = torricelli_circle(t.p2, t.p3, t.p1);
    const auto candidates = circle_circle_intersection(over_p1p2, over_p2p3);

    // Both circles pass through p2; the other intersection is the
    // isogonic point. Keep the candidate deepest inside the triangle.
    Point2 inner;
    double best_min_coord = -std::numeric_limits<double>::infinity();
    for (const Point2& q : candidates) {
        const auto bc = barycentric_coordinates(q, t);
        const double min_coord = std::min({bc[0], bc[1], bc[2]});
        if (min_coord > best_min_coord) {
            best_min_coord = min_coord;
            inner = q;
        }
    }
    if (!(best_min_coord > -1e-9))
        throw NumericalDegeneracy("isogonic_point: no circle intersection inside the triangle");
    return inner;
}

namespace detail {

// 1-median of three collinear distinct points: the middle one.
inline Point2 collinear_middle_vertex(const Triangle& t) {
    for (int i = 1; i <= 3; ++i) {
        const Point2& m = t.vertex(i);
        const Point2& a = t.vertex(i % 3 + 1);
        const Point2& b = t.vertex((i + 1) % 3 + 1);
        if (dot(a - m, b - m) <= 0.0)
            return m;
    }
    return t.p1; // unreachable for collinear distinct vertices
}

// 1-median of a vertex multiset with coincidences: the doubled point,
// or the common point when all three coincide.
inline Point2 coincident_location(const Triangle& t) {
    if (t.p1 == t.p2 || t.p1 == t.p3)
        return t.p1;
    return t.p2;
}

} // namespace detail

inline SolverResult fermat_point(const Triangle& t, const SolverConfig& cfg = {}) {
    if (!(cfg.classification_tolerance > 0.0) || !(cfg.residual_tolerance > 0.0))
        throw std::invalid_argument("fermat_point: tolerances must be positive");

    const Classification cls = classify(t, cfg.classification_tolerance);
    Point2 p;
    switch (cls.kind) {
    case TriangleClass::WideAngleAtVertex:
        p = t.vertex(cls.vertex);
        break;
    case TriangleClass::AllAnglesBelowTwoPiOverThree:
        p = isogonic_point(t, cfg.classification_tolerance);
        break;
    case TriangleClass::DegenerateCollinear:
        p = detail::collinear_middle_vertex(t);
        break;
    case TriangleClass::DegenerateCoincident:
        p = detail::coincident_location(t);
        break;
    }

    SolverResult result;
    result.fermat_point = p;
    result.classification = cls;
    result.total = total_distance(p, t);

    Diagnostics& diag = result.diagnostics;
    const bool distinct = t.p1 != t.p2 && t.p2 != t.p3 && t.p3 != t.p1;
    if (distinct) {
        diag.vertex_margins = {vertex_optimality_margin(1, t), vertex_optimality_margin(2, t),
                               vertex_optimality_margin(3, t)};
        const auto angles = interior_angles(t);
        diag.conditioning_warning = std::min({angles[0], angles[1], angles[2]}) < 1e-9;
    } else {
        diag.conditioning_warning = true;
    }
    if (cls.kind == TriangleClass::AllAnglesBelowTwoPiOverThree) {
        diag.residual_norm = unit_vector_residual(p, t).norm;
        diag.angles_at_solution = {angle_at(p, t.p1, t.p2), angle_at(p, t.p2, t.p3),
                                   angle_at(p, t.p3, t.p1)};
    }
    if (cfg.oracle_check && (cls.kind == TriangleClass::AllAnglesBelowTwoPiOverThree ||
                             cls.kind == TriangleClass::WideAngleAtVertex)) {
        diag.oracle_distance = distance(p, weiszfeld_from_centroid(t).point);
    }
    return result;
}

} // namespace fermat
