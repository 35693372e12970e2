#pragma once

#include <array>
#include <cmath>

#include "fermat/geometry.hpp"

// The objective f(p) = |p-P1| + |p-P2| + |p-P3|, its gradient, the
// equivalent unit-vector residual, the vertex-optimality margin, and a
// central-difference gradient for cross-checking.

namespace fermat {

struct GradientValue {
    double gx = 0.0; // df/dx
    double gy = 0.0; // df/dy
};

// Sum of the three unit vectors pointing from the triangle vertices
// toward the evaluation point. Zero exactly at the interior Fermat
// point; its norm never exceeds 3.
struct ResidualValue {
    double rx = 0.0;
    double ry = 0.0;
    double norm = 0.0;
};

// 1-based index of the vertex p coincides with exactly, or 0.
inline int vertex_index_of(const Point2& p, const Triangle& t) {
    for (int i = 1; i <= 3; ++i)
        if (p == t.vertex(i))
            return i;
    return 0;
}

// Total distance from p to the three vertices. The three distances are
// summed in sorted order, so any relabeling of the vertices produces a
// bitwise-identical result.
inline double total_distance(const Point2& p, const Triangle& t) {
    std::array<double, 3> d = {distance(p, t.p1), distance(p, t.p2), distance(p, t.p3)};
    std::sort(d.begin(), d.end());
    return (d[0] + d[1]) + d[2];
}

inline GradientValue gradient(const Point2& p, const Triangle& t) {
    if (const int i = vertex_index_of(p, t))
        throw EvaluatedAtVertex(i);
    GradientValue g;
    for (int i = 1; i <= 3; ++i) {
        const Point2& v = t.vertex(i);
        const double d = std::hypot(p.x - v.x, p.y - v.y);
        g.gx += (p.x - v.x) / d;
        g.gy += (p.y - v.y) / d;
    }
    return g;
}

inline ResidualValue unit_vector_residual(const Point2& p, const Triangle& t) {
    if (const int i = vertex_index_of(p, t))
        throw EvaluatedAtVertex(i);
    Vec2 sum;
    for (int i = 1; i <= 3; ++i)
        sum = sum + direction(t.vertex(i), p).vec();
    return {sum.dx, sum.dy, norm(sum)};
}

// |u_j + u_k| for the unit vectors from vertex i toward the other two
// vertices; equal to 2*cos(alpha_i/2) for interior angle alpha_i. A
// margin of at most 1 certifies vertex i as the Fermat point (angle at
// or above 2*pi/3); a margin above 1 excludes it.
inline double vertex_optimality_margin(int i, const Triangle& t) {
    const Point2& v = t.vertex(i);
    const Point2& a = t.vertex(i % 3 + 1);
    const Point2& b = t.vertex((i + 1) % 3 + 1);
    if (a == v || b == v)
        throw CoincidentVertices("vertex_optimality_margin: adjacent vertex coincides with vertex " +
                                 std::to_string(i));
    return norm(direction(v, a).vec() + direction(v, b).vec());
}

// Step size balancing truncation against rounding error for doubles.
inline double default_fd_step(const Triangle& t) { return 1e-6 * (1.0 + t.diameter()); }

// Central differences of the objective; the oracle counterpart of
// gradient(). Requires every vertex to be farther than 2h from p so no
// stencil point crosses the nonsmooth kink at a vertex.
inline GradientValue finite_difference_gradient(const Point2& p, const Triangle& t, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("finite_difference_gradient: h must be positive");
    for (int i = 1; i <= 3; ++i)
        if (distance(p, t.vertex(i)) <= 2.0 * h)
            throw StepTooLarge("finite_difference_gradient: vertex " + std::to_string(i) +
                               " within 2h of evaluation point");
    const double fxp = total_distance({p.x + h, p.y}, t);
    const double fxm = total_distance({p.x - h, p.y}, t);
    const double fyp = total_distance({p.x, p.y + h}, t);
    const double fym = total_distance({p.x, p.y - h}, t);
    return {(fxp - fxm) / (2.0 * h), (fyp - fym) / (2.0 * h)};
}

} // namespace fermat
