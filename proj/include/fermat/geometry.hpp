#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fermat/errors.hpp"

// Plane-geometry primitives: points, vectors, orientation, angles,
// triangle classification against the 2*pi/3 threshold, and
// circle-circle intersection. Everything here is a pure function of
// its inputs and safe to call concurrently.

namespace fermat {

inline constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

// Default tolerance (radians) for resolving the wide-angle boundary.
// The boundary itself is inclusive: an angle of exactly 2*pi/3 is the
// vertex case.
inline constexpr double kDefaultClassificationTolerance = 1e-12;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double x_, double y_) : x(x_), y(y_) {
        if (!std::isfinite(x) || !std::isfinite(y))
            throw std::invalid_argument("Point2: coordinates must be finite");
    }

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point2& o) const { return !(*this == o); }
};

struct Vec2 {
    double dx = 0.0;
    double dy = 0.0;

    Vec2() = default;
    Vec2(double dx_, double dy_) : dx(dx_), dy(dy_) {
        if (!std::isfinite(dx) || !std::isfinite(dy))
            throw std::invalid_argument("Vec2: components must be finite");
    }
};

inline Vec2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& p, const Vec2& v) { return {p.x + v.dx, p.y + v.dy}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.dx - b.dx, a.dy - b.dy}; }
inline Vec2 operator*(double s, const Vec2& v) { return {s * v.dx, s * v.dy}; }

inline double dot(const Vec2& a, const Vec2& b) { return a.dx * b.dx + a.dy * b.dy; }
inline double cross(const Vec2& a, const Vec2& b) { return a.dx * b.dy - a.dy * b.dx; }
inline double norm(const Vec2& v) { return std::hypot(v.dx, v.dy); }

inline double distance(const Point2& a, const Point2& b) { return norm(a - b); }

// A direction vector normalized on construction; |dx^2 + dy^2 - 1| stays
// within 1e-12 of zero.
struct UnitVec2 {
    double dx;
    double dy;

    explicit UnitVec2(const Vec2& v) {
        const double n = norm(v);
        if (n == 0.0)
            throw std::invalid_argument("UnitVec2: cannot normalize the zero vector");
        dx = v.dx / n;
        dy = v.dy / n;
    }

    Vec2 vec() const { return {dx, dy}; }
};

// Unit vector pointing from `from` toward `to`.
inline UnitVec2 direction(const Point2& from, const Point2& to) {
    if (from == to)
        throw CoincidentPoints("direction: endpoints coincide");
    return UnitVec2(to - from);
}

struct Triangle {
    Point2 p1;
    Point2 p2;
    Point2 p3;

    // 1-based accessor matching the usual vertex numbering.
    const Point2& vertex(int i) const {
        switch (i) {
        case 1: return p1;
        case 2: return p2;
        case 3: return p3;
        default: throw std::invalid_argument("Triangle::vertex: index must be 1, 2, or 3");
        }
    }

    Point2 centroid() const { return {(p1.x + p2.x + p3.x) / 3.0, (p1.y + p2.y + p3.y) / 3.0}; }

    // Longest side length.
    double diameter() const {
        return std::max({distance(p1, p2), distance(p2, p3), distance(p3, p1)});
    }
};

struct Circle {
    Point2 center;
    double radius = 0.0;

    Circle() = default;
    Circle(const Point2& c, double r) : center(c), radius(r) {
        if (!std::isfinite(radius) || radius < 0.0)
            throw std::invalid_argument("Circle: radius must be finite and nonnegative");
    }
};

enum class TriangleClass {
    AllAnglesBelowTwoPiOverThree,
    WideAngleAtVertex,
    DegenerateCollinear,
    DegenerateCoincident,
};

struct Classification {
    TriangleClass kind = TriangleClass::AllAnglesBelowTwoPiOverThree;
    int vertex = 0; // 1-based; meaningful only for WideAngleAtVertex

    bool operator==(const Classification& o) const { return kind == o.kind && vertex == o.vertex; }
};

inline std::string to_string(TriangleClass k) {
    switch (k) {
    case TriangleClass::AllAnglesBelowTwoPiOverThree: return "AllAnglesBelowTwoPiOverThree";
    case TriangleClass::WideAngleAtVertex: return "WideAngleAtVertex";
    case TriangleClass::DegenerateCollinear: return "DegenerateCollinear";
    case TriangleClass::DegenerateCoincident: return "DegenerateCoincident";
    }
    return "?";
}

// Twice the signed area of triangle abc; positive for counterclockwise
// orientation.
inline double signed_area2(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Radian measure of the angle a-vertex-b, in [0, pi]. Uses
// atan2(|cross|, dot) rather than acos of the normalized dot product,
// which is ill-conditioned near 0 and pi.
inline double angle_at(const Point2& vertex, const Point2& a, const Point2& b) {
    if (vertex == a || vertex == b)
        throw CoincidentPoints("angle_at: vertex coincides with an endpoint");
    const Vec2 u = a - vertex;
    const Vec2 w = b - vertex;
    return std::atan2(std::fabs(cross(u, w)), dot(u, w));
}

// Interior angles at p1, p2, p3. Vertices must be pairwise distinct.
inline std::array<double, 3> interior_angles(const Triangle& t) {
    return {angle_at(t.p1, t.p2, t.p3), angle_at(t.p2, t.p3, t.p1), angle_at(t.p3, t.p1, t.p2)};
}

// A triangle either has every interior angle below 2*pi/3 or exactly
// one angle at or above it (two such angles cannot fit into an angle
// sum of pi). Degeneracy is reported as its own
// variant, never as an error. Exact coincidence and exact zero area
// are tested bitwise; the wide-angle test uses `tolerance` (radians)
// and resolves the boundary toward the vertex case.
inline Classification classify(const Triangle& t,
                               double tolerance = kDefaultClassificationTolerance) {
    if (tolerance < 0.0)
        throw std::invalid_argument("classify: tolerance must be nonnegative");
    if (t.p1 == t.p2 || t.p2 == t.p3 || t.p3 == t.p1)
        return {TriangleClass::DegenerateCoincident, 0};
    if (signed_area2(t.p1, t.p2, t.p3) == 0.0)
        return {TriangleClass::DegenerateCollinear, 0};

    const std::array<double, 3> angles = interior_angles(t);
    int widest = 1;
    for (int i = 2; i <= 3; ++i)
        if (angles[i - 1] > angles[widest - 1])
            widest = i;
    if (angles[widest - 1] >= kTwoPiOverThree - tolerance)
        return {TriangleClass::WideAngleAtVertex, widest};
    return {TriangleClass::AllAnglesBelowTwoPiOverThree, 0};
}

// Intersection points of two circles via the radical line, sorted by
// (x, then y). A negative discriminant within 1e-9*(r1+r2) of zero is
// treated as tangency and yields the single touching point.
inline std::vector<Point2> circle_circle_intersection(const Circle& c1, const Circle& c2) {
    if (c1.radius <= 0.0 || c2.radius <= 0.0)
        throw std::invalid_argument("circle_circle_intersection: radii must be positive");
    if (c1.center == c2.center) {
        if (c1.radius == c2.radius)
            throw CoincidentCircles("circle_circle_intersection: circles coincide");
        throw ConcentricCircles("circle_circle_intersection: circles are concentric");
    }

    const Vec2 axis = c2.center - c1.center;
    const double d = norm(axis);
    const double a = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2.0 * d);
    const double disc = c1.radius * c1.radius - a * a;
    const double tangency_tol = 1e-9 * (c1.radius + c2.radius);

    if (disc < -tangency_tol)
        return {};

    const Point2 foot = c1.center + (a / d) * axis;
    if (disc <= 0.0)
        return {foot}; // tangent (or within tolerance of tangent)

    const double h = std::sqrt(disc);
    const Vec2 perp{-axis.dy / d, axis.dx / d};
    std::vector<Point2> pts = {foot + h * perp, foot + (-h) * perp};
    std::sort(pts.begin(), pts.end(), [](const Point2& p, const Point2& q) {
        return p.x < q.x || (p.x == q.x && p.y < q.y);
    });
    return pts;
}

// Barycentric coordinates of q with respect to t (weights sum to 1).
// Requires a noncollinear triangle.
inline std::array<double, 3> barycentric_coordinates(const Point2& q, const Triangle& t) {
    const double area2 = signed_area2(t.p1, t.p2, t.p3);
    if (area2 == 0.0)
        throw std::invalid_argument("barycentric_coordinates: triangle is degenerate");
    const double l1 = signed_area2(q, t.p2, t.p3) / area2;
    const double l2 = signed_area2(t.p1, q, t.p3) / area2;
    const double l3 = signed_area2(t.p1, t.p2, q) / area2;
    return {l1, l2, l3};
}

} // namespace fermat
