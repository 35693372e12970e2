#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <optional>

#include "fermat/objective.hpp"

// Two independent numerical minimizers of the objective, used to
// cross-check the analytic solver. Neither shares any code with the
// circle construction in solver.hpp, so agreement between the routes
// is evidence rather than tautology.

namespace fermat {

struct OracleReport {
    Point2 point;
    double value = 0.0;
    std::size_t iterations_or_levels = 0;
    bool converged = false;
};

namespace detail {

// Descent direction away from the anchor at vertex i, or nullopt when
// that anchor is the minimizer. An anchor position holding m of the
// three points is optimal exactly when the pull of the remaining unit
// vectors has norm at most m; for distinct vertices this reduces to
// the margin test |u_j + u_k| <= 1. A feasible descent direction
// points along the pull, into the triangle.
inline std::optional<Vec2> anchor_escape_direction(const Triangle& t, int i) {
    const Point2 v = t.vertex(i);
    Vec2 pull;
    int anchors_here = 0;
    for (int j = 1; j <= 3; ++j) {
        const Point2& a = t.vertex(j);
        if (a == v) {
            ++anchors_here;
            continue;
        }
        pull = pull + direction(v, a).vec();
    }
    const double pn = norm(pull);
    if (pn <= static_cast<double>(anchors_here))
        return std::nullopt;
    return (1.0 / pn) * pull;
}

} // namespace detail

// Fixed-point iteration x <- (sum_i P_i/|x-P_i|) / (sum_i 1/|x-P_i|),
// stopped when the step length drops to step_tolerance*(1+diameter).
// An iterate landing within 1e-13*diameter of a vertex is resolved by
// the vertex-optimality test: converge there if the vertex is the
// minimizer, otherwise displace by 1e-9*diameter along the descent
// direction and continue. Exhausting max_iterations reports
// converged=false.
inline OracleReport weiszfeld(const Triangle& t, const Point2& init, double step_tolerance = 1e-12,
                              std::size_t max_iterations = 10000) {
    if (!(step_tolerance > 0.0))
        throw std::invalid_argument("weiszfeld: step_tolerance must be positive");
    if (vertex_index_of(init, t) != 0)
        throw std::invalid_argument("weiszfeld: initial point coincides with a vertex");

    const double diam = t.diameter();
    const double snap = 1e-13 * diam;
    const double stop = step_tolerance * (1.0 + diam);

    Point2 x = init;
#ifndef NDEBUG
    double f_prev = total_distance(x, t);
#endif
    for (std::size_t iter = 1; iter <= max_iterations; ++iter) {
        int nearest = 1;
        double dmin = std::numeric_limits<double>::infinity();
        for (int i = 1; i <= 3; ++i) {
            const double d = distance(x, t.vertex(i));
            if (d < dmin) {
                dmin = d;
                nearest = i;
            }
        }
        if (dmin <= snap) {
            const auto escape = detail::anchor_escape_direction(t, nearest);
            if (!escape) {
                const Point2 v = t.vertex(nearest);
                return {v, total_distance(v, t), iter, true};
            }
            x = t.vertex(nearest) + (1e-9 * diam) * (*escape);
#ifndef NDEBUG
            f_prev = total_distance(x, t);
#endif
        }

        double sx = 0.0, sy = 0.0, s = 0.0;
        for (int i = 1; i <= 3; ++i) {
            const Point2& v = t.vertex(i);
            const double w = 1.0 / distance(x, v);
            sx += v.x * w;
            sy += v.y * w;
            s += w;
        }
        const Point2 next{sx / s, sy / s};
        const double step = distance(next, x);
        x = next;
#ifndef NDEBUG
        // Descent is monotone away from anchors; allow rounding slack.
        const double f_next = total_distance(x, t);
        assert(f_next <= f_prev + 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + f_prev));
        f_prev = f_next;
#endif
        if (step <= stop)
            return {x, total_distance(x, t), iter, true};
    }
    return {x, total_distance(x, t), max_iterations, false};
}

// Weiszfeld started from the centroid. When the centroid happens to
// coincide exactly with a vertex (symmetric or degenerate input), the
// vertex-encounter policy is applied to the start point first.
inline OracleReport weiszfeld_from_centroid(const Triangle& t, double step_tolerance = 1e-12,
                                            std::size_t max_iterations = 10000) {
    const Point2 c = t.centroid();
    const int hit = vertex_index_of(c, t);
    if (hit == 0)
        return weiszfeld(t, c, step_tolerance, max_iterations);
    const auto escape = detail::anchor_escape_direction(t, hit);
    if (!escape) {
        const Point2 v = t.vertex(hit);
        return {v, total_distance(v, t), 0, true};
    }
    return weiszfeld(t, t.vertex(hit) + (1e-9 * t.diameter()) * (*escape), step_tolerance,
                     max_iterations);
}

// Brute-force refinement: scan a uniform grid over the bounding box of
// the vertices expanded by 10%, recenter a window of one quarter the
// span on the best point seen, repeat. The minimizer lies in the
// convex hull of the vertices, so the initial box always contains it.
// Deterministic scan order; value ties broken by smallest (x, then y).
inline OracleReport grid_refine_minimize(const Triangle& t, std::size_t levels = 12,
                                         std::size_t points_per_axis = 32) {
    if (levels < 1)
        throw std::invalid_argument("grid_refine_minimize: levels must be at least 1");
    if (points_per_axis < 8)
        throw std::invalid_argument("grid_refine_minimize: points_per_axis must be at least 8");

    const double xmin = std::min({t.p1.x, t.p2.x, t.p3.x});
    const double xmax = std::max({t.p1.x, t.p2.x, t.p3.x});
    const double ymin = std::min({t.p1.y, t.p2.y, t.p3.y});
    const double ymax = std::max({t.p1.y, t.p2.y, t.p3.y});

    double hx = 0.55 * (xmax - xmin); // half-span of the 10%-expanded box
    double hy = 0.55 * (ymax - ymin);
    double cx = 0.5 * (xmin + xmax);
    double cy = 0.5 * (ymin + ymax);

    Point2 best;
    double best_value = std::numeric_limits<double>::infinity();
    bool have_best = false;
    const auto consider = [&](const Point2& q, double v) {
        if (!have_best || v < best_value ||
            (v == best_value && (q.x < best.x || (q.x == best.x && q.y < best.y)))) {
            best = q;
            best_value = v;
            have_best = true;
        }
    };

    const auto n = static_cast<double>(points_per_axis - 1);
    for (std::size_t level = 0; level < levels; ++level) {
        for (std::size_t iy = 0; iy < points_per_axis; ++iy) {
            const double y = cy - hy + static_cast<double>(iy) * (2.0 * hy / n);
            for (std::size_t ix = 0; ix < points_per_axis; ++ix) {
                const double x = cx - hx + static_cast<double>(ix) * (2.0 * hx / n);
                const Point2 q{x, y};
                consider(q, total_distance(q, t));
            }
        }
        cx = best.x;
        cy = best.y;
        hx *= 0.25;
        hy *= 0.25;
    }
    return {best, best_value, levels, true};
}

} // namespace fermat
