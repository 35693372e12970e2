#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace fermat;
using Catch::Matchers::WithinAbs;
using testsupport::make_rng;
using testsupport::random_narrow_triangle;
using testsupport::random_offband_triangle;
using testsupport::random_point;
using testsupport::random_triangle;
using testsupport::random_wide_triangle;

namespace {

const Triangle kEquilateral{{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
const Point2 kEquilateralCenter{0.5, std::sqrt(3.0) / 6.0};
const Triangle kRight345{{0.0, 0.0}, {4.0, 0.0}, {0.0, 3.0}};

// Isogonic point of the 3-4-5 right triangle, pinned by an independent
// high-precision Weiszfeld run.
const Point2 kRight345Isogonic{0.6957885340875543, 0.7511761065051551};

Triangle wide130() {
    const double a = 13.0 * std::numbers::pi / 18.0;
    return {{0.0, 0.0}, {1.0, 0.0}, {std::cos(a), std::sin(a)}};
}

} // namespace

TEST_CASE("torricelli_circle over the unit chord with the opposite point above") {
    const Circle c = torricelli_circle({0.0, 0.0}, {1.0, 0.0}, {0.5, 1.0});
    CHECK_THAT(c.center.x, WithinAbs(0.5, 1e-12));
    CHECK_THAT(c.center.y, WithinAbs(-0.28867513459481287, 1e-12)); // -1/(2*sqrt(3))
    CHECK_THAT(c.radius, WithinAbs(0.5773502691896258, 1e-12));     // 1/sqrt(3)

    // Twenty points of the arc on the opposite side of the chord from
    // the center must see the chord at 2*pi/3.
    for (int k = 1; k <= 20; ++k) {
        const double theta =
            std::numbers::pi / 6.0 + k * (kTwoPiOverThree / 21.0);
        const Point2 p = c.center + c.radius * Vec2{std::cos(theta), std::sin(theta)};
        CHECK_THAT(angle_at(p, {0.0, 0.0}, {1.0, 0.0}), WithinAbs(kTwoPiOverThree, 1e-9));
    }
}

TEST_CASE("torricelli_circle over a wider chord with the opposite point below") {
    const Circle c = torricelli_circle({0.0, 0.0}, {2.0, 0.0}, {1.0, -5.0});
    CHECK_THAT(c.center.x, WithinAbs(1.0, 1e-12));
    CHECK_THAT(c.center.y, WithinAbs(0.5773502691896258, 1e-12)); // +1/sqrt(3)
    CHECK_THAT(c.radius, WithinAbs(1.1547005383792515, 1e-12));   // 2/sqrt(3)

    for (int k = 1; k <= 20; ++k) {
        const double theta =
            7.0 * std::numbers::pi / 6.0 + k * (kTwoPiOverThree / 21.0);
        const Point2 p = c.center + c.radius * Vec2{std::cos(theta), std::sin(theta)};
        CHECK_THAT(angle_at(p, {0.0, 0.0}, {2.0, 0.0}), WithinAbs(kTwoPiOverThree, 1e-9));
    }
}

TEST_CASE("torricelli_circle is rigid-motion equivariant") {
    auto rng = make_rng(401);
    for (int k = 0; k < 200; ++k) {
        const Point2 a = random_point(rng, -1.0, 1.0);
        const Point2 b = random_point(rng, -1.0, 1.0);
        const Point2 o = random_point(rng, -1.0, 1.0);
        if (a == b || signed_area2(a, b, o) == 0.0)
            continue;
        const auto motion = testsupport::random_rigid_motion(rng);
        const Circle c = torricelli_circle(a, b, o);
        const Circle cm = torricelli_circle(motion(a), motion(b), motion(o));
        const Point2 mapped = motion(c.center);
        CHECK_THAT(cm.center.x, WithinAbs(mapped.x, 1e-12));
        CHECK_THAT(cm.center.y, WithinAbs(mapped.y, 1e-12));
        CHECK_THAT(cm.radius, WithinAbs(c.radius, 1e-12));
    }
}

TEST_CASE("torricelli_circle rejects degenerate chords") {
    CHECK_THROWS_AS(torricelli_circle({1.0, 1.0}, {1.0, 1.0}, {0.0, 0.0}), DegenerateSide);
    CHECK_THROWS_AS(torricelli_circle({0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}), CollinearOpposite);
}

TEST_CASE("isogonic_point of the equilateral triangle is its center") {
    const Point2 f = isogonic_point(kEquilateral);
    CHECK_THAT(f.x, WithinAbs(kEquilateralCenter.x, 1e-12));
    CHECK_THAT(f.y, WithinAbs(kEquilateralCenter.y, 1e-12));
}

TEST_CASE("isogonic_point of the 3-4-5 right triangle") {
    const Point2 f = isogonic_point(kRight345);
    CHECK(distance(f, kRight345Isogonic) <= 1e-10);
    CHECK_THAT(angle_at(f, kRight345.p1, kRight345.p2), WithinAbs(kTwoPiOverThree, 1e-9));
    CHECK_THAT(angle_at(f, kRight345.p2, kRight345.p3), WithinAbs(kTwoPiOverThree, 1e-9));
    CHECK_THAT(angle_at(f, kRight345.p3, kRight345.p1), WithinAbs(kTwoPiOverThree, 1e-9));
}

TEST_CASE("isogonic_point agrees across circle-pair choices") {
    auto rng = make_rng(402);
    for (int k = 0; k < 200; ++k) {
        const Triangle t = random_narrow_triangle(rng);
        const Point2 f = isogonic_point(t);

        // Rebuild from the other circle pair: sides p1p2 and p1p3.
        const Circle over12 = torricelli_circle(t.p1, t.p2, t.p3);
        const Circle over13 = torricelli_circle(t.p1, t.p3, t.p2);
        Point2 alt;
        double best = -std::numeric_limits<double>::infinity();
        for (const Point2& q : circle_circle_intersection(over12, over13)) {
            const auto bc = barycentric_coordinates(q, t);
            const double mn = std::min({bc[0], bc[1], bc[2]});
            if (mn > best) {
                best = mn;
                alt = q;
            }
        }
        REQUIRE(best > -1e-9);
        CHECK(distance(f, alt) <= 1e-9);
    }
}

TEST_CASE("isogonic_point refuses wide and degenerate inputs") {
    CHECK_THROWS_AS(isogonic_point(wide130()), NotAllAnglesBelowThreshold);
    CHECK_THROWS_AS(isogonic_point(Triangle{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}),
                    NotAllAnglesBelowThreshold);
    CHECK_THROWS_AS(isogonic_point(Triangle{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                    NotAllAnglesBelowThreshold);
}

TEST_CASE("fermat_point on the equilateral triangle") {
    const SolverResult r = fermat_point(kEquilateral);
    CHECK(r.classification.kind == TriangleClass::AllAnglesBelowTwoPiOverThree);
    CHECK_THAT(r.fermat_point.x, WithinAbs(0.5, 1e-12));
    CHECK_THAT(r.fermat_point.y, WithinAbs(0.28867513459481287, 1e-12));
    CHECK_THAT(r.total, WithinAbs(1.7320508075688772, 1e-12));
    REQUIRE(r.diagnostics.residual_norm.has_value());
    CHECK(*r.diagnostics.residual_norm <= 1e-9);
    REQUIRE(r.diagnostics.angles_at_solution.has_value());
    for (double a : *r.diagnostics.angles_at_solution)
        CHECK_THAT(a, WithinAbs(kTwoPiOverThree, 1e-9));
    REQUIRE(r.diagnostics.vertex_margins.has_value());
    for (double m : *r.diagnostics.vertex_margins)
        CHECK_THAT(m, WithinAbs(std::sqrt(3.0), 1e-12));
    REQUIRE(r.diagnostics.oracle_distance.has_value());
    CHECK(*r.diagnostics.oracle_distance <= 1e-7 * 2.0);
    CHECK_FALSE(r.diagnostics.conditioning_warning);
}

TEST_CASE("fermat_point on the 130-degree-apex triangle") {
    const Triangle t = wide130();
    const SolverResult r = fermat_point(t);
    CHECK(r.classification.kind == TriangleClass::WideAngleAtVertex);
    CHECK(r.classification.vertex == 1);
    CHECK(r.fermat_point == t.p1); // the vertex, verbatim
    CHECK_THAT(r.total, WithinAbs(2.0, 1e-12));
    CHECK_FALSE(r.diagnostics.residual_norm.has_value());
    CHECK_FALSE(r.diagnostics.angles_at_solution.has_value());
    REQUIRE(r.diagnostics.vertex_margins.has_value());
    CHECK((*r.diagnostics.vertex_margins)[0] <= 1.0);
    CHECK((*r.diagnostics.vertex_margins)[1] > 1.0);
    CHECK((*r.diagnostics.vertex_margins)[2] > 1.0);
    REQUIRE(r.diagnostics.oracle_distance.has_value());
    CHECK(*r.diagnostics.oracle_distance <= 1e-7 * (1.0 + t.diameter()));
}

TEST_CASE("fermat_point puts the boundary apex case on the vertex") {
    const Triangle t{{0.0, 0.0},
                     {1.0, 0.0},
                     {std::cos(kTwoPiOverThree), std::sin(kTwoPiOverThree)}};
    const SolverResult r = fermat_point(t);
    CHECK(r.classification.kind == TriangleClass::WideAngleAtVertex);
    CHECK(r.classification.vertex == 1);
    CHECK(r.fermat_point == t.p1);
}

TEST_CASE("fermat_point validates its configuration") {
    SolverConfig cfg;
    cfg.classification_tolerance = 0.0;
    CHECK_THROWS_AS(fermat_point(kEquilateral, cfg), std::invalid_argument);
    cfg = SolverConfig{};
    cfg.residual_tolerance = -1.0;
    CHECK_THROWS_AS(fermat_point(kEquilateral, cfg), std::invalid_argument);
}

TEST_CASE("interior solutions carry stationarity and angle certificates") {
    auto rng = make_rng(403);
    SolverConfig cfg;
    cfg.oracle_check = false;
    for (int k = 0; k < 500; ++k) {
        const Triangle t = random_narrow_triangle(rng);
        const SolverResult r = fermat_point(t, cfg);
        REQUIRE(r.classification.kind == TriangleClass::AllAnglesBelowTwoPiOverThree);
        REQUIRE(r.diagnostics.residual_norm.has_value());
        CHECK(*r.diagnostics.residual_norm <= 1e-9);
        REQUIRE(r.diagnostics.angles_at_solution.has_value());
        for (double a : *r.diagnostics.angles_at_solution)
            CHECK(std::fabs(a - kTwoPiOverThree) <= 1e-9);
    }
}

TEST_CASE("vertex classification coincides with the margin certificate") {
    auto rng = make_rng(404);
    SolverConfig cfg;
    cfg.oracle_check = false;
    for (int k = 0; k < 500; ++k) {
        const Triangle t = random_offband_triangle(rng);
        const SolverResult r = fermat_point(t, cfg);
        REQUIRE(r.diagnostics.vertex_margins.has_value());
        const auto& m = *r.diagnostics.vertex_margins;
        if (r.classification.kind == TriangleClass::WideAngleAtVertex) {
            CHECK(r.fermat_point == t.vertex(r.classification.vertex));
            for (int i = 1; i <= 3; ++i) {
                if (i == r.classification.vertex)
                    CHECK(m[i - 1] <= 1.0 + 1e-12);
                else
                    CHECK(m[i - 1] > 1.0);
            }
        } else {
            for (int i = 0; i < 3; ++i)
                CHECK(m[i] > 1.0);
        }
    }
}

TEST_CASE("no probe point beats the solver") {
    auto rng = make_rng(405);
    SolverConfig cfg;
    cfg.oracle_check = false;
    for (int k = 0; k < 20; ++k) {
        const Triangle t = random_offband_triangle(rng);
        const SolverResult r = fermat_point(t, cfg);
        const double scale = 1.0 + t.diameter();
        const double xmin = std::min({t.p1.x, t.p2.x, t.p3.x});
        const double xmax = std::max({t.p1.x, t.p2.x, t.p3.x});
        const double ymin = std::min({t.p1.y, t.p2.y, t.p3.y});
        const double ymax = std::max({t.p1.y, t.p2.y, t.p3.y});
        std::uniform_real_distribution<double> ux(xmin - 1.0, xmax + 1.0);
        std::uniform_real_distribution<double> uy(ymin - 1.0, ymax + 1.0);
        for (int probe = 0; probe < 1000; ++probe) {
            const Point2 q{ux(rng), uy(rng)};
            CHECK(r.total <= total_distance(q, t) + 1e-9 * scale);
        }
    }
}

TEST_CASE("fermat_point is equivariant under rigid motions") {
    auto rng = make_rng(406);
    SolverConfig cfg;
    cfg.oracle_check = false;
    for (int k = 0; k < 200; ++k) {
        const Triangle t = random_offband_triangle(rng, 1e-6);
        const auto motion = testsupport::random_rigid_motion(rng);
        const Point2 expect = motion(fermat_point(t, cfg).fermat_point);
        const Point2 got = fermat_point(motion(t), cfg).fermat_point;
        CHECK(distance(got, expect) <= 1e-9);
    }
}

TEST_CASE("fermat_point is equivariant under uniform scaling") {
    auto rng = make_rng(407);
    SolverConfig cfg;
    cfg.oracle_check = false;
    std::uniform_real_distribution<double> us(0.1, 10.0);
    for (int k = 0; k < 200; ++k) {
        const Triangle t = random_offband_triangle(rng, 1e-6);
        const double s = us(rng);
        const Triangle ts{{s * t.p1.x, s * t.p1.y},
                          {s * t.p2.x, s * t.p2.y},
                          {s * t.p3.x, s * t.p3.y}};
        const SolverResult r = fermat_point(t, cfg);
        const SolverResult rs = fermat_point(ts, cfg);
        CHECK(distance(rs.fermat_point, {s * r.fermat_point.x, s * r.fermat_point.y}) <=
              1e-9 * (1.0 + s * t.diameter()));
        CHECK(std::fabs(rs.total - s * r.total) <= 1e-9 * (1.0 + s * r.total));
    }
}

TEST_CASE("fermat_point is invariant under vertex relabeling") {
    auto rng = make_rng(408);
    SolverConfig cfg;
    cfg.oracle_check = false;
    for (int k = 0; k < 200; ++k) {
        // A healthy minimum angle keeps the circle intersection well
        // conditioned, so the 1e-12 bound below is meaningful.
        const Triangle t = random_offband_triangle(rng, 1e-3, 0.01);
        const Point2 f = fermat_point(t, cfg).fermat_point;
        const std::array<Triangle, 5> relabelings = {
            Triangle{t.p2, t.p3, t.p1}, Triangle{t.p3, t.p1, t.p2}, Triangle{t.p1, t.p3, t.p2},
            Triangle{t.p2, t.p1, t.p3}, Triangle{t.p3, t.p2, t.p1}};
        for (const Triangle& u : relabelings)
            CHECK(distance(fermat_point(u, cfg).fermat_point, f) <= 1e-12);
    }
}

TEST_CASE("fermat_point survives a near-degenerate fuzz sweep") {
    auto rng = make_rng(409);
    SolverConfig cfg;
    cfg.oracle_check = false;
    int bad = 0;
    for (int k = 0; k < 100000; ++k) {
        const Triangle t = random_triangle(rng, 1e-6);
        const SolverResult r = fermat_point(t, cfg); // must not throw
        if (!std::isfinite(r.fermat_point.x) || !std::isfinite(r.fermat_point.y) ||
            !std::isfinite(r.total))
            ++bad;
        if (r.classification.kind != TriangleClass::AllAnglesBelowTwoPiOverThree &&
            r.classification.kind != TriangleClass::WideAngleAtVertex)
            ++bad;
    }
    CHECK(bad == 0);
}

TEST_CASE("degenerate collinear input returns the middle vertex with a degenerate classification") {
    const SolverResult r = fermat_point(Triangle{{0.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}});
    CHECK(r.classification.kind == TriangleClass::DegenerateCollinear);
    CHECK(r.fermat_point == Point2{1.0, 0.0});
    CHECK(r.total == 2.0);
    CHECK(r.diagnostics.conditioning_warning);
    CHECK_FALSE(r.diagnostics.residual_norm.has_value());
    CHECK_FALSE(r.diagnostics.oracle_distance.has_value());
    CHECK(r.diagnostics.vertex_margins.has_value());
}

TEST_CASE("degenerate coincident input returns the repeated location") {
    const SolverResult twin = fermat_point(Triangle{{1.0, 2.0}, {1.0, 2.0}, {5.0, 5.0}});
    CHECK(twin.classification.kind == TriangleClass::DegenerateCoincident);
    CHECK(twin.fermat_point == Point2{1.0, 2.0});
    CHECK(twin.total == 5.0);
    CHECK(twin.diagnostics.conditioning_warning);
    CHECK_FALSE(twin.diagnostics.vertex_margins.has_value());

    const SolverResult all = fermat_point(Triangle{{3.0, 3.0}, {3.0, 3.0}, {3.0, 3.0}});
    CHECK(all.classification.kind == TriangleClass::DegenerateCoincident);
    CHECK(all.fermat_point == Point2{3.0, 3.0});
    CHECK(all.total == 0.0);
}

TEST_CASE("a sliver triangle raises the conditioning warning") {
    const Triangle t{{0.0, 0.0}, {1.0, 0.0}, {0.5, 1e-10}};
    SolverConfig cfg;
    cfg.oracle_check = false;
    const SolverResult r = fermat_point(t, cfg);
    CHECK(r.diagnostics.conditioning_warning);
}

TEST_CASE("oracle agreement is recorded when requested") {
    auto rng = make_rng(410);
    for (int k = 0; k < 50; ++k) {
        const Triangle t = random_offband_triangle(rng, 5e-3);
        const SolverResult r = fermat_point(t);
        REQUIRE(r.diagnostics.oracle_distance.has_value());
        CHECK(*r.diagnostics.oracle_distance <= 1e-7 * (1.0 + t.diameter()));
    }

    SolverConfig off;
    off.oracle_check = false;
    CHECK_FALSE(fermat_point(kRight345, off).diagnostics.oracle_distance.has_value());
}
