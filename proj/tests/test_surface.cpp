#include "flatdisc/surface.hpp"

#include "doctest.h"
#include "flatdisc/fixtures.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace flatdisc;
using namespace flatdisc::testsupport;

TEST_SUITE_BEGIN("surface");

namespace {

// Test-local Delaunay checker: develop the partner vertex across each edge
// and evaluate the circumcircle condition in doubles.
double max_incircle_violation(const HalfTranslationSurface& s) {
    double worst = -1e300;
    for (int t = 0; t < s.triangle_count(); ++t) {
        for (int sl = 0; sl < 3; ++sl) {
            const SlotRef slot{t, sl};
            const SlotRef p = s.partner(slot);
            const ChartTransition tr = s.transition(slot);
            const Vec2 a = to_approx(s.vertex_position(t, sl));
            const Vec2 b = to_approx(s.vertex_position(t, (sl + 1) % 3));
            const Vec2 c = to_approx(s.vertex_position(t, (sl + 2) % 3));
            const Vec2 d = to_approx(tr.apply(s.vertex_position(p.tri, (p.slot + 2) % 3)));
            auto row = [&](const Vec2& q) {
                return std::array<double, 3>{q.x - d.x, q.y - d.y,
                                             (q.x - d.x) * (q.x - d.x) +
                                                 (q.y - d.y) * (q.y - d.y)};
            };
            const auto ra = row(a), rb = row(b), rc = row(c);
            const double det = ra[0] * (rb[1] * rc[2] - rb[2] * rc[1]) -
                               ra[1] * (rb[0] * rc[2] - rb[2] * rc[0]) +
                               ra[2] * (rb[0] * rc[1] - rb[1] * rc[0]);
            worst = std::max(worst, det);
        }
    }
    return worst;  // > 0 means some edge is not locally Delaunay
}

double max_circumradius(const HalfTranslationSurface& s) {
    double worst = 0;
    for (int t = 0; t < s.triangle_count(); ++t) {
        const Vec2 a{0, 0};
        const Vec2 b = to_approx(s.edges(t)[0]);
        const Vec2 c = to_approx(s.edges(t)[0] + s.edges(t)[1]);
        const double area2 = (b - a).cross(c - a);
        const double r = norm(b - a) * norm(c - b) * norm(a - c) / (2 * std::abs(area2));
        worst = std::max(worst, r);
    }
    return worst;
}

HalfTranslationSurface square_torus() {
    SurfaceBuilder b;
    const int t0 = b.add_triangle({Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)},
                                  {Scalar(1), Scalar(1)});
    const int t1 = b.add_triangle({Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)},
                                  {Scalar(0), Scalar(1)});
    b.glue({t0, 0}, {t1, 1}, +1);
    b.glue({t0, 1}, {t1, 2}, +1);
    b.glue_matching_interior_edges();
    return b.build();
}

}  // namespace

TEST_CASE("fixture diagnostics") {
    const auto l = fixtures::l_surface();
    CHECK(l.diagnostics().genus == 2);
    REQUIRE(l.diagnostics().cone_angles.size() == 1);
    CHECK(l.diagnostics().cone_angles[0] == 6);
    CHECK(l.area() == doctest::Approx(3));
    CHECK(l.diagnostics().g_const == 2);

    const auto oct = fixtures::octagon_surface();
    CHECK(oct.diagnostics().genus == 2);
    REQUIRE(oct.diagnostics().cone_angles.size() == 1);
    CHECK(oct.diagnostics().cone_angles[0] == 6);
    CHECK(oct.area() == doctest::Approx(2 * (1 + std::sqrt(2.0))));

    const auto skinny = fixtures::l_surface_skinny();
    CHECK(skinny.diagnostics().genus == 2);
    CHECK(skinny.area() == doctest::Approx(3));

    const auto slit = fixtures::slit_tori_surface();
    CHECK(slit.diagnostics().genus == 2);
    auto cones = slit.diagnostics().cone_angles;
    std::sort(cones.begin(), cones.end());
    CHECK(cones == std::vector<int>{4, 4});
    CHECK(slit.area() == doctest::Approx(2));

    const auto folded = fixtures::folded_rectangle_surface();
    CHECK(folded.diagnostics().genus == 2);
    auto fcones = folded.diagnostics().cone_angles;
    std::sort(fcones.begin(), fcones.end());
    CHECK(fcones == std::vector<int>{4, 4});
}

TEST_CASE("validate rejects bad input") {
    CHECK_THROWS_AS(square_torus(), ConeAngleError);  // 2π cone, k < 3

    // Octagon with a perturbed edge pair: closure holds, gluing mismatch.
    RawSurfaceData raw = fixtures::octagon_surface().raw();
    raw.triangles[0][0].x += Scalar(Rat(1, 100));
    raw.triangles[0][1].x -= Scalar(Rat(1, 100));
    CHECK_THROWS_AS(HalfTranslationSurface::validate(raw), EdgeMismatch);

    // Degenerate triangle.
    RawSurfaceData degen = fixtures::l_surface().raw();
    degen.triangles[0][0] = Vec2X{Scalar(0), Scalar(0)};
    CHECK_THROWS(HalfTranslationSurface::validate(degen));
}

TEST_CASE("vertex fans tile the cone angles") {
    for (const auto& s : {fixtures::l_surface(), fixtures::octagon_surface(),
                          fixtures::slit_tori_surface(), fixtures::folded_rectangle_surface()}) {
        int corners_seen = 0;
        for (int v = 0; v < s.vertex_class_count(); ++v) {
            double total = 0;
            for (const auto& c : s.vertex_fan(v)) {
                total += s.corner_angle(c);
                CHECK(s.vertex_class(c) == v);
                ++corners_seen;
            }
            CHECK(total == doctest::Approx(M_PI * s.diagnostics().cone_angles[v]));
        }
        CHECK(corners_seen == 3 * s.triangle_count());
    }
}

TEST_CASE("deform_surface componentwise and symmetry") {
    const auto oct = fixtures::octagon_surface();
    const double t = 0.35;
    const auto def = oct.deformed(LinearMap::flow(t));
    for (int tr = 0; tr < oct.triangle_count(); ++tr) {
        for (int sl = 0; sl < 3; ++sl) {
            const Vec2 e = to_approx(oct.edges(tr)[sl]);
            const Vec2 de = to_approx(def.edges(tr)[sl]);
            CHECK(de.x == doctest::Approx(e.x * std::exp(t)));
            CHECK(de.y == doctest::Approx(e.y * std::exp(-t)));
        }
    }
    CHECK(def.area() == doctest::Approx(oct.area()).epsilon(1e-9));

    // Identity and ρ_π act trivially up to isomorphism.
    CHECK(HalfTranslationSurface::isomorphic(oct, oct.deformed(LinearMap::identity())));
    const LinearMapX rot_pi{Scalar(-1), Scalar(0), Scalar(0), Scalar(-1)};
    CHECK(HalfTranslationSurface::isomorphic(oct, oct.deformed_exact(rot_pi)));

    CHECK_THROWS_AS(oct.deformed(LinearMap{1, 1, 1, 1}), InvalidInput);
}

TEST_CASE("deform composition (exact maps)") {
    const auto l = fixtures::l_surface();
    const LinearMapX m1{Scalar(2), Scalar(0), Scalar(0), Scalar(Rat(1, 2))};
    const LinearMapX m2{Scalar(1), Scalar(1), Scalar(0), Scalar(1)};
    const LinearMapX m21{m2.a * m1.a + m2.b * m1.c, m2.a * m1.b + m2.b * m1.d,
                         m2.c * m1.a + m2.d * m1.c, m2.c * m1.b + m2.d * m1.d};
    const auto seq = l.deformed_exact(m1).deformed_exact(m2);
    const auto once = l.deformed_exact(m21);
    CHECK(HalfTranslationSurface::isomorphic(seq, once));
}

TEST_CASE("normalize_area records the similarity factor") {
    const auto l = fixtures::l_surface().normalized_area();
    CHECK(l.unit_area());
    CHECK(l.scale() == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(l.scale_sq() * l.area_exact() == Scalar(1));
    const auto again = l.normalized_area();
    CHECK(again.scale() == doctest::Approx(l.scale()));

    const auto oct = fixtures::octagon_surface().normalized_area();
    CHECK(oct.unit_area());
    CHECK(oct.scale() == doctest::Approx(std::pow(2 * (1 + std::sqrt(2.0)), -0.5)));
}

TEST_CASE("delaunay: fixtures settle, invariants preserved") {
    // Square-tiled L is cocircular-Delaunay already; no flips.
    const auto l = fixtures::l_surface();
    CHECK(max_incircle_violation(l) <= 1e-9);
    CHECK(HalfTranslationSurface::isomorphic(l, l.delaunay()));

    // Skinny retriangulation is not Delaunay; flips settle it.
    const auto skinny = fixtures::l_surface_skinny();
    CHECK(max_incircle_violation(skinny) > 1e-6);
    const auto fixed = skinny.delaunay();
    CHECK(max_incircle_violation(fixed) <= 1e-9);
    CHECK(fixed.area() == doctest::Approx(skinny.area()).epsilon(1e-12));
    CHECK(fixed.diagnostics().genus == 2);
    CHECK(fixed.diagnostics().cone_angles == skinny.diagnostics().cone_angles);

    // Deformed surfaces re-settle and circumradii shrink.
    std::mt19937_64 rng(71);
    for (int i = 0; i < 10; ++i) {
        const double t = uniform(rng, 1.0, 1.8);
        const auto def = fixtures::octagon_surface().deformed(
            LinearMap::flow(t) * LinearMap::rotation(uniform(rng, 0, M_PI)));
        const auto fixedd = def.delaunay();
        CHECK(max_incircle_violation(fixedd) <= 1e-9);
        CHECK(max_circumradius(fixedd) <= max_circumradius(def) + 1e-12);
        CHECK(fixedd.area() == doctest::Approx(def.area()).epsilon(1e-12));
        CHECK(fixedd.diagnostics().cone_angles == def.diagnostics().cone_angles);
    }
}

TEST_CASE("raw round-trip and isomorphism sanity") {
    const auto oct = fixtures::octagon_surface();
    const auto back = HalfTranslationSurface::validate(oct.raw());
    CHECK(HalfTranslationSurface::isomorphic(oct, back));
    CHECK(!HalfTranslationSurface::isomorphic(oct, fixtures::l_surface()));
}

TEST_SUITE_END();
