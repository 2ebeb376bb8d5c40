#include "flatdisc/hyperdisc.hpp"

#include "doctest.h"
#include "test_support.hpp"

#include <random>

using namespace flatdisc;
using namespace flatdisc::testsupport;

TEST_SUITE_BEGIN("hyperdisc");

namespace {

// Oracle from the design notes: bisection on the strictly monotone
// log-ratio t ↦ ln(height_t / width_t).
double balance_time_bisection_oracle(const Zonotope& z, const DiscGeodesic& g) {
    auto log_ratio = [&](double t) {
        const LinearMap frame = LinearMap::flow(t) * g.axis * g.base.rep;
        double w = 0, h = 0;
        for (const auto& gen : z.generators) {
            const Vec2 v = frame.apply(gen);
            w += std::abs(v.x);
            h += std::abs(v.y);
        }
        return std::log(h / w);
    };
    double lo = -1, hi = 1;
    while (log_ratio(lo) < 0) lo -= 1;
    while (log_ratio(hi) > 0) hi += 1;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        (log_ratio(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

}  // namespace

TEST_CASE("disc_distance basics") {
    const DiscPoint I = DiscPoint::base();
    CHECK(disc_distance(I, {LinearMap::flow(0.7)}) == doctest::Approx(0.7));
    CHECK(disc_distance(I, {LinearMap::rotation(1.1)}) == doctest::Approx(0).epsilon(1e-12));
    CHECK(disc_distance(I, {LinearMap::diagonal(2, 0.5)}) == doctest::Approx(std::log(2.0)));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const DiscPoint x = random_disc_point(rng);
        const DiscPoint y = random_disc_point(rng);
        const double d = disc_distance(x, y);
        CHECK(d == doctest::Approx(disc_distance(y, x)).epsilon(1e-9));
        const LinearMap rx = LinearMap::rotation(uniform(rng, 0, 2 * M_PI)) * x.rep;
        const LinearMap ry = LinearMap::rotation(uniform(rng, 0, 2 * M_PI)) * y.rep;
        CHECK(std::abs(disc_distance({rx}, {ry}) - d) <= 1e-9 * (1 + d));
    }
}

TEST_CASE("half-plane chart conventions and isometry") {
    const auto zi = to_halfplane(DiscPoint::base());
    CHECK(zi.real() == doctest::Approx(0).epsilon(1e-12));
    CHECK(zi.imag() == doctest::Approx(1));

    const auto zf = to_halfplane({LinearMap::flow(0.3)});
    CHECK(zf.real() == doctest::Approx(0).epsilon(1e-12));
    CHECK(zf.imag() == doctest::Approx(std::exp(0.6)));

    const auto zr = to_halfplane({LinearMap::rotation(0.9)});
    CHECK(zr.real() == doctest::Approx(0).epsilon(1e-9));
    CHECK(zr.imag() == doctest::Approx(1));

    std::mt19937_64 rng(37);
    for (int i = 0; i < 1000; ++i) {
        const DiscPoint x = random_disc_point(rng);
        const DiscPoint y = random_disc_point(rng);
        const double via_chart = 0.5 * halfplane_distance(to_halfplane(x), to_halfplane(y));
        CHECK(disc_distance(x, y) == doctest::Approx(via_chart).epsilon(1e-7));
    }
}

TEST_CASE("geodesic_through endpoints and unit speed") {
    const DiscPoint I = DiscPoint::base();
    const DiscGeodesic flow = geodesic_through(I, {LinearMap::flow(1.0)});
    CHECK(disc_distance(flow.at(0), I) <= 1e-9);
    CHECK(disc_distance(flow.at(0.4), {LinearMap::flow(0.4)}) <= 1e-7);

    const DiscGeodesic diag = geodesic_through(I, {LinearMap::diagonal(2, 0.5)});
    CHECK(disc_distance(diag.at(std::log(2.0)), {LinearMap::diagonal(2, 0.5)}) <= 1e-7);

    CHECK_THROWS_AS(geodesic_through(I, {LinearMap::rotation(0.4)}), InvalidInput);

    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const DiscPoint x = random_disc_point(rng);
        const DiscPoint y = random_disc_point(rng);
        const double d = disc_distance(x, y);
        if (d < 1e-3) continue;
        const DiscGeodesic g = geodesic_through(x, y);
        CHECK(disc_distance(g.at(0), x) <= 1e-9);
        CHECK(disc_distance(g.at(d), y) <= 1e-7 * (1 + d));
        const double s = uniform(rng, -2, 2);
        const double t = uniform(rng, -2, 2);
        CHECK(disc_distance(g.at(s), g.at(t)) == doctest::Approx(std::abs(s - t)).epsilon(1e-7));
    }
}

TEST_CASE("project_to_geodesic explicit and properties") {
    const DiscGeodesic axis{DiscPoint::base(), LinearMap::identity()};
    // X on the geodesic projects to itself.
    const DiscPoint on = axis.at(0.8);
    const Projection p0 = project_to_geodesic(on, axis);
    CHECK(disc_distance(p0.point, on) <= 1e-9);
    CHECK(p0.t == doctest::Approx(0.8).epsilon(1e-9));

    // chart(X) = 1+i against the imaginary axis: foot at √2·i,
    // distance ½·ln(1+√2).
    const DiscPoint x{LinearMap{1, 0, 1, 1}};
    REQUIRE(to_halfplane(x).real() == doctest::Approx(1));
    REQUIRE(to_halfplane(x).imag() == doctest::Approx(1));
    const Projection p = project_to_geodesic(x, axis);
    const auto zp = to_halfplane(p.point);
    CHECK(zp.real() == doctest::Approx(0).epsilon(1e-9));
    CHECK(zp.imag() == doctest::Approx(std::sqrt(2.0)));
    CHECK(disc_distance(x, p.point) == doctest::Approx(0.5 * std::log(1 + std::sqrt(2.0))));

    // Coset well-definedness.
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const DiscPoint y = random_disc_point(rng);
        const DiscGeodesic g = random_geodesic(rng);
        const Projection pa = project_to_geodesic(y, g);
        const DiscPoint y2{LinearMap::rotation(uniform(rng, 0, 2 * M_PI)) * y.rep};
        const Projection pb = project_to_geodesic(y2, g);
        CHECK(disc_distance(pa.point, pb.point) <= 1e-7);
        // Minimising property on sampled parameters.
        const double dproj = disc_distance(y, pa.point);
        for (double t : {pa.t - 1.3, pa.t - 0.2, pa.t + 0.4, pa.t + 2.0}) {
            CHECK(dproj <= disc_distance(y, g.at(t)) + 1e-7);
        }
    }
}

TEST_CASE("balance_time_along closed form, oracle, boundary cases") {
    const DiscGeodesic axis{DiscPoint::base(), LinearMap::identity()};
    const Zonotope z14 = zonotope_build({{{1, 0}, 1}, {{0, 4}, 1}});
    const BalanceTime t14 = balance_time_along(z14, axis);
    REQUIRE(std::holds_alternative<double>(t14));
    CHECK(std::get<double>(t14) == doctest::Approx(std::log(2.0)));

    const Zonotope sq = zonotope_build({{{1, 0}, 1}, {{0, 1}, 1}});
    CHECK(std::get<double>(balance_time_along(sq, axis)) == doctest::Approx(0).epsilon(1e-12));

    const Zonotope horiz = zonotope_build({{{1, 0}, 1}, {{2, 0}, 1}});
    const BalanceTime tb = balance_time_along(horiz, axis);
    REQUIRE(std::holds_alternative<BoundaryEndpoint>(tb));
    const auto be = std::get<BoundaryEndpoint>(tb);
    CHECK(be.side == -1);  // horizontal shrinks backwards along the flow
    CHECK(be.point.direction == doctest::Approx(0));

    CHECK_THROWS_AS(balance_time_along(Zonotope{}, axis), InvalidInput);

    std::mt19937_64 rng(47);
    for (int i = 0; i < 100; ++i) {
        const Zonotope z = random_zonotope(rng);
        const DiscGeodesic g = random_geodesic(rng);
        const double closed = std::get<double>(balance_time_along(z, g));
        CHECK(closed == doctest::Approx(balance_time_bisection_oracle(z, g)).epsilon(1e-9));
    }
}

TEST_CASE("balance_point examples") {
    const Zonotope sq = zonotope_build({{{1, 0}, 1}, {{0, 1}, 1}});
    const BalancePoint bp = balance_point(sq);
    REQUIRE(std::holds_alternative<DiscPoint>(bp));
    CHECK(disc_distance(std::get<DiscPoint>(bp), DiscPoint::base()) <= 1e-9);

    const Zonotope rect = zonotope_build({{{2, 0}, 1}, {{0, 1}, 1}});
    const BalancePoint br = balance_point(rect);
    const DiscPoint expected{LinearMap{0.5, 1, -0.5, 1}};
    CHECK(disc_distance(std::get<DiscPoint>(br), expected) <= 1e-9);

    const BalancePoint bs = balance_point(zonotope_build({{{1, 1}, 1}}));
    REQUIRE(std::holds_alternative<DiscBoundaryPoint>(bs));
    CHECK(std::get<DiscBoundaryPoint>(bs).direction == doctest::Approx(M_PI / 4));
}

TEST_CASE("flow_length_profile shape and bounds") {
    const DiscGeodesic axis{DiscPoint::base(), LinearMap::identity()};
    const Zonotope sq = zonotope_build({{{1, 0}, 1}, {{0, 1}, 1}});
    for (double t : {-1.0, -0.3, 0.0, 0.8, 2.0}) {
        CHECK(flow_length_profile(sq, axis, t) ==
              doctest::Approx(std::exp(t) + std::exp(-t)));
    }
    CHECK(flow_length_minimizer(sq, axis) == doctest::Approx(0).epsilon(1e-6));

    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        const Zonotope z = random_zonotope(rng);
        const DiscGeodesic g = random_geodesic(rng);
        const double l0 = flow_length_profile(z, g, 0);
        // Convexity at random midpoints, and the √2·e^t envelope for t ≥ 0.
        const double t1 = uniform(rng, -2, 2);
        const double t2 = uniform(rng, -2, 2);
        const double mid = flow_length_profile(z, g, (t1 + t2) / 2);
        CHECK(mid <= (flow_length_profile(z, g, t1) + flow_length_profile(z, g, t2)) / 2 + 1e-9);
        const double tp = uniform(rng, 0, 2.5);
        CHECK(flow_length_profile(z, g, tp) <= std::sqrt(2.0) * std::exp(tp) * l0 * (1 + 1e-9));
        const double tn = uniform(rng, -2.5, 0);
        CHECK(flow_length_profile(z, g, tn) <=
              std::sqrt(2.0) * std::exp(std::abs(tn)) * l0 * (1 + 1e-9));
        // Minimiser within cosh⁻¹ 2 of the balance time.
        const double tb = std::get<double>(balance_time_along(z, g));
        const double tm = flow_length_minimizer(z, g);
        CHECK(std::abs(tm - tb) <= std::acosh(2.0) + 1e-6);
    }
}

TEST_CASE("balance bound: projection vs balance time") {
    std::mt19937_64 rng(59);
    for (int zi = 0; zi < 25; ++zi) {
        const Zonotope z = random_zonotope(rng);
        const BalancePoint bp = balance_point(z);
        const DiscPoint x = std::get<DiscPoint>(bp);
        for (int gi = 0; gi < 25; ++gi) {
            const DiscGeodesic g = random_geodesic(rng);
            const Projection p = project_to_geodesic(x, g);
            const double tb = std::get<double>(balance_time_along(z, g));
            CHECK(disc_distance(p.point, g.at(tb)) <= std::log(2.0) + 1e-6);
        }
    }
}

TEST_CASE("coarse uniqueness across admissible round certificates") {
    std::mt19937_64 rng(61);
    int multi = 0;
    for (int i = 0; i < 150; ++i) {
        const Zonotope z = random_zonotope(rng, 3, 8);
        const auto certs = round_transform_all(z, 1e-9);
        REQUIRE(!certs.empty());
        if (certs.size() > 1) ++multi;
        for (std::size_t a = 0; a < certs.size(); ++a) {
            for (std::size_t b = a + 1; b < certs.size(); ++b) {
                CHECK(disc_distance(DiscPoint::from(certs[a].map),
                                    DiscPoint::from(certs[b].map)) <=
                      2 * std::log(2.0) + 1e-6);
            }
        }
    }
    CHECK(multi > 0);  // the property must actually be exercised
}

TEST_CASE("balance point near the perimeter minimiser") {
    std::mt19937_64 rng(67);
    for (int i = 0; i < 60; ++i) {
        const Zonotope z = random_zonotope(rng);
        const DiscPoint bp = std::get<DiscPoint>(balance_point(z));
        const PerimeterMinimum pm = minimize_perimeter(z, 1e-9);
        REQUIRE(!pm.degenerate);
        CHECK(disc_distance(bp, DiscPoint::from(pm.minimizer)) <=
              std::acosh(2.0) + std::log(2.0) + 1e-6);
    }
}

TEST_SUITE_END();
