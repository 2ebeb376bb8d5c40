#pragma once

// The deformation disc Δ ≅ SO(2)\SL(2,R) as the hyperbolic plane of
// curvature −4: points, distance, geodesics, nearest-point projection,
// balance times and balance points of zonotopes.

#include "flatdisc/planar.hpp"

#include <complex>
#include <variant>

namespace flatdisc {

struct DiscPoint {
    LinearMap rep;  // coset representative, det = 1

    static DiscPoint base() { return {LinearMap::identity()}; }
    static DiscPoint from(const LinearMap& m);
};

struct DiscBoundaryPoint {
    double direction = 0;  // angle in [0, π)
};

struct DiscGeodesic {
    DiscPoint base;
    LinearMap axis;  // rotation; G(t) = [g_t · axis · base.rep]

    DiscPoint at(double t) const { return {LinearMap::flow(t) * axis * base.rep}; }
};

// log of the larger singular value of Y·X^{-1}; symmetric, vanishes on equal
// cosets, and is half the curvature −1 half-plane distance.
double disc_distance(const DiscPoint& x, const DiscPoint& y);

bool same_disc_point(const DiscPoint& x, const DiscPoint& y, double tol = 1e-9);

// Upper half-plane chart. Base point I ↦ i, flow g_t ↦ e^{2t}·i;
// disc_distance = ½ · d_{H,-1} in this chart.
std::complex<double> to_halfplane(const DiscPoint& x);

// Riemannian distance on the curvature −1 upper half plane.
double halfplane_distance(std::complex<double> z, std::complex<double> w);

// Unit-speed geodesic with G(0) = X and G(d(X,Y)) = Y.
DiscGeodesic geodesic_through(const DiscPoint& x, const DiscPoint& y);

struct Projection {
    DiscPoint point;
    double t = 0;  // parameter with point == G(t)
};

// Nearest-point projection of X to G, computed in the half-plane chart via
// the orthogonal circle through chart(X).
Projection project_to_geodesic(const DiscPoint& x, const DiscGeodesic& g);

// Balance time of a zonotope (auxiliary polygon at the disc's base surface)
// along a geodesic: the t with width = height in the G(t) frame.
// Completely horizontal/vertical zonotopes balance at a boundary endpoint.
struct BoundaryEndpoint {
    DiscBoundaryPoint point;
    int side = +1;  // +1: forward endpoint (t→+∞), −1: backward
};
using BalanceTime = std::variant<double, BoundaryEndpoint>;

BalanceTime balance_time_along(const Zonotope& z, const DiscGeodesic& g);

// Balance point of a zonotope on the disc: the round transform's coset for
// non-degenerate polygons, the generator direction on the boundary otherwise.
using BalancePoint = std::variant<DiscPoint, DiscBoundaryPoint>;

BalancePoint balance_point(const Zonotope& z);

// Half-perimeter of the zonotope in the frame of G(t); convex in t.
double flow_length_profile(const Zonotope& z, const DiscGeodesic& g, double t);

// argmin of the profile (golden-section over an expanded bracket).
double flow_length_minimizer(const Zonotope& z, const DiscGeodesic& g, double tol = 1e-9);

}  // namespace flatdisc
