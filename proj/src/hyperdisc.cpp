#include "flatdisc/hyperdisc.hpp"

#include <cmath>

namespace flatdisc {

namespace {

// Larger singular value of a 2x2 map. Written as a sum of hypots so that
// nearly-orthogonal maps lose no precision to cancellation:
// σ₁ ± σ₂ = √((a±d)² + (b∓c)²).
double sigma_max(const LinearMap& m) {
    const double s_plus = std::hypot(m.a + m.d, m.b - m.c);
    const double s_minus = std::hypot(m.a - m.d, m.b + m.c);
    return (s_plus + s_minus) / 2;
}

}  // namespace

DiscPoint DiscPoint::from(const LinearMap& m) {
    const double dt = m.det();
    if (dt <= 0) throw InvalidInput("DiscPoint: representative must have positive determinant");
    const double s = std::sqrt(dt);
    return {LinearMap{m.a / s, m.b / s, m.c / s, m.d / s}};
}

double disc_distance(const DiscPoint& x, const DiscPoint& y) {
    const LinearMap m = y.rep * x.rep.inverse();
    return std::log(std::max(1.0, sigma_max(m)));
}

bool same_disc_point(const DiscPoint& x, const DiscPoint& y, double tol) {
    return disc_distance(x, y) <= tol;
}

std::complex<double> to_halfplane(const DiscPoint& x) {
    // Q = AᵀA determines the coset; chart z = (q12 + i)/q22.
    const LinearMap q = x.rep.transpose() * x.rep;
    return {q.b / q.d, 1.0 / q.d};
}

double halfplane_distance(std::complex<double> z, std::complex<double> w) {
    const double num = std::norm(z - w);
    const double den = 2 * z.imag() * w.imag();
    return std::acosh(1 + num / den);
}

DiscGeodesic geodesic_through(const DiscPoint& x, const DiscPoint& y) {
    const LinearMap m = y.rep * x.rep.inverse();
    const double dist = disc_distance(x, y);
    if (dist <= 0) throw InvalidInput("geodesic_through: equal cosets");
    // SVD M = U Σ Vᵀ with rotations U, V: then [g_t Vᵀ x] passes through both.
    // Compute V from the eigenvectors of MᵀM.
    const LinearMap mtm = m.transpose() * m;
    const double tr = mtm.a + mtm.d;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4 * mtm.det()));
    const double lam = (tr + disc) / 2;  // larger eigenvalue = σ₁²
    // Eigenvector for lam.
    double vx, vy;
    if (std::abs(mtm.b) > 1e-300) {
        vx = mtm.b;
        vy = lam - mtm.a;
    } else if (std::abs(mtm.c) > 1e-300) {
        vx = lam - mtm.d;
        vy = mtm.c;
    } else {
        // diagonal MᵀM
        if (mtm.a >= mtm.d) {
            vx = 1;
            vy = 0;
        } else {
            vx = 0;
            vy = 1;
        }
    }
    const double n = std::hypot(vx, vy);
    vx /= n;
    vy /= n;
    // V has first column (vx, vy); Vᵀ rotation by -angle(v).
    const LinearMap vt{vx, vy, -vy, vx};
    DiscGeodesic g{x, vt};
    // Orient so that G(dist) = y.
    if (disc_distance(g.at(dist), y) > 1e-6) {
        // flip: use rotation by π/2 composed in (swap singular directions)
        const LinearMap flip{0.0, 1.0, -1.0, 0.0};
        g.axis = flip * vt;
        if (disc_distance(g.at(dist), y) > 1e-6) {
            throw InternalError("geodesic_through: endpoint reproduction failed");
        }
    }
    return g;
}

namespace {

// Ideal feet of the chart image of G: for M = axis·base.rep = [[a,b],[c,d]],
// chart(G(t)) tends to a/b as t→+∞ and to c/d as t→−∞ (∞ when the
// denominator vanishes).
struct Feet {
    bool plus_finite = true;
    double plus = 0;
    bool minus_finite = true;
    double minus = 0;
};

Feet geodesic_feet(const DiscGeodesic& g) {
    const LinearMap m = g.axis * g.base.rep;
    Feet f;
    if (std::abs(m.b) < 1e-300) {
        f.plus_finite = false;
    } else {
        f.plus = m.a / m.b;
    }
    if (std::abs(m.d) < 1e-300) {
        f.minus_finite = false;
    } else {
        f.minus = m.c / m.d;
    }
    return f;
}

// Map z by the Möbius transform sending the feet to {0, ∞}; returns log|w|.
double log_axis_coordinate(const Feet& f, std::complex<double> z) {
    std::complex<double> w;
    if (f.plus_finite && f.minus_finite) {
        w = (z - f.plus) / (z - f.minus);
    } else if (f.plus_finite) {
        w = z - f.plus;
    } else {
        w = 1.0 / (z - f.minus);
    }
    return std::log(std::abs(w));
}

}  // namespace

Projection project_to_geodesic(const DiscPoint& x, const DiscGeodesic& g) {
    const Feet f = geodesic_feet(g);
    const double u = log_axis_coordinate(f, to_halfplane(x));
    const double u0 = log_axis_coordinate(f, to_halfplane(g.at(0)));
    const double u1 = log_axis_coordinate(f, to_halfplane(g.at(1)));
    const double rate = u1 - u0;  // ±2: chart distance is twice disc distance
    if (std::abs(std::abs(rate) - 2) > 1e-6) {
        throw InternalError("project_to_geodesic: inconsistent axis rate");
    }
    const double t = (u - u0) / rate;
    return {g.at(t), t};
}

namespace {

// Width/height of the zonotope in the frame of G(t) factor through the
// frame matrix at t = 0: they scale exactly as e^{±t}.
struct FrameExtents {
    double width0 = 0;
    double height0 = 0;
};

FrameExtents frame_extents(const Zonotope& z, const DiscGeodesic& g) {
    const LinearMap frame = g.axis * g.base.rep;
    FrameExtents e;
    for (const auto& gen : z.generators) {
        const Vec2 v = frame.apply(gen);
        e.width0 += std::abs(v.x);
        e.height0 += std::abs(v.y);
    }
    return e;
}

double boundary_direction_angle(const Vec2& v) {
    const Vec2 d = direction_normalize(v);
    double a = std::atan2(d.y, d.x);
    if (a < 0) a += M_PI;
    if (a >= M_PI) a -= M_PI;
    return a;
}

}  // namespace

BalanceTime balance_time_along(const Zonotope& z, const DiscGeodesic& g) {
    if (z.generators.empty()) throw InvalidInput("balance_time_along: empty zonotope");
    const FrameExtents e = frame_extents(z, g);
    if (e.width0 <= 0 && e.height0 <= 0) throw InvalidInput("balance_time_along: zero zonotope");
    if (e.width0 <= 0) {
        // Completely vertical in the frame of G: balanced at the forward
        // endpoint, whose foliation has the direction of the generators.
        return BoundaryEndpoint{{boundary_direction_angle(z.generators.front())}, +1};
    }
    if (e.height0 <= 0) {
        return BoundaryEndpoint{{boundary_direction_angle(z.generators.front())}, -1};
    }
    // width(t) = e^t width0, height(t) = e^{-t} height0.
    return 0.5 * std::log(e.height0 / e.width0);
}

BalancePoint balance_point(const Zonotope& z) {
    if (z.degenerate()) {
        return DiscBoundaryPoint{boundary_direction_angle(z.generators.front())};
    }
    const RoundCertificate cert = round_transform(z);
    return DiscPoint::from(cert.map);
}

double flow_length_profile(const Zonotope& z, const DiscGeodesic& g, double t) {
    const LinearMap frame = g.axis * g.base.rep;
    const double et = std::exp(t);
    const double emt = std::exp(-t);
    double s = 0;
    for (const auto& gen : z.generators) {
        const Vec2 v = frame.apply(gen);
        s += std::hypot(et * v.x, emt * v.y);
    }
    return s;
}

double flow_length_minimizer(const Zonotope& z, const DiscGeodesic& g, double tol) {
    auto f = [&](double t) { return flow_length_profile(z, g, t); };
    double lo = -1, hi = 1;
    while (f(lo) < f(lo + 1e-3) && lo > -80) lo -= 1;
    while (f(hi) < f(hi - 1e-3) && hi < 80) hi += 1;
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return (a + b) / 2;
}

}  // namespace flatdisc
