#include "flatdisc/planar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace flatdisc {

double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

Vec2 direction_normalize(Vec2 v) {
    if (v.y < 0 || (v.y == 0 && v.x < 0)) return {-v.x, -v.y};
    return v;
}

Vec2X direction_normalize(Vec2X v) {
    const int sy = v.y.sign();
    if (sy < 0 || (sy == 0 && v.x.sign() < 0)) return {-v.x, -v.y};
    return v;
}

bool direction_less(const Vec2X& a, const Vec2X& b) {
    // Both in the closed upper half-plane; angle(a) < angle(b) iff a×b > 0.
    return a.cross(b).sign() > 0;
}

// ---------------------------------------------------------------------------

LinearMap LinearMap::rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, -s, s, c};
}

LinearMap LinearMap::flow(double t) { return {std::exp(t), 0, 0, std::exp(-t)}; }

LinearMap LinearMap::inverse() const {
    const double dt = det();
    if (dt == 0) throw InvalidInput("singular linear map");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string LinearMap::str() const {
    std::ostringstream os;
    os << "[[" << a << ", " << b << "], [" << c << ", " << d << "]]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Zonotope construction

namespace {

// Sorting comparator for upper-half-plane directions, doubles.
bool dir_less_approx(const Vec2& a, const Vec2& b) {
    return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
}

}  // namespace

Zonotope zonotope_build(const std::vector<WeightedSegment>& segments) {
    if (segments.empty()) throw InvalidInput("zonotope_build: empty segment list");
    std::vector<Vec2> scaled;
    scaled.reserve(segments.size());
    for (const auto& s : segments) {
        if (s.v.x == 0 && s.v.y == 0) throw InvalidInput("zonotope_build: zero segment");
        if (s.multiplicity < 1) throw InvalidInput("zonotope_build: multiplicity < 1");
        Vec2 v = direction_normalize(s.v);
        scaled.push_back({v.x * static_cast<double>(s.multiplicity),
                          v.y * static_cast<double>(s.multiplicity)});
    }
    std::sort(scaled.begin(), scaled.end(), dir_less_approx);
    Zonotope z;
    for (const auto& v : scaled) {
        if (!z.generators.empty()) {
            Vec2& last = z.generators.back();
            const double cr = last.x * v.y - last.y * v.x;
            const double sc = norm(last) * norm(v);
            if (std::abs(cr) <= 1e-14 * sc) {  // parallel: lengths add
                last = last + v;
                continue;
            }
        }
        z.generators.push_back(v);
    }
    return z;
}

ZonotopeX zonotope_build_exact(const std::vector<WeightedSegmentX>& segments) {
    if (segments.empty()) throw InvalidInput("zonotope_build: empty segment list");
    std::vector<Vec2X> scaled;
    scaled.reserve(segments.size());
    for (const auto& s : segments) {
        if (s.v.x.is_zero() && s.v.y.is_zero()) throw InvalidInput("zonotope_build: zero segment");
        if (s.multiplicity < 1) throw InvalidInput("zonotope_build: multiplicity < 1");
        Vec2X v = direction_normalize(s.v);
        const Scalar m(Rat(s.multiplicity));
        scaled.push_back({v.x * m, v.y * m});
    }
    std::sort(scaled.begin(), scaled.end(), [](const Vec2X& a, const Vec2X& b) {
        return direction_less(a, b);
    });
    ZonotopeX z;
    for (const auto& v : scaled) {
        if (!z.generators.empty() && z.generators.back().cross(v).sign() == 0) {
            z.generators.back() = z.generators.back() + v;
        } else {
            z.generators.push_back(v);
        }
    }
    return z;
}

Zonotope to_approx(const ZonotopeX& z) {
    Zonotope out;
    out.generators.reserve(z.generators.size());
    for (const auto& g : z.generators) out.generators.push_back(to_approx(g));
    return out;
}

std::vector<Vec2> Zonotope::centered_vertices() const {
    const std::size_t k = generators.size();
    std::vector<Vec2> verts;
    verts.reserve(2 * k);
    Vec2 total{0, 0};
    for (const auto& g : generators) total = total + g;
    const Vec2 center{total.x / 2, total.y / 2};
    Vec2 acc{0, 0};
    for (std::size_t i = 0; i < k; ++i) {
        verts.push_back(acc - center);
        acc = acc + generators[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
        verts.push_back(acc - center);
        acc = acc - generators[i];
    }
    return verts;
}

std::vector<Vec2X> ZonotopeX::centered_doubled_vertices() const {
    const std::size_t k = generators.size();
    std::vector<Vec2X> verts;
    verts.reserve(2 * k);
    Vec2X total{Scalar(0), Scalar(0)};
    for (const auto& g : generators) total = total + g;
    Vec2X acc{Scalar(0), Scalar(0)};
    const Scalar two(2);
    for (std::size_t i = 0; i < k; ++i) {
        verts.push_back(acc * two - total);
        acc = acc + generators[i];
    }
    for (std::size_t i = 0; i < k; ++i) {
        verts.push_back(acc * two - total);
        acc = acc - generators[i];
    }
    return verts;
}

// ---------------------------------------------------------------------------
// Metrics

ZonotopeMetrics zonotope_metrics(const Zonotope& z) {
    ZonotopeMetrics m;
    for (const auto& g : z.generators) {
        m.width += std::abs(g.x);
        m.height += std::abs(g.y);
        m.perimeter += 2 * norm(g);
    }
    for (std::size_t i = 0; i < z.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < z.generators.size(); ++j) {
            m.area += std::abs(z.generators[i].cross(z.generators[j]));
        }
    }
    return m;
}

ZonotopeMetricsX zonotope_metrics_exact(const ZonotopeX& z) {
    ZonotopeMetricsX m;
    m.width = Scalar(0);
    m.height = Scalar(0);
    m.area = Scalar(0);
    for (const auto& g : z.generators) {
        m.width += abs(g.x);
        m.height += abs(g.y);
        m.perimeter_terms.emplace_back(g.norm2(), 2);
    }
    for (std::size_t i = 0; i < z.generators.size(); ++i) {
        for (std::size_t j = i + 1; j < z.generators.size(); ++j) {
            m.area += abs(z.generators[i].cross(z.generators[j]));
        }
    }
    return m;
}

bool sqrt_sums_equal(std::vector<std::pair<Scalar, std::int64_t>> lhs,
                     std::vector<std::pair<Scalar, std::int64_t>> rhs) {
    // A term (s, m) stands for m·√s. Aggregate by exact key; the sums are
    // certified equal when the aggregated multisets match. (√ of distinct
    // squarefree-kernel values are linearly independent over Q, so for the
    // identity checks here — same terms reordered/merged — this is exact.)
    auto aggregate = [](std::vector<std::pair<Scalar, std::int64_t>>& terms) {
        std::map<std::pair<Rat, Rat>, std::int64_t> agg;
        for (auto& [s, mult] : terms) {
            if (s.sign() == 0 || mult == 0) continue;
            agg[{s.rat_part(), s.sqrt2_part()}] += mult;
        }
        return agg;
    };
    return aggregate(lhs) == aggregate(rhs);
}

Zonotope apply_linear(const LinearMap& m, const Zonotope& z) {
    if (std::abs(m.det()) < 1e-300) throw InvalidInput("apply_linear: singular map");
    std::vector<WeightedSegment> segs;
    segs.reserve(z.generators.size());
    for (const auto& g : z.generators) segs.push_back({m.apply(g), 1});
    return zonotope_build(segs);
}

// ---------------------------------------------------------------------------
// Round transform

namespace {

RoundCertificate certificate_from_pair(const Vec2& vi, const Vec2& vj) {
    Vec2 v = vi;
    Vec2 w = vj;
    double cr = v.cross(w);
    if (cr < 0) {
        std::swap(v, w);
        cr = -cr;
    }
    const double r = std::sqrt(cr);
    // A sends v -> (r,0), w -> (0,r): A = [[r,0],[0,r]] * [v w]^{-1}.
    const LinearMap vw{v.x, w.x, v.y, w.y};
    const LinearMap inv = vw.inverse();
    RoundCertificate cert;
    cert.map = LinearMap{r * inv.a, r * inv.b, r * inv.c, r * inv.d};
    cert.radius = r;
    return cert;
}

bool point_in_convex_polygon(const std::vector<Vec2>& poly, const Vec2& p, double tol) {
    // poly in CCW boundary order.
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % n];
        const Vec2 e = b - a;
        const Vec2 q = p - a;
        if (e.cross(q) < -tol) return false;
    }
    return true;
}

}  // namespace

RoundCertificate round_transform(const Zonotope& z) {
    if (z.degenerate()) throw DegeneratePolygon("round_transform: degenerate zonotope");
    const auto verts = z.centered_vertices();
    const std::size_t k = z.generators.size();  // diagonals indexed 0..k-1
    double best = -1;
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double area = std::abs(verts[i].cross(verts[j]));
            if (area > best * (1 + 1e-15)) {  // strict improvement; first pair wins ties
                best = area;
                bi = i;
                bj = j;
            }
        }
    }
    if (best <= 0) throw DegeneratePolygon("round_transform: zero-area vertex pairs");
    return certificate_from_pair(verts[bi], verts[bj]);
}

std::vector<RoundCertificate> round_transform_all(const Zonotope& z, double tol) {
    if (z.degenerate()) throw DegeneratePolygon("round_transform_all: degenerate zonotope");
    const auto verts = z.centered_vertices();
    const std::size_t k = z.generators.size();
    std::vector<RoundCertificate> out;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (std::abs(verts[i].cross(verts[j])) <= 0) continue;
            RoundCertificate cert = certificate_from_pair(verts[i], verts[j]);
            if (sandwich_check(z, cert, tol)) out.push_back(cert);
        }
    }
    return out;
}

bool sandwich_check(const Zonotope& z, const RoundCertificate& cert, double tol) {
    if (z.degenerate()) return false;
    const double r = cert.radius;
    std::vector<Vec2> img;
    for (const auto& v : z.centered_vertices()) img.push_back(cert.map.apply(v));
    // Outer: image inside B^inf(r(1+tol)).
    const double outer = r * (1 + tol);
    for (const auto& p : img) {
        if (std::abs(p.x) > outer || std::abs(p.y) > outer) return false;
    }
    // Inner: corners of B^1(r(1-tol)) inside the image polygon.
    const double inner = r * (1 - tol);
    const double eps = r * tol;
    const Vec2 corners[4] = {{inner, 0}, {0, inner}, {-inner, 0}, {0, -inner}};
    for (const auto& c : corners) {
        if (!point_in_convex_polygon(img, c, eps)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Perimeter minimisation

double half_perimeter(const Zonotope& z) {
    double s = 0;
    for (const auto& g : z.generators) s += norm(g);
    return s;
}

namespace {

double half_perimeter_at(const Zonotope& z, double theta, double t) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double et = std::exp(t);
    const double emt = std::exp(-t);
    double s = 0;
    for (const auto& g : z.generators) {
        const double rx = ct * g.x - st * g.y;
        const double ry = st * g.x + ct * g.y;
        s += std::hypot(et * rx, emt * ry);
    }
    return s;
}

// Golden-section minimisation of a convex 1-D function.
template <class F>
std::pair<double, double> golden_min(F f, double lo, double hi, double tol) {
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
    const double xm = (a + b) / 2;
    return {xm, f(xm)};
}

// For fixed θ the profile is strictly convex in t; expand a bracket then
// golden-section.
std::pair<double, double> min_over_t(const Zonotope& z, double theta, double tol) {
    double lo = -1, hi = 1;
    auto f = [&](double t) { return half_perimeter_at(z, theta, t); };
    while (f(lo) < f(lo + 1e-3)) lo -= 1;  // expand left while decreasing outward
    while (f(hi) < f(hi - 1e-3)) hi += 1;
    if (lo < -60 || hi > 60) throw InternalError("minimize_perimeter: bracket blow-up");
    return golden_min(f, lo, hi, tol);
}

}  // namespace

PerimeterMinimum minimize_perimeter(const Zonotope& z, double tol) {
    PerimeterMinimum out;
    if (z.generators.empty()) throw InvalidInput("minimize_perimeter: empty zonotope");
    if (z.degenerate()) {
        out.degenerate = true;
        out.half_perimeter = 0;
        const Vec2 g = z.generators.front();
        const double n = norm(g);
        out.boundary_direction = {g.x / n, g.y / n};
        return out;
    }
    const int sweep = 96;
    double best_theta = 0, best_t = 0, best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < sweep; ++i) {
        const double theta = M_PI * i / sweep;
        auto [t, val] = min_over_t(z, theta, 1e-4);
        if (val < best_val) {
            best_val = val;
            best_theta = theta;
            best_t = t;
        }
    }
    // Refine θ around the best sample, re-minimising t inside.
    auto profile = [&](double theta) { return min_over_t(z, theta, tol / 8).second; };
    const double span = M_PI / sweep;
    auto [theta_ref, val_ref] = golden_min(profile, best_theta - span, best_theta + span,
                                           tol);
    if (val_ref < best_val) {
        best_theta = theta_ref;
        best_val = val_ref;
    }
    best_t = min_over_t(z, best_theta, tol / 8).first;
    out.half_perimeter = half_perimeter_at(z, best_theta, best_t);
    out.minimizer = LinearMap::flow(best_t) * LinearMap::rotation(best_theta);
    return out;
}

double minimize_perimeter_grid_oracle(const Zonotope& z, int ntheta, int nt, double t_range,
                                      int refine_rounds) {
    if (z.degenerate()) return 0;
    double best = std::numeric_limits<double>::infinity();
    double bt = 0, bth = 0;
    double th_lo = 0, th_hi = M_PI, t_lo = -t_range, t_hi = t_range;
    for (int round = 0; round <= refine_rounds; ++round) {
        double rbest = std::numeric_limits<double>::infinity();
        double rbt = 0, rbth = 0;
        for (int i = 0; i <= ntheta; ++i) {
            const double theta = th_lo + (th_hi - th_lo) * i / ntheta;
            for (int j = 0; j <= nt; ++j) {
                const double t = t_lo + (t_hi - t_lo) * j / nt;
                const double v = half_perimeter_at(z, theta, t);
                if (v < rbest) {
                    rbest = v;
                    rbt = t;
                    rbth = theta;
                }
            }
        }
        if (rbest < best) {
            best = rbest;
            bt = rbt;
            bth = rbth;
        }
        const double dth = (th_hi - th_lo) / ntheta;
        const double dt = (t_hi - t_lo) / nt;
        th_lo = bth - 2 * dth;
        th_hi = bth + 2 * dth;
        t_lo = bt - 2 * dt;
        t_hi = bt + 2 * dt;
    }
    return best;
}

}  // namespace flatdisc
