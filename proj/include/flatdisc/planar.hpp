#pragma once

// Planar linear algebra, zonotopes (auxiliary polygons), the rounding
// transform, and perimeter minimisation over unit-determinant maps.

#include "flatdisc/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatdisc {

// ---------------------------------------------------------------------------
// Errors

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegeneratePolygon : std::domain_error {
    using std::domain_error::domain_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Vectors

template <class S>
struct Vec2T {
    S x{};
    S y{};

    Vec2T() = default;
    Vec2T(S px, S py) : x(std::move(px)), y(std::move(py)) {}

    Vec2T operator+(const Vec2T& o) const { return {x + o.x, y + o.y}; }
    Vec2T operator-(const Vec2T& o) const { return {x - o.x, y - o.y}; }
    Vec2T operator-() const { return {-x, -y}; }
    Vec2T operator*(const S& t) const { return {x * t, y * t}; }

    S cross(const Vec2T& o) const { return x * o.y - y * o.x; }
    S dot(const Vec2T& o) const { return x * o.x + y * o.y; }
    S norm2() const { return x * x + y * y; }

    bool operator==(const Vec2T& o) const { return x == o.x && y == o.y; }
};

using Vec2 = Vec2T<double>;
using Vec2X = Vec2T<Scalar>;

double norm(const Vec2& v);
inline Vec2 to_approx(const Vec2X& v) { return {v.x.to_double(), v.y.to_double()}; }

// Direction representative in the closed upper half-plane:
// y > 0, or y = 0 and x > 0. Directions of segments are defined up to ±1.
Vec2 direction_normalize(Vec2 v);
Vec2X direction_normalize(Vec2X v);

// Exact angular comparison of upper-half-plane representatives
// (angle in [0, π)), by cross-product sign.
bool direction_less(const Vec2X& a, const Vec2X& b);

// ---------------------------------------------------------------------------
// Linear maps

struct LinearMap {
    double a = 1, b = 0, c = 0, d = 1;  // row-major [[a,b],[c,d]]

    static LinearMap identity() { return {}; }
    static LinearMap rotation(double theta);
    // diag(e^t, e^{-t})
    static LinearMap flow(double t);
    static LinearMap diagonal(double sx, double sy) { return {sx, 0, 0, sy}; }

    double det() const { return a * d - b * c; }
    LinearMap inverse() const;
    LinearMap transpose() const { return {a, c, b, d}; }
    LinearMap operator*(const LinearMap& o) const;
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    bool is_unit_det(double tol = 1e-9) const { return std::abs(det() - 1.0) <= tol; }
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Zonotopes

struct WeightedSegment {
    Vec2 v;
    std::int64_t multiplicity = 1;
};
struct WeightedSegmentX {
    Vec2X v;
    std::int64_t multiplicity = 1;
};

// Canonical zonotope: generators are direction-normalised, parallel classes
// merged (lengths add, weighted by multiplicity), sorted by direction angle.
// Degenerate when a single parallel class remains.
struct Zonotope {
    std::vector<Vec2> generators;  // merged; one vector per direction class

    bool degenerate() const { return generators.size() <= 1; }
    std::size_t size() const { return generators.size(); }

    // Vertices of the centred polygon (π-rotational symmetry about origin),
    // in boundary order: partial sums of (u_1..u_k, -u_1..-u_k) minus centre.
    std::vector<Vec2> centered_vertices() const;
};

struct ZonotopeX {
    std::vector<Vec2X> generators;
    bool degenerate() const { return generators.size() <= 1; }
    std::vector<Vec2X> centered_doubled_vertices() const;  // scaled by 2 to stay in the ring
};

struct ZonotopeMetrics {
    double width = 0;
    double height = 0;
    double perimeter = 0;
    double area = 0;
};

struct ZonotopeMetricsX {
    Scalar width;
    Scalar height;
    Scalar area;
    // Perimeter is a sum of square roots; expose the exact multiset
    // of (squared length, count) terms instead of a closed value.
    std::vector<std::pair<Scalar, std::int64_t>> perimeter_terms;  // 2·Σ‖u_i‖ encoded
};

Zonotope zonotope_build(const std::vector<WeightedSegment>& segments);
ZonotopeX zonotope_build_exact(const std::vector<WeightedSegmentX>& segments);
Zonotope to_approx(const ZonotopeX& z);

ZonotopeMetrics zonotope_metrics(const Zonotope& z);
ZonotopeMetricsX zonotope_metrics_exact(const ZonotopeX& z);

// True iff the two formal sums of square roots Σ m_i √s_i agree as multisets
// of (value, total multiplicity). Used to certify perimeter identities
// exactly without evaluating roots.
bool sqrt_sums_equal(std::vector<std::pair<Scalar, std::int64_t>> lhs,
                     std::vector<std::pair<Scalar, std::int64_t>> rhs);

Zonotope apply_linear(const LinearMap& m, const Zonotope& z);

// ---------------------------------------------------------------------------
// Round Polygon transform

struct RoundCertificate {
    LinearMap map;     // unit determinant
    double radius = 0;
};

// Finds A ∈ SL(2,R) and r with B¹(r) ⊆ A·Z_centered ⊆ B^∞(r): selects a
// maximal-area parallelogram spanned by two origin-symmetric vertex
// diagonals and maps its half-diagonals to (r,0), (0,r).
// Throws DegeneratePolygon for degenerate zonotopes.
RoundCertificate round_transform(const Zonotope& z);

// All diagonal-pair certificates that satisfy the sandwich at `tol`
// (used for the coarse-uniqueness property).
std::vector<RoundCertificate> round_transform_all(const Zonotope& z, double tol = 1e-9);

bool sandwich_check(const Zonotope& z, const RoundCertificate& cert, double tol);

// ---------------------------------------------------------------------------
// Perimeter minimisation over SL(2,R)

struct PerimeterMinimum {
    double half_perimeter = 0;
    bool degenerate = false;
    LinearMap minimizer;        // valid when !degenerate
    Vec2 boundary_direction;    // valid when degenerate (unit-ish direction)
};

// inf over unit-determinant A of half the perimeter of A·Z. Uses the
// convexity of t ↦ perimeter(g_t ρ_θ Z) for fixed θ: golden-section in t
// nested in a θ sweep, then local refinement in θ.
PerimeterMinimum minimize_perimeter(const Zonotope& z, double tol = 1e-9);

// Brute-force (t, θ) grid oracle for cross-checks; returns the best half
// perimeter found on an nt×ntheta grid over t ∈ [-t_range, t_range].
double minimize_perimeter_grid_oracle(const Zonotope& z, int ntheta = 180, int nt = 160,
                                      double t_range = 4.0, int refine_rounds = 3);

double half_perimeter(const Zonotope& z);

}  // namespace flatdisc
