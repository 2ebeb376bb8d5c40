#pragma once

// Half-translation surfaces as glued Euclidean triangles.
//
// Coordinates are exact (Q[sqrt2]); IEEE doubles embed exactly, so deformed
// surfaces keep exact predicates for tracing, flips and angular order.

#include "flatdisc/planar.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace flatdisc {

struct EdgeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConeAngleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CornerRef {
    int tri = -1;
    int corner = -1;  // 0..2
    bool operator==(const CornerRef& o) const = default;
    bool valid() const { return tri >= 0; }
};

struct SlotRef {
    int tri = -1;
    int slot = -1;  // 0..2, edge from vertex `slot` to vertex `slot+1`
    bool operator==(const SlotRef& o) const = default;
    bool valid() const { return tri >= 0; }
    int id() const { return tri * 3 + slot; }
    static SlotRef from_id(int id) { return {id / 3, id % 3}; }
};

struct GluingSpec {
    SlotRef a;
    SlotRef b;
    int sign = +1;  // +1: translation (z ↦ z+c), −1: half turn (z ↦ −z+c)
};

struct RawSurfaceData {
    // Edge vectors per triangle; e0+e1+e2 must vanish, orientation CCW.
    std::vector<std::array<Vec2X, 3>> triangles;
    std::vector<GluingSpec> gluings;
};

struct SurfaceDiagnostics {
    int genus = 0;
    std::vector<int> cone_angles;  // multipliers k (cone angle kπ)
    double area = 0;
    double g_const = 2;  // max{2, genus − 2}
};

// Affine transition partner-chart → own-chart: z ↦ sign·z + shift.
struct ChartTransition {
    int sign = +1;
    Vec2X shift;
    Vec2X apply(const Vec2X& z) const {
        return sign > 0 ? z + shift : shift - z;
    }
    Vec2X apply_vector(const Vec2X& v) const { return sign > 0 ? v : -v; }
};

// Exact 2x2 map for deformations; doubles embed exactly.
struct LinearMapX {
    Scalar a{1}, b{0}, c{0}, d{1};
    static LinearMapX from(const LinearMap& m) {
        return {Scalar::from_double(m.a), Scalar::from_double(m.b),
                Scalar::from_double(m.c), Scalar::from_double(m.d)};
    }
    Vec2X apply(const Vec2X& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Scalar det() const { return a * d - b * c; }
};

class HalfTranslationSurface {
public:
    // Validates all invariants (gluing matching, sign-consistent edge
    // vectors, cone angles kπ with k ≥ 3, genus ≥ 2, positive area) and
    // throws on failure.
    static HalfTranslationSurface validate(const RawSurfaceData& raw);

    const SurfaceDiagnostics& diagnostics() const { return diag_; }
    int triangle_count() const { return static_cast<int>(tris_.size()); }
    std::uint64_t uid() const { return uid_; }

    const std::array<Vec2X, 3>& edges(int tri) const { return tris_[tri]; }
    // Vertex positions in the triangle chart: P0 = 0, P1 = e0, P2 = e0+e1.
    Vec2X vertex_position(int tri, int corner) const;

    SlotRef partner(SlotRef s) const { return partner_[s.id()]; }
    int gluing_sign(SlotRef s) const { return sign_[s.id()]; }
    // partner-chart → own-chart transition across `s`.
    ChartTransition transition(SlotRef s) const;

    int vertex_class(CornerRef c) const { return vclass_[c.tri * 3 + c.corner]; }
    int vertex_class_count() const { return static_cast<int>(fans_.size()); }
    // Corners around a vertex in CCW fan order (orbit of the rotation map).
    const std::vector<CornerRef>& vertex_fan(int vclass) const { return fans_[vclass]; }
    // Index of a corner within its vertex fan.
    int fan_index(CornerRef c) const { return fan_index_[c.tri * 3 + c.corner]; }
    CornerRef next_corner_ccw(CornerRef c) const;
    double corner_angle(CornerRef c) const;

    double area() const;                 // raw chart area
    const Scalar& area_exact() const { return area_exact_; }

    // Similarity factor toward unit area: effective length = scale * raw.
    double scale() const { return scale_; }
    const Scalar& scale_sq() const { return scale_sq_; }
    bool unit_area(double tol = 1e-9) const;

    HalfTranslationSurface deformed(const LinearMap& m) const;
    HalfTranslationSurface deformed_exact(const LinearMapX& m) const;
    HalfTranslationSurface normalized_area() const;

    // Local Delaunay via edge flips; metric structure unchanged. Edges glued
    // to the same triangle on both sides are skipped.
    HalfTranslationSurface delaunay() const;

    // Combinatorial isomorphism with exact edge-vector match up to a global
    // ±1 and relabeling.
    static bool isomorphic(const HalfTranslationSurface& s1, const HalfTranslationSurface& s2);

    RawSurfaceData raw() const;

private:
    HalfTranslationSurface() = default;
    void rebuild_topology();  // partner table → vertex fans, diagnostics

    std::vector<std::array<Vec2X, 3>> tris_;
    std::vector<SlotRef> partner_;  // indexed by slot id
    std::vector<int> sign_;
    std::vector<int> vclass_;
    std::vector<int> fan_index_;
    std::vector<std::vector<CornerRef>> fans_;
    SurfaceDiagnostics diag_;
    Scalar area_exact_{0};
    Scalar scale_sq_{1};
    double scale_ = 1;
    std::uint64_t uid_ = 0;
};

// Convenience builder: triangles given by corner positions; gluings by slot
// pairs. Signs inferred from the edge vectors when requested.
class SurfaceBuilder {
public:
    int add_triangle(const Vec2X& p0, const Vec2X& p1, const Vec2X& p2);
    void glue(SlotRef a, SlotRef b, int sign);
    // Glue by matching edge endpoint pairs in a shared chart (sign +1 case
    // for interior edges of a polygon decomposition).
    void glue_matching_interior_edges();
    HalfTranslationSurface build() const;

    Vec2X corner_position(int tri, int corner) const { return points_[tri][corner]; }

private:
    std::vector<std::array<Vec2X, 3>> points_;
    std::vector<GluingSpec> gluings_;
};

}  // namespace flatdisc
