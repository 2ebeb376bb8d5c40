#pragma once

// Curves on a fixed half-translation surface: geodesic tightening (funnel
// method on unfolded strips), saddle-connection and cylinder enumeration,
// systoles, intersection numbers, and the return-arc/bicorn constructions.

#include "flatdisc/surface.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace flatdisc {

struct TrivialCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};

// Affine developing map chart → reference chart: z ↦ sign·z + shift.
struct DevMap {
    int sign = +1;
    Vec2X shift;

    Vec2X apply(const Vec2X& z) const { return sign > 0 ? z + shift : shift - z; }
    Vec2X apply_vector(const Vec2X& v) const { return sign > 0 ? v : -v; }
    Vec2X pull_back(const Vec2X& z) const { return sign > 0 ? z - shift : shift - z; }
    Vec2X pull_back_vector(const Vec2X& v) const { return apply_vector(v); }
    DevMap after_crossing(const ChartTransition& t) const {
        return {sign * t.sign, apply(t.shift)};
    }
};

struct SaddleConnection {
    CornerRef start_corner;  // wedge whose half-open sector holds the direction
    CornerRef end_corner;    // wedge holding the reversed direction
    int start_vertex = -1;
    int end_vertex = -1;
    Vec2X holonomy;                // in the start corner's chart
    std::vector<SlotRef> crossings;  // slots exited along the trace

    Scalar length2() const { return holonomy.norm2(); }
    double length() const { return norm(to_approx(holonomy)); }
};

// Orientation-insensitive identity of a connection.
struct ConnectionKey {
    int corner_id = -1;  // start corner id (tri*3+corner)
    Rat hx_a, hx_b, hy_a, hy_b;

    static ConnectionKey oriented(const SaddleConnection& c);
    static ConnectionKey reversed(const SaddleConnection& c);
    static ConnectionKey canonical(const SaddleConnection& c);
    auto tie() const { return std::tie(corner_id, hx_a, hx_b, hy_a, hy_b); }
    bool operator<(const ConnectionKey& o) const { return tie() < o.tie(); }
    bool operator==(const ConnectionKey& o) const { return tie() == o.tie(); }
};

// One straight piece of a curve inside a triangle.
struct Chord {
    int tri = -1;
    Vec2X from;
    Vec2X to;
};

struct CyclePassage {
    CornerRef in_corner;   // arrival wedge; in_ray points from the vertex back along the path
    CornerRef out_corner;  // departure wedge; out_ray points along the path
    Vec2X in_ray;
    Vec2X out_ray;
    double angle_ccw = 0;  // from in_ray to out_ray counterclockwise
    double angle_cw = 0;
};

struct FlatCycle {
    std::uint64_t surface_uid = 0;
    std::vector<SaddleConnection> steps;   // cyclic, as traversed
    std::vector<CyclePassage> passages;    // passage i precedes steps[i]
    std::vector<Chord> chords;

    double length() const;
    Scalar horizontal_length_exact() const;  // Σ |x(holonomy)|
    Scalar vertical_length_exact() const;
    std::vector<std::pair<Scalar, std::int64_t>> length_terms() const;  // Σ m√(len²)
    std::vector<WeightedSegmentX> segments() const;  // collapsed, for zonotopes
};

struct Cylinder {
    std::uint64_t surface_uid = 0;
    Vec2X core_direction;               // upper-half-plane representative
    Scalar circumference2;
    Scalar width2;
    std::vector<SaddleConnection> boundary;  // both sides, deduplicated
    std::vector<Chord> chords;               // the marked mid-height leaf
    std::vector<SlotRef> leaf_word;

    double circumference() const { return std::sqrt(circumference2.to_double()); }
    double width() const { return std::sqrt(width2.to_double()); }
    std::vector<WeightedSegmentX> segments() const;  // single core segment
};

using CurveRep = std::variant<FlatCycle, Cylinder>;

double curve_length(const CurveRep& c);
std::uint64_t curve_surface_uid(const CurveRep& c);
const std::vector<Chord>& curve_chords(const CurveRep& c);
std::vector<WeightedSegmentX> curve_segments(const CurveRep& c);
// Canonical cyclic identity (rotation/reversal invariant).
std::vector<ConnectionKey> curve_key(const CurveRep& c);

// ---------------------------------------------------------------------------
// Operations

// Geodesic representative of the free homotopy class of an edge-crossing
// word. Throws TrivialCurve for null-homotopic input.
CurveRep tighten_cycle(const HalfTranslationSurface& s, std::vector<SlotRef> word);

// Edge-crossing word of a cycle (vertex passages pushed to one side);
// tighten_cycle of the result reproduces the cycle.
std::vector<SlotRef> cycle_to_word(const HalfTranslationSurface& s, const FlatCycle& c);

ZonotopeX auxiliary_polygon_exact(const CurveRep& c);
Zonotope auxiliary_polygon(const CurveRep& c);

// All saddle connections of raw length ≤ L, one per unoriented class.
std::vector<SaddleConnection> enumerate_saddle_connections(const HalfTranslationSurface& s,
                                                           double L);

// All maximal cylinders of raw circumference ≤ L.
std::vector<Cylinder> find_cylinders(const HalfTranslationSurface& s, double L);

struct SystoleResult {
    std::vector<CurveRep> curves;            // all shortest essential geodesics
    double length = 0;                       // effective (scaled) length
    std::optional<Scalar> length2_exact;     // effective length², when a single term
};

// Flat systoles of a unit-area surface (normalize first); search cutoff 2/√π.
SystoleResult systole(const HalfTranslationSurface& s);

// Geometric intersection number of distinct geodesic classes. Cylinder
// representatives use the marked mid-height leaf. Representatives sharing a
// saddle connection are not supported.
std::int64_t intersection_number(const HalfTranslationSurface& s, const CurveRep& a,
                                 const CurveRep& b);

// 2·log_G i + 2 with G = max{2, g−2}; NotApplicable for disjoint curves.
double distance_upper_bound(std::int64_t intersections, const SurfaceDiagnostics& diag);

// Curve-graph distance bound for short curves: 2·log_G l1 + 2·log_G l2 + D.
double short_curves_distance_bound(double l1, double l2, const SurfaceDiagnostics& diag);

// ---------------------------------------------------------------------------
// Straight arcs and returns

// A straight segment on the surface: start point inside (or on the boundary
// of) a triangle, exact direction and exact flow extent measured by the
// parameter t ∈ [0,1] of p + t·disp.
struct StraightArc {
    int tri = -1;
    Vec2X start;
    Vec2X displacement;               // in the start chart
    std::vector<Chord> chords;
    Scalar length2() const { return displacement.norm2(); }
    double length() const { return norm(to_approx(displacement)); }
};

// Traces the straight segment, failing if it meets a vertex in its interior.
StraightArc trace_segment(const HalfTranslationSurface& s, int tri, const Vec2X& start,
                          const Vec2X& displacement);

struct ReturnArc {
    StraightArc arc;       // endpoints on the transversal, interior misses it
    Scalar flow_span;      // |displacement·d| / |d| · |d| (transformed x-extent)
};

// First-return arc: flow the whole transversal in direction `flow_dir`
// (band tracing with exact splits at singular leaves) and return the
// shortest arc that starts and ends on the transversal with
// singularity-free interior. `cap_x` bounds the transformed flow extent
// (dot(flow_dir, ·) units); the recurrence argument guarantees an event
// within cap_x = area·|d|²/(transversal span) for perpendicular flow.
std::optional<ReturnArc> first_return_arc(const HalfTranslationSurface& s,
                                          const StraightArc& transversal,
                                          const Vec2X& flow_dir, const Scalar& cap_x);

// Horizontal return arc with both endpoints on a vertical segment b:
// length ≤ rawArea / l(b) (which is 1/l(b) after unit-area scaling).
ReturnArc horizontal_return_arc(const HalfTranslationSurface& s, const StraightArc& b);

// ---------------------------------------------------------------------------
// Short companion curves (bicorn pipeline)

struct BicornCertificate {
    bool cylinder_case = false;
    StraightArc first_segment;           // the return arc (or the core leaf)
    StraightArc second_segment;          // subarc of a graph edge
    std::vector<std::int64_t> edge_intersections;  // bicorn vs each input edge
    double l_delta_estimate = 0;         // minimize_perimeter on the tightened curve
};

std::pair<CurveRep, BicornCertificate> short_companion_curve(
    const HalfTranslationSurface& s, const std::vector<SaddleConnection>& graph_edges);

// ---------------------------------------------------------------------------
// Helpers shared with the train-track layer

// Corner whose half-open wedge [e_k, −e_{k−1}) contains direction d (given in
// the chart of `hint`'s triangle); walks the vertex fan as needed.
CornerRef wedge_of_direction(const HalfTranslationSurface& s, CornerRef hint, Vec2X d,
                             Vec2X* d_local = nullptr);

// Shoot a straight ray from a vertex corner; returns the connection to the
// first vertex hit. Directions along wedge boundary edges are valid.
SaddleConnection shoot_from_corner(const HalfTranslationSurface& s, CornerRef corner,
                                   const Vec2X& direction);

// CCW angle swept from ray `in` (at corner cin) to ray `out` (at corner cout)
// around their common vertex. Rays point away from the vertex.
double ccw_angle_between_rays(const HalfTranslationSurface& s, CornerRef cin, Vec2X in_ray,
                              CornerRef cout, Vec2X out_ray);

// Exact total cyclic order position of a ray around its vertex class:
// (fan index of wedge, direction inside wedge).
struct VertexRay {
    int fan_index = 0;
    Vec2X dir;  // in the wedge corner's chart
};
VertexRay vertex_ray(const HalfTranslationSurface& s, CornerRef corner, const Vec2X& dir);
// Strict cyclic-order comparison of rays around one vertex (exact).
bool vertex_ray_less(const HalfTranslationSurface& s, int vclass, const VertexRay& a,
                     const VertexRay& b);

}  // namespace flatdisc
