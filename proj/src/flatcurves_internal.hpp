#pragma once

// Internals shared by the flatcurves translation units.

#include "flatdisc/flatcurves.hpp"

#include <deque>

namespace flatdisc::internal {

// Developed triangle strip along an edge-crossing word.
struct Strip {
    int start_tri = -1;
    std::vector<SlotRef> word;
    std::vector<int> tri_seq;   // tri_seq[j]: triangle before crossing word[j]; size = word+1
    std::vector<DevMap> devs;   // devs[j]: tri_seq[j] chart → start chart

    struct Portal {
        Vec2X left;             // head of the crossed edge (travel-left)
        Vec2X right;            // tail (travel-right)
        CornerRef left_corner;  // corners in the entered triangle
        CornerRef right_corner;
    };
    std::vector<Portal> portals;

    const DevMap& final_dev() const { return devs.back(); }
    int final_tri() const { return tri_seq.back(); }
};

Strip develop_strip(const HalfTranslationSurface& s, int start_tri,
                    const std::vector<SlotRef>& word);

struct FunnelPivot {
    int portal_index = -1;  // pivot sits on this portal
    Vec2X pos;              // developed position
    CornerRef corner;       // in the entered triangle
};

// Taut path from `start` to `end` through the portal sequence
// (Lee–Preparata funnel with convex chains; exact predicates).
std::vector<FunnelPivot> funnel_path(const Vec2X& start, const Vec2X& end,
                                     const std::vector<Strip::Portal>& portals);

// Splits straight funnel segments at strip vertices lying exactly on them.
void insert_collinear_pivots(const Strip& strip, const Vec2X& start, const Vec2X& end,
                             std::vector<FunnelPivot>& pivots);

// Cylinder through the closed leaf `p0 + t·tau` (strip of one period).
Cylinder cylinder_from_strip(const HalfTranslationSurface& s, const Strip& strip,
                             const Vec2X& p0, const Vec2X& tau);

// Chords of the straight segment from `from` to `to` in strip coordinates,
// crossing portals first_portal..last_portal (inclusive range of indices).
std::vector<Chord> strip_segment_chords(const HalfTranslationSurface& s, const Strip& strip,
                                        const Vec2X& from, const Vec2X& to, int first_portal,
                                        int last_portal);

// Reduces cyclic backtracks (slot followed by its partner slot).
std::vector<SlotRef> reduce_word_cyclic(const HalfTranslationSurface& s,
                                        std::vector<SlotRef> word);

// Crossing slots when passing around a vertex from the wedge of `from`
// to the wedge of `to`, on the ccw or cw side.
std::vector<SlotRef> fan_crossing_word(const HalfTranslationSurface& s, const VertexRay& from,
                                       const VertexRay& to, CornerRef from_corner, bool ccw);

}  // namespace flatdisc::internal
