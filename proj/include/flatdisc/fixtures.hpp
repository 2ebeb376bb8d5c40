#pragma once

// Built-in reference surfaces used by tests, experiments and the CLI.

#include "flatdisc/surface.hpp"

namespace flatdisc::fixtures {

// Three unit squares in an L, opposite-side gluings, squares split along the
// up-right diagonal. One 6π cone point, genus 2.
HalfTranslationSurface l_surface();

// The same flat L-surface with a deliberately non-Delaunay triangulation.
HalfTranslationSurface l_surface_skinny();

// Regular octagon (side 1, exact Q[sqrt2] coordinates), opposite sides glued
// by translation, fan-triangulated. One 6π cone point, genus 2.
HalfTranslationSurface octagon_surface();

// Two unit-square tori slit along (0,0)→(1/2,1/2) and cross-glued.
// Two 4π cone points, genus 2.
HalfTranslationSurface slit_tori_surface();

// [0,4]×[0,1] rectangle, left/right glued by translation, bottom pieces
// b1↔b3, b2↔b4 and top pieces t1↔t3, t2↔t4 glued by half turns: a genuinely
// half-translation surface (gluing signs −1). Two 4π cone points, genus 2.
HalfTranslationSurface folded_rectangle_surface();

}  // namespace flatdisc::fixtures
