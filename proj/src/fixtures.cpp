#include "flatdisc/fixtures.hpp"

namespace flatdisc::fixtures {

namespace {

Vec2X pt(int x, int y) { return {Scalar(x), Scalar(y)}; }
Vec2X pt(Rat x, Rat y) { return {Scalar(std::move(x)), Scalar(std::move(y))}; }

}  // namespace

HalfTranslationSurface l_surface() {
    SurfaceBuilder b;
    // Squares A = [0,1]², B = [1,2]×[0,1], C = [0,1]×[1,2], each split along
    // the up-right diagonal.
    const int a0 = b.add_triangle(pt(0, 0), pt(1, 0), pt(1, 1));
    const int a1 = b.add_triangle(pt(0, 0), pt(1, 1), pt(0, 1));
    const int b0 = b.add_triangle(pt(1, 0), pt(2, 0), pt(2, 1));
    const int b1 = b.add_triangle(pt(1, 0), pt(2, 1), pt(1, 1));
    const int c0 = b.add_triangle(pt(0, 1), pt(1, 1), pt(1, 2));
    const int c1 = b.add_triangle(pt(0, 1), pt(1, 2), pt(0, 2));
    // Boundary identifications (all translations).
    b.glue({a0, 0}, {c1, 1}, +1);  // bottom [0,1] ↔ top [0,1]×{2}
    b.glue({b0, 0}, {b1, 1}, +1);  // bottom [1,2] ↔ top of B
    b.glue({a1, 2}, {b0, 1}, +1);  // left {0}×[0,1] ↔ right {2}×[0,1]
    b.glue({c1, 2}, {c0, 1}, +1);  // left {0}×[1,2] ↔ right {1}×[1,2]
    b.glue_matching_interior_edges();
    return b.build();
}

HalfTranslationSurface l_surface_skinny() {
    SurfaceBuilder b;
    const int k0 = b.add_triangle(pt(0, 0), pt(1, 0), pt(2, 1));
    const int k1 = b.add_triangle(pt(1, 0), pt(2, 0), pt(2, 1));
    const int k2 = b.add_triangle(pt(0, 0), pt(2, 1), pt(1, 1));
    const int k3 = b.add_triangle(pt(0, 0), pt(1, 1), pt(0, 1));
    const int k4 = b.add_triangle(pt(0, 1), pt(1, 1), pt(1, 2));
    const int k5 = b.add_triangle(pt(0, 1), pt(1, 2), pt(0, 2));
    b.glue({k0, 0}, {k5, 1}, +1);  // bottom [0,1] ↔ top
    b.glue({k1, 0}, {k2, 1}, +1);  // bottom [1,2] ↔ top of right square
    b.glue({k1, 1}, {k3, 2}, +1);  // right {2}×[0,1] ↔ left {0}×[0,1]
    b.glue({k4, 1}, {k5, 2}, +1);  // right {1}×[1,2] ↔ left {0}×[1,2]
    b.glue_matching_interior_edges();
    return b.build();
}

HalfTranslationSurface octagon_surface() {
    // Regular octagon with side 1: half-width a = (1+√2)/2.
    const Scalar half(Rat(1, 2));
    const Scalar a = half + Scalar(Rat(0), Rat(1, 2));  // 1/2 + √2/2
    const Vec2X v[8] = {
        {a, half},  {half, a},  {-half, a},  {-a, half},
        {-a, -half}, {-half, -a}, {half, -a}, {a, -half},
    };
    SurfaceBuilder b;
    int tri[6];
    for (int i = 0; i < 6; ++i) tri[i] = b.add_triangle(v[0], v[i + 1], v[i + 2]);
    // Opposite sides glued by translation. Side k runs v[k] → v[k+1].
    b.glue({tri[0], 0}, {tri[3], 1}, +1);  // side 0 ↔ side 4
    b.glue({tri[0], 1}, {tri[4], 1}, +1);  // side 1 ↔ side 5
    b.glue({tri[1], 1}, {tri[5], 1}, +1);  // side 2 ↔ side 6
    b.glue({tri[2], 1}, {tri[5], 2}, +1);  // side 3 ↔ side 7
    b.glue_matching_interior_edges();
    return b.build();
}

HalfTranslationSurface slit_tori_surface() {
    SurfaceBuilder b;
    int t1[4];
    int t2[4];
    for (int s = 0; s < 2; ++s) {
        const Vec2X c00 = pt(0 + 3 * s, 0);  // offset copies; charts are local anyway
        const Vec2X c10 = pt(1 + 3 * s, 0);
        const Vec2X c11 = pt(1 + 3 * s, 1);
        const Vec2X c01 = pt(0 + 3 * s, 1);
        const Vec2X m{c00.x + Scalar(Rat(1, 2)), Scalar(Rat(1, 2))};
        int* t = s == 0 ? t1 : t2;
        t[0] = b.add_triangle(c00, c10, m);   // right bank on slot 2 (m→c00)
        t[1] = b.add_triangle(m, c10, c11);
        t[2] = b.add_triangle(m, c11, c01);
        t[3] = b.add_triangle(c00, m, c01);   // left bank on slot 0 (c00→m)
        b.glue({t[0], 0}, {t[2], 1}, +1);     // bottom ↔ top
        b.glue({t[1], 1}, {t[3], 2}, +1);     // right ↔ left
    }
    // Cross-glue the slit banks.
    b.glue({t1[0], 2}, {t2[3], 0}, +1);
    b.glue({t2[0], 2}, {t1[3], 0}, +1);
    b.glue_matching_interior_edges();
    return b.build();
}

HalfTranslationSurface folded_rectangle_surface() {
    SurfaceBuilder b;
    int lo[4];
    int hi[4];
    for (int i = 0; i < 4; ++i) {
        lo[i] = b.add_triangle(pt(i, 0), pt(i + 1, 0), pt(i + 1, 1));
        hi[i] = b.add_triangle(pt(i, 0), pt(i + 1, 1), pt(i, 1));
    }
    b.glue({hi[0], 2}, {lo[3], 1}, +1);  // left {0}×[0,1] ↔ right {4}×[0,1]
    // Bottom pieces bᵢ = [i,i+1]×{0} and tops tᵢ, folded by half turns.
    b.glue({lo[0], 0}, {lo[2], 0}, -1);  // b1 ↔ b3
    b.glue({lo[1], 0}, {lo[3], 0}, -1);  // b2 ↔ b4
    b.glue({hi[0], 1}, {hi[2], 1}, -1);  // t1 ↔ t3
    b.glue({hi[1], 1}, {hi[3], 1}, -1);  // t2 ↔ t4
    b.glue_matching_interior_edges();
    return b.build();
}

}  // namespace flatdisc::fixtures
