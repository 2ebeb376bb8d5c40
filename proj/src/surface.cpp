#include "flatdisc/surface.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <sstream>

namespace flatdisc {

namespace {

std::atomic<std::uint64_t> g_surface_uid{1};

double angle_between(const Vec2X& a, const Vec2X& b) {
    const double ax = a.x.to_double(), ay = a.y.to_double();
    const double bx = b.x.to_double(), by = b.y.to_double();
    const double cr = ax * by - ay * bx;
    const double dt = ax * bx + ay * by;
    double ang = std::atan2(cr, dt);
    if (ang < 0) ang += 2 * M_PI;
    return ang;
}

// InCircle predicate: d strictly inside the circumcircle of CCW (a,b,c).
int incircle_sign(const Vec2X& a, const Vec2X& b, const Vec2X& c, const Vec2X& d) {
    const Vec2X pa = a - d;
    const Vec2X pb = b - d;
    const Vec2X pc = c - d;
    const Scalar na = pa.norm2();
    const Scalar nb = pb.norm2();
    const Scalar nc = pc.norm2();
    const Scalar det = pa.x * (pb.y * nc - nb * pc.y) - pa.y * (pb.x * nc - nb * pc.x)
                     + na * (pb.x * pc.y - pb.y * pc.x);
    return det.sign();  // > 0: inside (for CCW abc)
}

}  // namespace

Vec2X HalfTranslationSurface::vertex_position(int tri, int corner) const {
    const auto& e = tris_[tri];
    switch (corner) {
        case 0: return {Scalar(0), Scalar(0)};
        case 1: return e[0];
        default: return e[0] + e[1];
    }
}

ChartTransition HalfTranslationSurface::transition(SlotRef s) const {
    const SlotRef p = partner_[s.id()];
    const int sign = sign_[s.id()];
    // φ maps partner chart to this chart with φ(P'_j) = P_{i+1}.
    const Vec2X head = vertex_position(s.tri, (s.slot + 1) % 3);
    const Vec2X ptail = vertex_position(p.tri, p.slot);
    ChartTransition t;
    t.sign = sign;
    t.shift = sign > 0 ? head - ptail : head + ptail;
    return t;
}

CornerRef HalfTranslationSurface::next_corner_ccw(CornerRef c) const {
    // Cross edge slot (corner − 1) mod 3; the vertex is the head of that
    // edge, hence the tail corner of the partner slot.
    const SlotRef out{c.tri, (c.corner + 2) % 3};
    const SlotRef p = partner_[out.id()];
    return {p.tri, p.slot};
}

double HalfTranslationSurface::corner_angle(CornerRef c) const {
    const auto& e = tris_[c.tri];
    const Vec2X out = e[c.corner];
    const Vec2X in = -e[(c.corner + 2) % 3];
    return angle_between(out, in);
}

double HalfTranslationSurface::area() const { return area_exact_.to_double(); }

bool HalfTranslationSurface::unit_area(double tol) const {
    return std::abs(area() * scale_ * scale_ - 1.0) <= tol;
}

void HalfTranslationSurface::rebuild_topology() {
    const int nt = static_cast<int>(tris_.size());
    for (int t = 0; t < nt; ++t) {
        const auto& e = tris_[t];
        const Vec2X sum = e[0] + e[1] + e[2];
        if (!sum.x.is_zero() || !sum.y.is_zero()) {
            throw InvalidInput("triangle edges do not close up");
        }
        if (e[0].cross(e[1]).sign() <= 0) {
            throw InvalidInput("triangle degenerate or not CCW");
        }
    }
    for (int id = 0; id < nt * 3; ++id) {
        const SlotRef s = SlotRef::from_id(id);
        const SlotRef p = partner_[id];
        if (!p.valid() || partner_[p.id()].id() != id || sign_[id] != sign_[p.id()]) {
            throw InvalidInput("gluing table is not a matching");
        }
        const Vec2X& ea = tris_[s.tri][s.slot];
        const Vec2X& eb = tris_[p.tri][p.slot];
        const Vec2X expect = sign_[id] > 0 ? -ea : ea;
        if (!(eb == expect)) throw EdgeMismatch("glued edges disagree in length or direction");
    }
    vclass_.assign(nt * 3, -1);
    fan_index_.assign(nt * 3, -1);
    fans_.clear();
    for (int t = 0; t < nt; ++t) {
        for (int k = 0; k < 3; ++k) {
            if (vclass_[t * 3 + k] >= 0) continue;
            const int cls = static_cast<int>(fans_.size());
            fans_.emplace_back();
            CornerRef c{t, k};
            do {
                vclass_[c.tri * 3 + c.corner] = cls;
                fan_index_[c.tri * 3 + c.corner] = static_cast<int>(fans_[cls].size());
                fans_[cls].push_back(c);
                c = next_corner_ccw(c);
            } while (!(c == CornerRef{t, k}));
        }
    }
    area_exact_ = Scalar(0);
    for (const auto& e : tris_) {
        area_exact_ += e[0].cross(e[1]);
    }
    area_exact_ = area_exact_ / Scalar(2);

    diag_.cone_angles.clear();
    for (const auto& fan : fans_) {
        double total = 0;
        int sign_product = 1;
        for (const auto& c : fan) {
            total += corner_angle(c);
            sign_product *= sign_[SlotRef{c.tri, (c.corner + 2) % 3}.id()];
        }
        const int k = static_cast<int>(std::lround(total / M_PI));
        if (std::abs(total - k * M_PI) > 1e-7) {
            throw ConeAngleError("cone angle is not a multiple of pi");
        }
        // Developing once around the vertex composes the gluing signs; the
        // parity of k is pinned by that product.
        if ((k % 2 == 0) != (sign_product == 1)) {
            throw ConeAngleError("cone angle parity inconsistent with gluing signs");
        }
        if (k < 3) {
            std::ostringstream os;
            os << "cone angle " << k << "*pi violates k >= 3";
            throw ConeAngleError(os.str());
        }
        diag_.cone_angles.push_back(k);
    }
    const int V = static_cast<int>(fans_.size());
    const int F = nt;
    const int E = 3 * nt / 2;
    const int chi = V - E + F;
    if (chi % 2 != 0) throw InvalidInput("odd Euler characteristic");
    diag_.genus = (2 - chi) / 2;
    if (diag_.genus < 2) {
        std::ostringstream os;
        os << "genus " << diag_.genus << " < 2";
        throw InvalidInput(os.str());
    }
    // Gauss–Bonnet: Σ(k − 2) = 4(genus − 1).
    int excess = 0;
    for (int k : diag_.cone_angles) excess += k - 2;
    if (excess != 4 * (diag_.genus - 1)) {
        throw InternalError("Gauss-Bonnet bookkeeping failed");
    }
    diag_.area = area() * scale_ * scale_;
    diag_.g_const = std::max(2, diag_.genus - 2);
}

HalfTranslationSurface HalfTranslationSurface::validate(const RawSurfaceData& raw) {
    HalfTranslationSurface s;
    s.tris_ = raw.triangles;
    const int nt = static_cast<int>(s.tris_.size());
    if (nt == 0) throw InvalidInput("no triangles");
    s.partner_.assign(nt * 3, SlotRef{});
    s.sign_.assign(nt * 3, 0);
    std::vector<bool> used(nt * 3, false);
    for (const auto& g : raw.gluings) {
        for (const auto& sl : {g.a, g.b}) {
            if (sl.tri < 0 || sl.tri >= nt || sl.slot < 0 || sl.slot > 2) {
                throw InvalidInput("gluing slot out of range");
            }
            if (used[sl.id()]) throw InvalidInput("slot glued twice");
            used[sl.id()] = true;
        }
        if (g.sign != 1 && g.sign != -1) throw InvalidInput("gluing sign must be ±1");
        s.partner_[g.a.id()] = g.b;
        s.partner_[g.b.id()] = g.a;
        s.sign_[g.a.id()] = g.sign;
        s.sign_[g.b.id()] = g.sign;
    }
    for (int i = 0; i < nt * 3; ++i) {
        if (!used[i]) throw InvalidInput("unglued edge slot");
    }
    s.uid_ = g_surface_uid.fetch_add(1);
    s.rebuild_topology();
    return s;
}

HalfTranslationSurface HalfTranslationSurface::deformed(const LinearMap& m) const {
    if (std::abs(m.det()) < 1e-12) throw InvalidInput("deform: singular map");
    return deformed_exact(LinearMapX::from(m));
}

HalfTranslationSurface HalfTranslationSurface::deformed_exact(const LinearMapX& m) const {
    if (m.det().sign() <= 0) throw InvalidInput("deform: map must preserve orientation");
    HalfTranslationSurface out = *this;
    for (auto& tri : out.tris_) {
        for (auto& e : tri) e = m.apply(e);
    }
    out.uid_ = g_surface_uid.fetch_add(1);
    out.rebuild_topology();
    return out;
}

HalfTranslationSurface HalfTranslationSurface::normalized_area() const {
    HalfTranslationSurface out = *this;
    out.scale_sq_ = Scalar(1) / area_exact_;
    out.scale_ = 1.0 / std::sqrt(area());
    out.uid_ = g_surface_uid.fetch_add(1);
    out.rebuild_topology();
    return out;
}

HalfTranslationSurface HalfTranslationSurface::delaunay() const {
    HalfTranslationSurface out = *this;
    const int nt = static_cast<int>(tris_.size());
    bool changed = true;
    long guard = 200L * nt * nt + 1000;
    while (changed) {
        changed = false;
        for (int id = 0; id < nt * 3; ++id) {
            const SlotRef s = SlotRef::from_id(id);
            const SlotRef p = out.partner_[id];
            if (p.tri == s.tri) continue;  // self-glued: cannot quad-flip
            if (p.id() < id) continue;     // handle each gluing once
            // Develop the partner triangle across and test the circumcircle.
            const ChartTransition tr = out.transition(s);
            const Vec2X A = out.vertex_position(s.tri, s.slot);
            const Vec2X B = out.vertex_position(s.tri, (s.slot + 1) % 3);
            const Vec2X C = out.vertex_position(s.tri, (s.slot + 2) % 3);
            const Vec2X D = tr.apply(out.vertex_position(p.tri, (p.slot + 2) % 3));
            if (incircle_sign(A, B, C, D) <= 0) continue;  // locally Delaunay
            // Flip: quad A,D,B,C (CCW) gets diagonal D–C.
            // New triangles: t1 = (C,A,D), t2 = (D,B,C), both in s.tri's chart.
            const int t1 = s.tri;
            const int t2 = p.tri;
            const int psign = out.sign_[id];
            struct OldEdge {
                SlotRef slot;     // original slot
                int side_sign;    // +1 if already in t1 chart, psign if from t2
            };
            // Outer edges in order: t1 gets (C→A, A→D), t2 gets (D→B, B→C).
            const OldEdge o_ca{{s.tri, (s.slot + 2) % 3}, +1};
            const OldEdge o_ad{{p.tri, (p.slot + 1) % 3}, psign};
            const OldEdge o_db{{p.tri, (p.slot + 2) % 3}, psign};
            const OldEdge o_bc{{s.tri, (s.slot + 1) % 3}, +1};
            // Record old partners before overwriting.
            struct Link {
                SlotRef other;
                int sign;
            };
            auto link_of = [&](const OldEdge& e) {
                return Link{out.partner_[e.slot.id()], out.sign_[e.slot.id()]};
            };
            const Link l_ca = link_of(o_ca);
            const Link l_ad = link_of(o_ad);
            const Link l_db = link_of(o_db);
            const Link l_bc = link_of(o_bc);
            // New geometry.
            out.tris_[t1] = {A - C, D - A, C - D};
            out.tris_[t2] = {B - D, C - B, D - C};
            // Map: old outer slot id -> (new slot, side sign).
            std::map<int, std::pair<SlotRef, int>> remap;
            remap[o_ca.slot.id()] = {SlotRef{t1, 0}, o_ca.side_sign};
            remap[o_ad.slot.id()] = {SlotRef{t1, 1}, o_ad.side_sign};
            remap[o_db.slot.id()] = {SlotRef{t2, 0}, o_db.side_sign};
            remap[o_bc.slot.id()] = {SlotRef{t2, 1}, o_bc.side_sign};
            auto reglue = [&](const OldEdge& e, const Link& l) {
                const auto [new_slot, side] = remap.at(e.slot.id());
                SlotRef other = l.other;
                int sign = l.sign * side;
                if (auto it = remap.find(other.id()); it != remap.end()) {
                    other = it->second.first;
                    sign *= it->second.second;
                }
                out.partner_[new_slot.id()] = other;
                out.sign_[new_slot.id()] = sign;
                out.partner_[other.id()] = new_slot;
                out.sign_[other.id()] = sign;
            };
            reglue(o_ca, l_ca);
            reglue(o_ad, l_ad);
            reglue(o_db, l_db);
            reglue(o_bc, l_bc);
            // New diagonal: t1 slot 2 (D→C) with t2 slot 2 (C→D), same chart.
            out.partner_[SlotRef{t1, 2}.id()] = SlotRef{t2, 2};
            out.partner_[SlotRef{t2, 2}.id()] = SlotRef{t1, 2};
            out.sign_[SlotRef{t1, 2}.id()] = +1;
            out.sign_[SlotRef{t2, 2}.id()] = +1;
            changed = true;
            if (--guard < 0) throw InternalError("delaunay: flip iteration did not settle");
        }
    }
    out.uid_ = g_surface_uid.fetch_add(1);
    out.rebuild_topology();
    return out;
}

bool HalfTranslationSurface::isomorphic(const HalfTranslationSurface& s1,
                                        const HalfTranslationSurface& s2) {
    const int nt = s1.triangle_count();
    if (nt != s2.triangle_count()) return false;
    // Try mapping triangle 0 of s1 onto each (triangle, rotation, ±1) of s2
    // and propagate across gluings.
    for (int t0 = 0; t0 < nt; ++t0) {
        for (int rot = 0; rot < 3; ++rot) {
            for (int gs : {+1, -1}) {
                std::vector<int> tri_map(nt, -1);
                std::vector<int> rot_map(nt, -1);
                std::vector<std::pair<int, int>> stack{{0, 0}};
                tri_map[0] = t0;
                rot_map[0] = rot;
                bool ok = true;
                auto edge_matches = [&](int ta, int sa, int tb, int sb) {
                    const Vec2X& ea = s1.tris_[ta][sa];
                    const Vec2X eb = gs > 0 ? s2.tris_[tb][sb] : -s2.tris_[tb][sb];
                    return ea == eb;
                };
                std::vector<bool> visited(nt, false);
                std::vector<int> bfs{0};
                visited[0] = true;
                for (std::size_t qi = 0; qi < bfs.size() && ok; ++qi) {
                    const int a = bfs[qi];
                    const int b = tri_map[a];
                    const int r = rot_map[a];
                    for (int sl = 0; sl < 3 && ok; ++sl) {
                        const int sl2 = (sl + r) % 3;
                        if (!edge_matches(a, sl, b, sl2)) {
                            ok = false;
                            break;
                        }
                        const SlotRef pa = s1.partner_[SlotRef{a, sl}.id()];
                        const SlotRef pb = s2.partner_[SlotRef{b, sl2}.id()];
                        if (s1.sign_[SlotRef{a, sl}.id()] != s2.sign_[SlotRef{b, sl2}.id()]) {
                            ok = false;
                            break;
                        }
                        const int want_rot = (pb.slot - pa.slot + 6) % 3;
                        if (tri_map[pa.tri] == -1) {
                            tri_map[pa.tri] = pb.tri;
                            rot_map[pa.tri] = want_rot;
                            if (!visited[pa.tri]) {
                                visited[pa.tri] = true;
                                bfs.push_back(pa.tri);
                            }
                        } else if (tri_map[pa.tri] != pb.tri || rot_map[pa.tri] != want_rot) {
                            ok = false;
                        }
                    }
                }
                if (ok && static_cast<int>(bfs.size()) == nt) return true;
            }
        }
    }
    return false;
}

RawSurfaceData HalfTranslationSurface::raw() const {
    RawSurfaceData r;
    r.triangles = tris_;
    const int nt = static_cast<int>(tris_.size());
    for (int id = 0; id < nt * 3; ++id) {
        const SlotRef s = SlotRef::from_id(id);
        const SlotRef p = partner_[id];
        if (p.id() > id) r.gluings.push_back({s, p, sign_[id]});
    }
    return r;
}

// ---------------------------------------------------------------------------

int SurfaceBuilder::add_triangle(const Vec2X& p0, const Vec2X& p1, const Vec2X& p2) {
    points_.push_back({p0, p1, p2});
    return static_cast<int>(points_.size()) - 1;
}

void SurfaceBuilder::glue(SlotRef a, SlotRef b, int sign) { gluings_.push_back({a, b, sign}); }

void SurfaceBuilder::glue_matching_interior_edges() {
    // Match slots whose endpoint pairs coincide (reversed) in the shared chart.
    std::vector<bool> taken(points_.size() * 3, false);
    for (const auto& g : gluings_) {
        taken[g.a.id()] = true;
        taken[g.b.id()] = true;
    }
    const int nt = static_cast<int>(points_.size());
    auto endpoint = [&](SlotRef s, int which) {
        return points_[s.tri][(s.slot + which) % 3];
    };
    for (int i = 0; i < nt * 3; ++i) {
        if (taken[i]) continue;
        const SlotRef a = SlotRef::from_id(i);
        for (int j = i + 1; j < nt * 3; ++j) {
            if (taken[j]) continue;
            const SlotRef b = SlotRef::from_id(j);
            if (endpoint(a, 0) == endpoint(b, 1) && endpoint(a, 1) == endpoint(b, 0)) {
                gluings_.push_back({a, b, +1});
                taken[i] = taken[j] = true;
                break;
            }
        }
    }
}

HalfTranslationSurface SurfaceBuilder::build() const {
    RawSurfaceData raw;
    for (const auto& p : points_) {
        raw.triangles.push_back({p[1] - p[0], p[2] - p[1], p[0] - p[2]});
    }
    raw.gluings = gluings_;
    return HalfTranslationSurface::validate(raw);
}

}  // namespace flatdisc
