#pragma once

#include <array>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "notched_room.hpp"

namespace artgallery {

/// Closed half-plane s * orient(a, b, p) >= 0.
struct HalfPlane {
    Point a, b;
    int side = 1;
    bool holds(const Point& p) const { return side * orient(a, b, p) >= 0; }
};

/// Whether the closed segment pq meets the intersection of the half-planes.
inline bool segment_meets(const std::vector<HalfPlane>& hs, const Point& p, const Point& q) {
    Rational lo = 0, hi = 1;
    for (const HalfPlane& h : hs) {
        Rational fp = h.side * cross(h.b - h.a, p - h.a);
        Rational fq = h.side * cross(h.b - h.a, q - h.a);
        if (fp < 0 && fq < 0) return false;
        if (fp >= 0 && fq >= 0) continue;
        Rational t = fp / (fp - fq);
        if (fp < 0) lo = std::max(lo, t);
        else hi = std::min(hi, t);
        if (lo > hi) return false;
    }
    return true;
}

/// Three slits forcing one guard onto a horizontal guard segment GH.
struct VariableGadget {
    Segment guard_segment;
    Notch f_slit, i_slit, j_slit;
    Point F, I, J;
    Point K, E;                         // far corners of the two forced triangles
    std::array<Point, 3> zone_f, zone_i;  // triangles FIK and EFI
    Rational clearance;

    /// Room-side points that see J: the cone from J through its mouth.
    std::vector<HalfPlane> j_cone() const {
        return {{J, j_mouth_lo(), -1}, {J, j_mouth_hi(), 1}, {{wall_right, 0}, {wall_right, 1}, 1}};
    }
    Point j_mouth_lo() const { return {wall_right, j_slit.lo}; }
    Point j_mouth_hi() const { return {wall_right, j_slit.hi}; }
    Rational wall_left, wall_right;
};

/// F and I notches on opposite walls pin the guard to the row; J's cone meets the row exactly in GH.
inline VariableGadget make_variable_gadget(const Segment& guard, const Rational& wall_left,
                                           const Rational& wall_right, const Rational& clearance) {
    const Point& G = guard.a;
    const Point& H = guard.b;
    if (G.y != H.y || !(G.x < H.x)) throw PreconditionError("variable gadget: guard segment must be horizontal with positive length");
    if (!(wall_left < G.x && H.x < wall_right)) throw PreconditionError("variable gadget: guard segment must lie strictly between the walls");
    if (!(clearance > 0) || !(clearance < wall_right - wall_left))
        throw PreconditionError("variable gadget: clearance out of range");
    const Rational d = 1;
    const Rational y = G.y;
    const Rational span = wall_right - wall_left;
    const Rational kappa = clearance / (span + d);
    const Rational mu = kappa * d;
    const Rational tau = clearance * (wall_right - H.x) / span;

    VariableGadget v;
    v.guard_segment = guard;
    v.clearance = clearance;
    v.wall_left = wall_left;
    v.wall_right = wall_right;
    v.F = {wall_left - d, y};
    v.I = {wall_right + d, y};
    v.J = {wall_right + d, y - tau};
    v.f_slit = {Wall::Left, y - mu, y, {v.F}, "F"};
    v.i_slit = {Wall::Right, y, y + mu, {v.I}, "I"};
    auto at_wall = [&](const Point& p) -> Rational { return v.J.y + (p.y - v.J.y) * (v.J.x - wall_right) / (v.J.x - p.x); };
    v.j_slit = {Wall::Right, at_wall(G), at_wall(H), {v.J}, "J"};
    // Zone for F lies under row y above the line from F through its lower mouth corner; I's zone mirrors it.
    v.K = {v.I.x, y - mu * (v.I.x - v.F.x) / d};
    v.E = {v.F.x, y + mu * (v.I.x - v.F.x) / d};
    v.zone_f = {v.F, v.I, v.K};
    v.zone_i = {v.E, v.F, v.I};
    if (!(v.j_slit.lo < v.j_slit.hi && v.j_slit.hi < y)) throw PreconditionError("variable gadget: degenerate J slit");
    return v;
}

/// Two pockets with occluders on the left wall forcing the guards on GH and NO to share an x-coordinate.
struct CopyGadget {
    Segment gh, no;
    Rational wall_x;
    Point A, B, C, D;  // upper pocket above GH: C, D on the wall, AB horizontal
    Point S, T, U, V;  // lower pocket below NO, the mirror image
    Notch upper, lower;

    /// Closed wedges of room points that see part of AB or UV.
    std::vector<HalfPlane> upper_wedge() const { return {{A, C, -1}, {B, D, 1}, {{wall_x, 0}, {wall_x, 1}, -1}}; }
    std::vector<HalfPlane> lower_wedge() const { return {{U, T, 1}, {V, S, -1}, {{wall_x, 0}, {wall_x, 1}, -1}}; }
};

inline CopyGadget make_copy_gadget(const Segment& GH, const Segment& NO, const Rational& wall_x,
                                   const Rational& row_gap, const Rational& eps) {
    const Point &G = GH.a, &H = GH.b, &N = NO.a, &O = NO.b;
    if (G.y != H.y || N.y != O.y) throw PreconditionError("copy gadget: guard segments must be horizontal");
    if (G.x != N.x || H.x != O.x) throw PreconditionError("copy gadget: guard segments must have equal x-extents");
    if (!(G.x < H.x)) throw PreconditionError("copy gadget: guard segments need positive length");
    if (!(N.y < G.y)) throw PreconditionError("copy gadget: NO must lie strictly below GH");
    if (!(wall_x < G.x)) throw PreconditionError("copy gadget: wall must lie left of the segments");
    if (!(row_gap > 0) || !(eps > 0)) throw PreconditionError("copy gadget: row gap and eps must be positive");
    const Rational delta = G.y - N.y;
    const Rational a = eps * row_gap, m = eps * row_gap;
    if (!(m < delta)) throw InfeasibleError("copy gadget: pocket taller than the row gap");
    const Rational u = m / (delta - m);
    const Rational W = wall_x;

    CopyGadget c;
    c.gh = GH;
    c.no = NO;
    c.wall_x = W;
    c.C = {W, G.y + a + m};
    c.D = {W, G.y + a};
    const Rational y_ab = c.C.y + u * (c.C.y - G.y);
    c.B = {W - u * (G.x - W), y_ab};
    c.A = {W - u * (H.x - W), y_ab};
    const Rational mid2 = G.y + N.y;
    auto mirror = [&](const Point& p) { return Point{p.x, mid2 - p.y}; };
    c.S = mirror(c.D);
    c.T = mirror(c.C);
    c.U = mirror(c.A);
    c.V = mirror(c.B);
    c.upper = {Wall::Left, c.D.y, c.C.y, {c.B, c.A}, "AB"};
    c.lower = {Wall::Left, c.T.y, c.S.y, {c.U, c.V}, "UV"};

    // Construction identities.
    auto require = [](bool ok, const char* what) {
        if (!ok) throw PreconditionError(std::string("copy gadget: ") + what);
    };
    require(intersect_lines(G, c.B, H, c.A) == c.C, "C is not the GB/HA intersection");
    require(intersect_lines(N, c.B, O, c.A) == c.D, "D is not the NB/OA intersection");
    require(intersect_lines(G, c.V, H, c.U) == c.S, "S is not the GV/HU intersection");
    require(intersect_lines(N, c.V, O, c.U) == c.T, "T is not the NV/OU intersection");
    require(G.y < c.C.y && c.C.y < y_ab, "C not between GH and AB");
    require(N.y < c.D.y && c.D.y < y_ab, "D not between NO and AB");
    require(c.U.y < c.S.y && c.S.y < G.y, "S not between GH and UV");
    require(c.U.y < c.T.y && c.T.y < N.y, "T not between NO and UV");

    // Sightlines that must pass the occluders; they hold once the wall is far enough left.
    auto cross_y = [&](const Point& p, const Point& q) -> Rational { return p.y + (q.y - p.y) * (W - p.x) / (q.x - p.x); };
    if (!(cross_y(G, c.A) >= c.D.y) || !(cross_y(O, c.B) <= c.C.y) || !(cross_y(N, c.U) <= c.S.y) ||
        !(cross_y(H, c.V) >= c.T.y))
        throw InfeasibleError("copy gadget: wall too close for the occluder sightlines");
    return c;
}

/// Narrow triangular slit in the right wall whose apex is seen only from a thin strip running down-left.
struct ClauseGadget {
    int index = 0;
    Point mouth_lo, mouth_hi, witness;
    Notch slit;

    /// Points of the half-plane x <= mouth x that see the witness.
    std::vector<HalfPlane> cone() const { return {{witness, mouth_lo, -1}, {witness, mouth_hi, 1}}; }
    bool region_contains(const Point& p) const {
        if (p.x > mouth_lo.x) return false;
        for (const auto& h : cone())
            if (!h.holds(p)) return false;
        return true;
    }
    /// Lower and upper boundary heights of the region at abscissa x.
    Rational lower_at(const Rational& x) const { return witness.y + (x - witness.x) * (witness.y - mouth_lo.y) / (witness.x - mouth_lo.x); }
    Rational upper_at(const Rational& x) const { return witness.y + (x - witness.x) * (witness.y - mouth_hi.y) / (witness.x - mouth_hi.x); }
    /// The closed triangular strip R_j cut off at x = x_min.
    std::vector<Point> region(const Rational& x_min) const {
        return {{x_min, lower_at(x_min)}, mouth_lo, mouth_hi, {x_min, upper_at(x_min)}};
    }
};

/// Slit with mouth [anchor, anchor + (0, width)] and apex anchor + (depth, depth).
inline ClauseGadget make_clause_gadget(const Point& anchor, int index, const Rational& depth, const Rational& width) {
    if (!(depth > 0)) throw PreconditionError("clause gadget: depth must be positive");
    if (!(width > 0)) throw PreconditionError("clause gadget: width must be positive");
    if (!(width < depth)) throw PreconditionError("clause gadget: width must be below depth");
    ClauseGadget c;
    c.index = index;
    c.mouth_lo = anchor;
    c.mouth_hi = {anchor.x, anchor.y + width};
    c.witness = {anchor.x + depth, anchor.y + depth};
    c.slit = {Wall::Right, c.mouth_lo.y, c.mouth_hi.y, {c.witness}, "clause"};
    return c;
}

/// Whether the regions of two clause gadgets are disjoint on [x_min, mouth x].
inline bool clause_regions_disjoint(const ClauseGadget& a, const ClauseGadget& b, const Rational& x_min) {
    const ClauseGadget& lo = a.mouth_lo.y < b.mouth_lo.y ? a : b;
    const ClauseGadget& hi = a.mouth_lo.y < b.mouth_lo.y ? b : a;
    // Both boundaries are lines, so separation at the two ends of the interval suffices.
    for (const Rational& x : {x_min, lo.mouth_lo.x})
        if (!(lo.upper_at(x) < hi.lower_at(x))) return false;
    return true;
}

/// Horizontal guard segments for the tube coordinate, generated from a clause gadget's cone.
struct WedgeFamily {
    Rational x_start, length;
    std::vector<Rational> positions;  // X_0 .. X_n: row beta meets the lower line at X_beta
    std::vector<Rational> heights;    // row heights y_0 .. y_n for the generating clause
    std::vector<Rational> constants;  // k_0 = 0 < ... < k_{n-1} = 1

    /// Row for band b (k_b <= x0 <= k_{b+1}) is beta = b + 1; x0 = 0 is beta = 0 and x0 = 1 is beta = n.
    Segment segment(int beta, const Rational& dy = 0) const {
        return {{x_start, heights.at(beta) + dy}, {x_start + length, heights.at(beta) + dy}};
    }
};

/// Fixes the wedge and solves for the common segment length so the last constant is exactly one.
inline WedgeFamily make_wedge_segments(int n, const ClauseGadget& wedge, const Rational& x_start) {
    if (n < 2) throw PreconditionError("wedge segments: n must be at least 2");
    const Point& Q = wedge.witness;
    if (!(x_start < wedge.mouth_lo.x)) throw PreconditionError("wedge segments: start must lie left of the slit");
    const Rational s_lo = (Q.y - wedge.mouth_lo.y) / (Q.x - wedge.mouth_lo.x);
    auto lower_inv = [&](const Rational& y) -> Rational { return Q.x + (y - Q.y) / s_lo; };

    WedgeFamily w;
    w.x_start = x_start;
    Rational x = x_start;
    for (int beta = 0; beta <= n; ++beta) {
        w.positions.push_back(x);
        w.heights.push_back(wedge.lower_at(x));
        x = lower_inv(wedge.upper_at(x));
    }
    for (int beta = 0; beta <= n; ++beta)
        if (!(w.positions[beta] < wedge.mouth_lo.x)) throw InfeasibleError("wedge segments: wedge too wide for n rows");
    w.length = w.positions[n - 1] - x_start;
    for (int b = 0; b < n; ++b) w.constants.push_back((w.positions[b] - x_start) / w.length);
    for (int b = 0; b + 1 < n; ++b)
        if (!(w.constants[b] < w.constants[b + 1])) throw InfeasibleError("wedge segments: constants not increasing");
    return w;
}

}  // namespace artgallery
