#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "formula.hpp"
#include "gadgets.hpp"
#include "notched_room.hpp"
#include "surface.hpp"

namespace artgallery {

struct GuardSegmentInfo {
    int clause = 0;
    int position = 0;  // literal index within the clause
    int var = 0;
    Literal literal;
    Segment segment;
};

/// Which part of a guard segment lies in its clause region.
inline std::string designation(const GuardSegmentInfo& s) {
    if (s.literal.kind == Literal::Kind::Band) return "band" + std::to_string(s.literal.value);
    return s.literal.value == 0 ? "left" : "right";
}

struct ClauseRegion {
    int clause = 0;
    std::vector<Point> region;
    Point witness;
};

struct SurfaceSource {
    int genus = 0;
    bool orientable = true;
};

struct Gallery {
    CnfFormula formula;
    Rational epsilon;
    std::optional<SurfaceSource> surface;
    NotchedRoom room;
    SimplePolygon polygon;
    std::vector<std::array<Rational, 2>> columns;  // x-interval X_i per variable
    std::vector<GuardSegmentInfo> guard_segments;
    std::vector<VariableGadget> variable_gadgets;  // parallel to guard_segments
    std::vector<ClauseGadget> clause_gadgets;
    std::vector<ClauseRegion> clause_regions;
    std::vector<CopyGadget> copy_gadgets;
    std::vector<std::array<int, 2>> copy_pairs;  // (upper, lower) guard segment indices
    std::vector<std::string> notes;

    std::size_t k() const { return guard_segments.size(); }
};

inline std::size_t vertex_count(const Gallery& g) { return g.polygon.size(); }

/// Clearance parameter from ARTGALLERY_EPSILON, or 1/16.
inline Rational default_epsilon() {
    if (const char* env = std::getenv("ARTGALLERY_EPSILON")) return parse_rational(env);
    return make_rational(1, 16);
}

struct AuditFailure {
    bool wall_related = false;  // cured by moving the left wall further out
    std::string what;
};

namespace detail {

inline const Rational& layout_depth() {
    static const Rational t = 4;
    return t;
}

/// x-interval of a horizontal segment inside a clause region, if any.
inline std::optional<std::array<Rational, 2>> region_span(const ClauseGadget& c, const Segment& s) {
    const Rational& y = s.a.y;
    const Point& Q = c.witness;
    Rational lo_slope = (Q.y - c.mouth_lo.y) / (Q.x - c.mouth_lo.x);
    Rational hi_slope = (Q.y - c.mouth_hi.y) / (Q.x - c.mouth_hi.x);
    Rational left = Q.x + (y - Q.y) / hi_slope;
    Rational right = std::min(Rational(Q.x + (y - Q.y) / lo_slope), c.mouth_lo.x);
    left = std::max(left, s.a.x);
    right = std::min(right, s.b.x);
    if (left > right) return std::nullopt;
    return std::array<Rational, 2>{left, right};
}

/// The part of a guard segment that must see its clause witness.
inline std::array<Rational, 2> designated_span(const Gallery& g, const GuardSegmentInfo& s) {
    const Rational &a = s.segment.a.x, &b = s.segment.b.x;
    if (s.literal.kind == Literal::Kind::Band) {
        const auto& k = g.formula.bands;
        Rational len = b - a;
        return {a + k[s.literal.value] * len, a + k[s.literal.value + 1] * len};
    }
    return s.literal.value == 0 ? std::array<Rational, 2>{a, a} : std::array<Rational, 2>{b, b};
}

}  // namespace detail

/// Invariant audit of an assembled gallery; an empty result means every check passed.
inline std::vector<AuditFailure> audit(const Gallery& g) {
    std::vector<AuditFailure> out;
    auto fail = [&](bool wall, std::string what) { out.push_back({wall, std::move(what)}); };
    const auto& segs = g.guard_segments;
    const Rational& W = g.room.west;

    try {
        if (!(g.room.polygon() == g.polygon)) fail(false, "stored polygon differs from the room assembly");
    } catch (const PreconditionError& e) {
        fail(false, e.what());
    }

    for (std::size_t j = 0; j + 1 < g.clause_gadgets.size(); ++j)
        if (!clause_regions_disjoint(g.clause_gadgets[j], g.clause_gadgets[j + 1], W))
            fail(false, "clause regions " + std::to_string(j) + " and " + std::to_string(j + 1) + " overlap");

    for (std::size_t r = 0; r < segs.size(); ++r) {
        const auto& s = segs[r];
        const auto& col = g.columns[s.var];
        if (s.segment.a.x != col[0] || s.segment.b.x != col[1] || s.segment.a.y != s.segment.b.y)
            fail(false, "guard segment " + std::to_string(r) + " does not span its column");
        for (const auto& c : g.clause_gadgets) {
            auto span = detail::region_span(c, s.segment);
            if (c.index == s.clause) {
                if (!span || *span != detail::designated_span(g, s))
                    fail(false, "guard segment " + std::to_string(r) + " meets its clause region off the designated part");
            } else if (span) {
                fail(false, "guard segment " + std::to_string(r) + " meets clause region " + std::to_string(c.index));
            }
        }
    }

    // Column strips meet the clause regions in pairwise y-disjoint hulls.
    std::vector<std::array<Rational, 2>> extents;
    for (std::size_t i = 0; i < g.columns.size(); ++i) {
        if (g.clause_gadgets.empty()) break;
        Rational lo = g.clause_gadgets.front().lower_at(g.columns[i][0]);
        Rational hi = g.clause_gadgets.back().upper_at(g.columns[i][1]);
        extents.push_back({std::max(lo, g.room.bottom), std::min(hi, g.room.top)});
    }
    std::sort(extents.begin(), extents.end());
    for (std::size_t i = 0; i + 1 < extents.size(); ++i)
        if (!(extents[i][1] < extents[i + 1][0])) fail(false, "column strips overlap in y within the clause regions");

    // Forced zones of distinct rows are disjoint, and each J cone sees only its own segment.
    std::vector<std::size_t> by_y(segs.size());
    for (std::size_t r = 0; r < segs.size(); ++r) by_y[r] = r;
    std::sort(by_y.begin(), by_y.end(), [&](auto a, auto b) { return segs[a].segment.a.y < segs[b].segment.a.y; });
    for (std::size_t i = 0; i + 1 < by_y.size(); ++i) {
        const auto &lo = g.variable_gadgets[by_y[i]], &hi = g.variable_gadgets[by_y[i + 1]];
        if (!(lo.guard_segment.a.y + lo.clearance < hi.guard_segment.a.y - hi.clearance))
            fail(false, "forced zones of adjacent rows overlap");
    }
    for (std::size_t r = 0; r < segs.size(); ++r) {
        const auto& v = g.variable_gadgets[r];
        if (orient(v.J, v.j_mouth_lo(), v.guard_segment.a) != 0 || orient(v.J, v.j_mouth_hi(), v.guard_segment.b) != 0)
            fail(false, "J cone of row " + std::to_string(r) + " does not end at the guard segment");
        for (std::size_t s = 0; s < segs.size(); ++s)
            if (s != r && segment_meets(v.j_cone(), segs[s].segment.a, segs[s].segment.b))
                fail(false, "J cone of row " + std::to_string(r) + " meets row " + std::to_string(s));
    }

    // Copy-gadget hypothesis: no other guard segment sees into either pocket.
    for (std::size_t c = 0; c < g.copy_gadgets.size(); ++c) {
        const auto& cg = g.copy_gadgets[c];
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (static_cast<int>(s) == g.copy_pairs[c][0] || static_cast<int>(s) == g.copy_pairs[c][1]) continue;
            const auto& seg = segs[s].segment;
            if (segment_meets(cg.upper_wedge(), seg.a, seg.b) || segment_meets(cg.lower_wedge(), seg.a, seg.b))
                fail(true, "copy gadget " + std::to_string(c) + " pocket is seen from row " + std::to_string(s));
        }
    }
    return out;
}

namespace detail {

struct LayoutPlan {
    CnfFormula formula;
    Rational epsilon;
    int genus = 0;  // > 0: variable 0 is the tube coordinate with band literals
    std::vector<Rational> origin, slot;
    Rational east, apex_x;
};

/// Assembles the gallery with the left wall at distance L; nothing when a wall-dependent check fails.
inline std::optional<Gallery> assemble(const LayoutPlan& plan, const Rational& L) {
    const Rational& T = layout_depth();
    const Rational w = 1;
    const CnfFormula& f = plan.formula;
    const int m = static_cast<int>(f.clauses.size());
    const Rational& E = plan.east;
    const Rational& q = plan.apex_x;
    const Rational& g0 = plan.origin[0];

    Gallery g;
    g.formula = f;
    g.epsilon = plan.epsilon;
    g.room.west = g0 - L;
    g.room.east = E;
    const Rational& W = g.room.west;
    const int fam = plan.genus > 0 ? std::max(1, plan.genus - 1) : 1;
    const Rational sigma = T / (2 * std::max(Rational(q - W), Rational(fam * (q - g0))));

    for (int j = 0; j < m; ++j) g.clause_gadgets.push_back(make_clause_gadget({E, E + j * T}, j, T, sigma * T));

    std::optional<WedgeFamily> wedge;
    if (plan.genus > 0) {
        wedge = make_wedge_segments(plan.genus, g.clause_gadgets.front(), g0);
        g.formula.bands = wedge->constants;
        if (!(wedge->length < plan.slot[0])) throw InfeasibleError("tube coordinate segments wider than their column");
    }
    for (int i = 0; i < f.n; ++i) {
        Rational len = (plan.genus > 0 && i == 0) ? wedge->length : w;
        g.columns.push_back({plan.origin[i], plan.origin[i] + len});
    }

    for (int j = 0; j < m; ++j) {
        const Rational dy = j * T;
        for (std::size_t p = 0; p < f.clauses[j].size(); ++p) {
            const Literal& l = f.clauses[j][p];
            GuardSegmentInfo s{j, static_cast<int>(p), l.var, l, {}};
            if (plan.genus > 0 && l.var == 0) {
                int beta = l.kind == Literal::Kind::Band ? l.value + 1 : (l.value == 0 ? 0 : plan.genus);
                s.segment = wedge->segment(beta, dy);
            } else {
                if (l.kind == Literal::Kind::Band) throw PreconditionError("band literal without a tube coordinate");
                const Rational& gi = plan.origin[l.var];
                Rational y = l.value == 0 ? Rational(gi + dy) : Rational(gi + w + sigma * (q - gi - w) + dy);
                s.segment = {{gi, y}, {gi + w, y}};
            }
            g.guard_segments.push_back(s);
        }
    }
    const auto& segs = g.guard_segments;
    std::vector<Rational> ys;
    for (const auto& s : segs) ys.push_back(s.segment.a.y);
    std::sort(ys.begin(), ys.end());
    if (std::adjacent_find(ys.begin(), ys.end()) != ys.end()) throw InfeasibleError("two guard segments share a row");
    auto local_gap = [&](const Rational& y) {
        auto it = std::lower_bound(ys.begin(), ys.end(), y);
        Rational gap = T;
        if (it != ys.begin()) gap = std::min(gap, Rational(y - *std::prev(it)));
        if (std::next(it) != ys.end()) gap = std::min(gap, Rational(*std::next(it) - y));
        return gap;
    };

    g.room.bottom = ys.front() - T;
    g.room.top = E + (m - 1) * T + sigma * T + T;

    for (const auto& s : segs) {
        auto v = make_variable_gadget(s.segment, W, E, plan.epsilon * local_gap(s.segment.a.y));
        g.room.notches.push_back(v.f_slit);
        g.room.notches.push_back(v.i_slit);
        g.room.notches.push_back(v.j_slit);
        g.variable_gadgets.push_back(std::move(v));
    }

    // Chain the segments of each variable from top to bottom.
    for (int i = 0; i < f.n; ++i) {
        std::vector<int> rows;
        for (std::size_t r = 0; r < segs.size(); ++r)
            if (segs[r].var == i) rows.push_back(static_cast<int>(r));
        std::sort(rows.begin(), rows.end(), [&](int a, int b) { return segs[a].segment.a.y > segs[b].segment.a.y; });
        for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
            const auto &hi = segs[rows[t]].segment, &lo = segs[rows[t + 1]].segment;
            Rational gap = std::min(local_gap(hi.a.y), local_gap(lo.a.y));
            try {
                g.copy_gadgets.push_back(make_copy_gadget(hi, lo, W, gap, plan.epsilon));
            } catch (const InfeasibleError&) {
                return std::nullopt;
            }
            g.copy_pairs.push_back({rows[t], rows[t + 1]});
            g.room.notches.push_back(g.copy_gadgets.back().upper);
            g.room.notches.push_back(g.copy_gadgets.back().lower);
        }
    }
    for (const auto& c : g.clause_gadgets) {
        g.room.notches.push_back(c.slit);
        g.clause_regions.push_back({c.index, c.region(W), c.witness});
    }

    try {
        g.polygon = g.room.polygon();
    } catch (const PreconditionError& e) {
        throw InfeasibleError(std::string("layout conflict: ") + e.what());
    }
    auto failures = audit(g);
    for (const auto& a : failures)
        if (a.wall_related) return std::nullopt;
    if (!failures.empty()) throw InfeasibleError("gallery audit failed: " + failures.front().what);
    return g;
}

inline Gallery build_gallery(const CnfFormula& f, const Rational& eps, int genus) {
    if (!(eps > 0)) throw PreconditionError("clearance must be positive");
    if (f.clauses.empty()) throw PreconditionError("formula has no clauses");
    const Rational& T = layout_depth();
    const int m = static_cast<int>(f.clauses.size());
    LayoutPlan plan{f, eps, genus, {}, {}, 0, 0};
    Rational x = 0;
    for (int i = 0; i < f.n; ++i) {
        plan.origin.push_back(x);
        plan.slot.push_back(genus > 0 && i == 0 ? T : Rational(1));
        x += plan.slot.back() + (m + 1) * T;
    }
    plan.east = x;
    plan.apex_x = x + T;
    Rational L = plan.east - plan.origin[0];
    for (int attempt = 0; attempt < 64; ++attempt, L *= 2)
        if (auto g = assemble(plan, L)) return std::move(*g);
    throw InfeasibleError("no left-wall position satisfies the copy-gadget hypothesis");
}

}  // namespace detail

/// Gallery whose minimum guard sets correspond to the points satisfying f.
inline Gallery compile(const CnfFormula& f, const Rational& eps) {
    validate_formula(f);
    if (f.has_band_literals()) throw PreconditionError("compile: band literals need compile_surface");
    if (f.clauses.empty()) throw PreconditionError("compile: formula has no clauses");
    std::vector<std::string> notes;
    constexpr std::size_t cutoff = std::size_t{1} << 20;
    if (grid_size(f.n, f.bands) <= cutoff) {
        if (!satisfiable(f)) throw UnsatisfiableError("compile: formula is unsatisfiable on the cube");
    } else {
        notes.push_back("satisfiability check skipped: grid above cutoff");
    }
    Gallery g = detail::build_gallery(f, eps, 0);
    g.notes = std::move(notes);
    return g;
}

/// Gallery for the connected sum of n tori (orientable) or n projective planes.
inline Gallery compile_surface(int n, bool orientable, const Rational& eps) {
    if (n < 2) throw PreconditionError("compile_surface: genus must be at least 2");
    auto base = orientable ? fixtures::torus() : fixtures::projective_plane();
    auto [f1, f2] = orientable ? fixtures::torus_discs() : fixtures::projective_plane_discs();
    CnfFormula f = surface_formula(base, f1, f2, n, uniform_constants(n));
    Gallery g = detail::build_gallery(f, eps, n);
    g.surface = SurfaceSource{n, orientable};
    return g;
}

/// One guard per guard segment at the affine parameter of its variable.
inline std::vector<Point> embed(const Gallery& g, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != g.formula.n) throw PreconditionError("embed: dimension mismatch");
    for (const auto& v : x)
        if (v < 0 || v > 1) throw PreconditionError("embed: coordinate outside [0,1]");
    std::vector<Point> guards;
    for (const auto& s : g.guard_segments) guards.push_back(lerp(s.segment.a, s.segment.b, x[s.var]));
    return guards;
}

/// Sup-norm radius below which nearest-guard matching between two embeddings is the identity.
inline Rational embed_threshold(const Gallery& g) {
    std::vector<Rational> ys;
    for (const auto& s : g.guard_segments) ys.push_back(s.segment.a.y);
    std::sort(ys.begin(), ys.end());
    Rational gap = detail::layout_depth();
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) gap = std::min(gap, Rational(ys[i + 1] - ys[i]));
    Rational width = 0;
    for (const auto& c : g.columns) width = std::max(width, Rational(c[1] - c[0]));
    return gap / (2 * width);
}

/// Column width of each variable.
inline std::vector<Rational> column_widths(const Gallery& g) {
    std::vector<Rational> w;
    for (const auto& c : g.columns) w.push_back(c[1] - c[0]);
    return w;
}

}  // namespace artgallery
