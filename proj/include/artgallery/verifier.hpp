#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coverage.hpp"
#include "formula.hpp"
#include "gadgets.hpp"
#include "gallery.hpp"
#include "notched_room.hpp"
#include "visibility.hpp"

namespace artgallery {

enum class CoverageMode { Exact, Witness, Boundary };

inline std::string to_string(CoverageMode m) {
    switch (m) {
        case CoverageMode::Exact: return "exact-union";
        case CoverageMode::Witness: return "witness-sample";
        case CoverageMode::Boundary: return "boundary-sample";
    }
    return "?";
}

struct CoverageReport {
    bool covered = false;
    std::optional<Point> uncovered_witness;
    CoverageMode method = CoverageMode::Exact;
    std::size_t witness_count = 0;
};

namespace detail {

inline void require_guards_inside(const SimplePolygon& poly, const std::vector<Point>& guards) {
    for (const Point& g : guards)
        if (!poly.contains(g)) throw PreconditionError("guard outside the polygon");
}

/// Confirms that no guard sees w; a failure here is an internal error, never a verdict.
inline Point certify_unseen(const SimplePolygon& poly, const std::vector<Point>& guards, const Point& w) {
    if (!poly.contains(w)) throw Error("uncovered witness lies outside the polygon");
    for (const Point& g : guards)
        if (visible(poly, g, w)) throw Error("uncovered witness is visible to a guard");
    return w;
}

/// Points spaced evenly strictly inside segment ab.
inline void sample_edge(std::vector<Point>& out, const Point& a, const Point& b, int count) {
    for (int i = 1; i <= count; ++i) out.push_back(lerp(a, b, make_rational(i, count + 1)));
}

}  // namespace detail

/// Ground truth: the union of the guards' visibility polygons must equal the polygon.
inline CoverageReport covers_exact(const SimplePolygon& poly, const std::vector<Point>& guards) {
    detail::require_guards_inside(poly, guards);
    std::vector<SimplePolygon> pieces;
    for (const Point& g : guards) pieces.push_back(visibility_polygon(poly, g));
    CoverageReport r{true, std::nullopt, CoverageMode::Exact, 0};
    if (auto w = find_uncovered(poly, pieces)) {
        r.covered = false;
        r.uncovered_witness = detail::certify_unseen(poly, guards, *w);
    }
    return r;
}

/// Fast screen: every witness must be seen by some guard.
inline CoverageReport covers_witnesses(const SimplePolygon& poly, const std::vector<Point>& guards,
                                       const std::vector<Point>& witnesses, CoverageMode mode = CoverageMode::Witness,
                                       const std::function<bool(const Point&, const Point&)>& sees = {}) {
    detail::require_guards_inside(poly, guards);
    CoverageReport r{true, std::nullopt, mode, witnesses.size()};
    for (const Point& w : witnesses) {
        bool seen = std::any_of(guards.begin(), guards.end(),
                                [&](const Point& g) { return sees ? sees(g, w) : visible(poly, g, w); });
        if (!seen) {
            r.covered = false;
            r.uncovered_witness = detail::certify_unseen(poly, guards, w);
            return r;
        }
    }
    return r;
}

/// Witness set of a notched room: vertices, samples on every boundary edge and denser ones on pocket floors.
inline std::vector<Point> room_witnesses(const NotchedRoom& room, const SimplePolygon& poly, int occluded_density,
                                         int boundary_density, bool interior) {
    std::vector<Point> w = poly.vertices();
    for (std::size_t i = 0; i < poly.size(); ++i) detail::sample_edge(w, poly[i], poly.next(i), boundary_density);
    for (const Notch& n : room.notches) {
        if (n.inner.size() == 2) detail::sample_edge(w, n.inner[0], n.inner[1], occluded_density);
        if (interior) {
            auto r = room.ring_of(n);
            Point c{0, 0};
            for (const Point& p : r) c = c + p;
            w.push_back(make_rational(1, static_cast<long>(r.size())) * c);
        }
    }
    if (interior) w.push_back(midpoint({room.west, room.bottom}, {room.east, room.top}));
    return w;
}

inline std::vector<Point> gallery_witnesses(const Gallery& g, int occluded_density = 16, int boundary_density = 4,
                                            bool interior = true) {
    auto w = room_witnesses(g.room, g.polygon, occluded_density, boundary_density, interior);
    for (const auto& c : g.clause_regions) w.push_back(c.witness);
    return w;
}

/// Sample points of a notched room with the notch holding each one precomputed.
struct WitnessSet {
    std::vector<Point> points;
    std::vector<int> notch;  // -1 for room points
};

inline WitnessSet classify_witnesses(const NotchedRoom& room, std::vector<Point> points) {
    struct Box {
        Rational x0, x1, y0, y1;
        std::vector<Point> ring;
    };
    std::vector<Box> boxes;
    for (const Notch& n : room.notches) {
        auto r = room.ring_of(n);
        Box b{r[0].x, r[0].x, r[0].y, r[0].y, r};
        for (const Point& p : r) {
            b.x0 = std::min(b.x0, p.x);
            b.x1 = std::max(b.x1, p.x);
            b.y0 = std::min(b.y0, p.y);
            b.y1 = std::max(b.y1, p.y);
        }
        boxes.push_back(std::move(b));
    }
    WitnessSet w;
    for (const Point& p : points) {
        int id = -1;
        if (!room.in_room(p)) {
            for (std::size_t i = 0; i < boxes.size() && id < 0; ++i) {
                const Box& b = boxes[i];
                if (b.x0 <= p.x && p.x <= b.x1 && b.y0 <= p.y && p.y <= b.y1 && locate(b.ring, p) != Location::Outside)
                    id = static_cast<int>(i);
            }
            if (id < 0) throw Error("witness outside the room and its notches");
        }
        w.notch.push_back(id);
    }
    w.points = std::move(points);
    return w;
}

inline WitnessSet gallery_witness_set(const Gallery& g, CoverageMode mode, int occluded_density = 16,
                                      int boundary_density = 4) {
    return classify_witnesses(g.room, gallery_witnesses(g, occluded_density, boundary_density, mode != CoverageMode::Boundary));
}

/// Witness screen over a precomputed set; guards outside the room fall back to general visibility.
inline CoverageReport covers_witness_set(const NotchedRoom& room, const SimplePolygon& poly,
                                         const std::vector<Point>& guards, const WitnessSet& ws, CoverageMode mode) {
    detail::require_guards_inside(poly, guards);
    CoverageReport r{true, std::nullopt, mode, ws.points.size()};
    std::vector<bool> inside;
    std::vector<std::array<double, 2>> gd;
    for (const Point& g : guards) {
        inside.push_back(room.in_room(g));
        gd.push_back({g.x.get_d(), g.y.get_d()});
    }
    // Floating-point screen of the mouth test; undecided cases fall through to exact arithmetic.
    auto quick = [&](std::size_t k, std::size_t i) -> int {
        const Notch& n = room.notches[ws.notch[i]];
        double wx = room.wall_x(n).get_d(), px = ws.points[i].x.get_d(), py = ws.points[i].y.get_d();
        double dx = px - gd[k][0];
        if (std::abs(dx) < 1e-3) return 0;
        double y = gd[k][1] + (py - gd[k][1]) * (wx - gd[k][0]) / dx;
        double tol = 1e-7 * (1 + std::abs(y) + std::abs(wx) + std::abs(px));
        double lo = n.lo.get_d(), hi = n.hi.get_d();
        if (y > lo + tol && y < hi - tol) return 1;
        if (y < lo - tol || y > hi + tol) return -1;
        return 0;
    };
    for (std::size_t i = 0; i < ws.points.size(); ++i) {
        const Point& w = ws.points[i];
        bool seen = ws.notch[i] < 0 && std::all_of(inside.begin(), inside.end(), [](bool b) { return b; });
        for (std::size_t k = 0; k < guards.size() && !seen; ++k) {
            if (!inside[k]) seen = visible(poly, guards[k], w);
            else if (ws.notch[i] < 0) seen = true;
            else if (int q = quick(k, i)) seen = q > 0;
            else seen = room.sees_in_notch(guards[k], w, room.notches[ws.notch[i]]);
        }
        if (!seen) {
            r.covered = false;
            r.uncovered_witness = detail::certify_unseen(poly, guards, w);
            return r;
        }
    }
    return r;
}

namespace detail {

inline std::function<bool(const Point&, const Point&)> room_sightline(const NotchedRoom& room, const SimplePolygon& poly) {
    return [&room, &poly](const Point& g, const Point& p) {
        return room.in_room(g) ? room.sees_from_room(g, p) : visible(poly, g, p);
    };
}

}  // namespace detail

/// Coverage of a compiled gallery. Exact mode is the visibility-polygon union; the sample modes are one-sided screens.
inline CoverageReport covers(const Gallery& g, const std::vector<Point>& guards, CoverageMode mode,
                             int occluded_density = 16, int boundary_density = 4) {
    if (mode == CoverageMode::Exact) return covers_exact(g.polygon, guards);
    return covers_witness_set(g.room, g.polygon, guards, gallery_witness_set(g, mode, occluded_density, boundary_density), mode);
}

/// Exact coverage using the room structure: with every guard in the convex room only notches can be missed.
inline CoverageReport covers_by_notches(const Gallery& g, const std::vector<Point>& guards) {
    detail::require_guards_inside(g.polygon, guards);
    for (const Point& p : guards)
        if (!g.room.in_room(p)) return covers_exact(g.polygon, guards);
    CoverageReport r{true, std::nullopt, CoverageMode::Exact, 0};
    if (auto w = g.room.uncovered_by_room_guards(guards)) {
        r.covered = false;
        r.uncovered_witness = detail::certify_unseen(g.polygon, guards, *w);
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Copy-gadget contract

/// A copy gadget alone in a strip with the two variable gadgets of its rows.
struct CopyStrip {
    NotchedRoom room;
    SimplePolygon polygon;
    VariableGadget top, bottom;
    CopyGadget copy;
};

inline CopyStrip make_copy_strip(const Segment& GH, const Segment& NO, const Rational& wall_left,
                                 const Rational& wall_right, const Rational& eps) {
    const Rational delta = GH.a.y - NO.a.y;
    CopyStrip s;
    s.copy = make_copy_gadget(GH, NO, wall_left, delta, eps);
    s.top = make_variable_gadget(GH, wall_left, wall_right, eps * delta);
    s.bottom = make_variable_gadget(NO, wall_left, wall_right, eps * delta);
    s.room = {wall_left, wall_right, NO.a.y - delta, GH.a.y + delta, {}};
    for (const auto* v : {&s.top, &s.bottom})
        for (const Notch* n : {&v->f_slit, &v->i_slit, &v->j_slit}) s.room.notches.push_back(*n);
    s.room.notches.push_back(s.copy.upper);
    s.room.notches.push_back(s.copy.lower);
    s.polygon = s.room.polygon();
    return s;
}

/// Points of segment AB (or UV) that the guards at parameters t (upper) and t2 (lower) jointly miss, if any.
inline std::optional<Point> copy_gap_witness(const CopyGadget& c, const Rational& t, const Rational& t2) {
    Point alpha = lerp(c.gh.a, c.gh.b, t), beta = lerp(c.no.a, c.no.b, t2);
    Point a_up = invert_through(c.C, alpha, c.A.y), b_up = invert_through(c.D, beta, c.A.y);
    if (a_up.x < b_up.x) return midpoint(a_up, b_up);
    Point a_lo = invert_through(c.S, alpha, c.U.y), b_lo = invert_through(c.T, beta, c.U.y);
    if (b_lo.x < a_lo.x) return midpoint(a_lo, b_lo);
    return std::nullopt;
}

inline bool convex_rings_meet(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<Point> r = a;
    for (std::size_t i = 0; i < b.size() && !r.empty(); ++i) r = detail::clip_halfplane(r, b[i], b[(i + 1) % b.size()], 1);
    return !r.empty();
}

inline std::vector<Point> ccw(std::vector<Point> t) {
    if (signed_area2(t) < 0) std::reverse(t.begin(), t.end());
    return t;
}

struct CopyGadgetReport {
    bool zones_disjoint = false;        // exact: no point lies in all four forced zones
    std::size_t grid_checked = 0;
    std::size_t grid_seeing_all = 0;
    int same_total = 0, same_pass = 0;
    int mismatch_total = 0, mismatch_detected = 0;
    std::vector<std::string> failures;

    bool ok() const {
        return zones_disjoint && grid_seeing_all == 0 && same_pass == same_total && mismatch_detected == mismatch_total &&
               failures.empty();
    }
};

inline Rational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den = 997) {
    std::uint64_t den = 1 + rng() % max_den;
    std::uint64_t num = rng() % (den + 1);
    return make_rational(static_cast<long>(num), static_cast<long>(den));
}

/// Checks the two-guard contract of one copy gadget in its strip.
inline CopyGadgetReport verify_copy_gadget(const CopyStrip& s, std::uint64_t seed, int trials = 32, int grid = 24) {
    if (s.room.notches.size() != 8) throw PreconditionError("copy strip: extraneous slit in the strip");
    CopyGadgetReport rep;
    std::mt19937_64 rng(seed);
    const auto& poly = s.polygon;
    const Point apexes[4] = {s.top.F, s.top.I, s.bottom.F, s.bottom.I};

    // (a) A single guard would need to sit in all four forced zones; two of them are disjoint.
    rep.zones_disjoint = !convex_rings_meet(ccw({s.top.zone_i.begin(), s.top.zone_i.end()}),
                                            ccw({s.bottom.zone_f.begin(), s.bottom.zone_f.end()}));
    auto sees = detail::room_sightline(s.room, poly);
    Rational x0 = s.top.F.x, x1 = s.top.I.x, y0 = s.room.bottom, y1 = s.room.top;
    std::vector<Point> probes;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j) probes.push_back({x0 + (x1 - x0) * make_rational(i, grid), y0 + (y1 - y0) * make_rational(j, grid)});
    for (const auto* seg : {&s.copy.gh, &s.copy.no})
        for (int i = 0; i <= grid; ++i) probes.push_back(lerp(seg->a, seg->b, make_rational(i, grid)));
    for (const Point& p : probes) {
        if (!poly.contains(p)) continue;
        ++rep.grid_checked;
        if (std::all_of(std::begin(apexes), std::end(apexes), [&](const Point& a) { return sees(p, a); })) ++rep.grid_seeing_all;
    }

    // (b) Equal parameters cover the strip.
    auto witnesses = classify_witnesses(s.room, room_witnesses(s.room, poly, 16, 4, true));
    std::vector<Rational> same{0, 1};
    while (static_cast<int>(same.size()) < trials) same.push_back(random_unit_rational(rng));
    for (const Rational& t : same) {
        ++rep.same_total;
        std::vector<Point> guards{lerp(s.copy.gh.a, s.copy.gh.b, t), lerp(s.copy.no.a, s.copy.no.b, t)};
        auto r = covers_witness_set(s.room, poly, guards, witnesses, CoverageMode::Witness);
        if (r.covered) ++rep.same_pass;
        else rep.failures.push_back("equal parameters " + to_string(t) + " leave " + to_string(r.uncovered_witness->x) + "," + to_string(r.uncovered_witness->y) + " unseen");
    }

    // (c) Different parameters leave a certified gap on AB or UV.
    std::vector<std::pair<Rational, Rational>> pairs{{0, 1}, {1, 0}};
    while (static_cast<int>(pairs.size()) < trials) {
        Rational t = random_unit_rational(rng), t2 = random_unit_rational(rng);
        if (t != t2) pairs.push_back({t, t2});
    }
    for (const auto& [t, t2] : pairs) {
        ++rep.mismatch_total;
        std::vector<Point> guards{lerp(s.copy.gh.a, s.copy.gh.b, t), lerp(s.copy.no.a, s.copy.no.b, t2)};
        auto w = copy_gap_witness(s.copy, t, t2);
        bool unseen = w && std::none_of(guards.begin(), guards.end(), [&](const Point& g) { return visible(poly, g, *w); });
        bool on_floor = w && (w->y == s.copy.A.y || w->y == s.copy.U.y);
        if (unseen && on_floor && poly.contains(*w)) ++rep.mismatch_detected;
        else rep.failures.push_back("parameters " + to_string(t) + " / " + to_string(t2) + " not separated");
    }
    return rep;
}

// ---------------------------------------------------------------------------------------------
// Brute-force oracle

struct BruteForceResult {
    std::optional<int> min_guards;  // empty: more than k_max on the candidate grid
    std::vector<Point> guards;
    std::size_t candidates = 0;
    std::size_t witnesses = 0;
    std::size_t refinements = 0;
};

/// Smallest number of candidate-grid guards covering poly exactly, searched up to k_max.
inline BruteForceResult brute_force_min_guards(const SimplePolygon& poly, int k_max, int resolution = 16,
                                               std::size_t node_budget = 50'000'000) {
    if (k_max < 1 || resolution < 1) throw PreconditionError("brute force: k_max and resolution must be positive");
    std::vector<Rational> xs, ys;
    Rational xmin = poly[0].x, xmax = poly[0].x, ymin = poly[0].y, ymax = poly[0].y;
    for (const Point& p : poly.vertices()) {
        xs.push_back(p.x);
        ys.push_back(p.y);
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    for (int i = 0; i <= resolution; ++i) {
        xs.push_back(xmin + (xmax - xmin) * make_rational(i, resolution));
        ys.push_back(ymin + (ymax - ymin) * make_rational(i, resolution));
    }
    for (auto* v : {&xs, &ys}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    std::vector<Point> cand;
    for (const auto& x : xs)
        for (const auto& y : ys)
            if (poly.contains({x, y})) cand.push_back({x, y});

    std::vector<Point> wit = poly.vertices();
    for (std::size_t i = 0; i < poly.size(); ++i) wit.push_back(midpoint(poly[i], poly.next(i)));

    // sees[w] lists the candidates seeing witness w.
    std::vector<std::vector<int>> seers;
    std::vector<std::vector<bool>> sees_mat;  // [candidate][witness]
    sees_mat.assign(cand.size(), {});
    auto add_witness = [&](const Point& w) {
        std::vector<int> who;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            bool v = visible(poly, cand[c], w);
            sees_mat[c].push_back(v);
            if (v) who.push_back(static_cast<int>(c));
        }
        seers.push_back(std::move(who));
    };
    for (const Point& w : wit) add_witness(w);

    BruteForceResult res;
    res.candidates = cand.size();
    std::size_t nodes = 0;
    for (int k = 1; k <= k_max; ++k) {
        while (true) {
            std::vector<int> chosen;
            std::function<bool()> search = [&]() -> bool {
                if (++nodes > node_budget) throw BudgetError("brute force: node budget exceeded");
                int best = -1;
                for (std::size_t w = 0; w < seers.size(); ++w) {
                    bool covered = std::any_of(chosen.begin(), chosen.end(), [&](int c) { return sees_mat[c][w]; });
                    if (covered) continue;
                    if (best < 0 || seers[w].size() < seers[best].size()) best = static_cast<int>(w);
                }
                if (best < 0) return true;
                if (static_cast<int>(chosen.size()) == k) return false;
                for (int c : seers[best]) {
                    chosen.push_back(c);
                    if (search()) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (!search()) break;
            std::vector<Point> guards;
            for (int c : chosen) guards.push_back(cand[c]);
            auto rep = covers_exact(poly, guards);
            if (rep.covered) {
                res.min_guards = k;
                res.guards = guards;
                res.witnesses = seers.size();
                return res;
            }
            add_witness(*rep.uncovered_witness);
            ++res.refinements;
        }
    }
    res.witnesses = seers.size();
    return res;
}

// ---------------------------------------------------------------------------------------------
// Solution-space sampling

struct SampleReport {
    std::uint64_t seed = 0;
    std::size_t on_points = 0, off_points = 0, pairs = 0;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
    std::vector<std::vector<Rational>> on_samples;  // the on-face points, in draw order

    bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string point_text(const std::vector<Rational>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + to_string(x[i]);
    return s + ")";
}

}  // namespace detail

/// Samples points on and off |K| and checks covers(embed(x)) against membership, plus the embedding metric.
inline SampleReport sample_solution_space(const Gallery& g, const CubicalComplex& K, int on_per_face, int off_samples,
                                          std::uint64_t seed, CoverageMode mode = CoverageMode::Witness) {
    validate_complex(K);
    if (K.n != g.formula.n) throw PreconditionError("sample: complex and gallery dimensions differ");
    if (!g.formula.bands.empty()) throw PreconditionError("sample: band constants are not supported");
    if (!cell_equivalent(complex_to_dnf(K), g.formula)) throw PreconditionError("sample: gallery formula does not match the complex");
    SampleReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const int n = K.n;
    const auto widths = column_widths(g);
    const Rational radius = embed_threshold(g);

    WitnessSet ws;
    if (mode != CoverageMode::Exact) ws = gallery_witness_set(g, mode);
    auto check = [&](const std::vector<Rational>& x, bool expect, const char* kind) {
        auto guards = embed(g, x);
        auto r = mode == CoverageMode::Exact ? covers_exact(g.polygon, guards)
                                             : covers_witness_set(g.room, g.polygon, guards, ws, mode);
        bool sat = eval_formula(g.formula, x);
        std::string verdict = r.covered ? "covered" : "uncovered";
        rep.lines.push_back(std::string(kind) + " " + detail::point_text(x) + " " + verdict);
        if (r.covered != expect || sat != expect)
            rep.failures.push_back(std::string(kind) + " point " + detail::point_text(x) + " " + verdict +
                                   (sat ? " (formula true)" : " (formula false)"));
    };
    auto check_pair = [&](const std::vector<Rational>& x) {
        std::vector<Rational> y = x;
        for (int i = 0; i < n; ++i) {
            Rational step = radius * random_unit_rational(rng, 61) * make_rational(9, 10);
            Rational cand = (rng() % 2) ? Rational(x[i] + step) : Rational(x[i] - step);
            if (cand < 0 || cand > 1) cand = x[i];
            y[i] = cand;
        }
        ++rep.pairs;
        Rational expect = 0;
        for (const auto& s : g.guard_segments) expect = std::max(expect, Rational(widths[s.var] * rabs(x[s.var] - y[s.var])));
        Rational d = hausdorff_distance_sq_max(embed(g, x), embed(g, y));
        if (d != expect * expect) rep.failures.push_back("metric mismatch at " + detail::point_text(x));
        if (x != y && !(d > 0)) rep.failures.push_back("embedding not injective at " + detail::point_text(x));
    };

    for (const Face& f : K.maximal_faces()) {
        for (int s = 0; s < on_per_face; ++s) {
            std::vector<Rational> x(n);
            for (int i = 0; i < n; ++i) x[i] = f[i] == '*' ? random_unit_rational(rng) : Rational(f[i] - '0');
            ++rep.on_points;
            rep.on_samples.push_back(x);
            check(x, true, "on");
            check_pair(x);
        }
    }

    // Off-manifold cells: codes 0, 1 (open interval), 2 per coordinate with the formula false.
    std::vector<std::vector<int>> off_cells;
    std::vector<int> code(n, 0);
    while (true) {
        std::vector<Rational> rep_pt(n);
        for (int i = 0; i < n; ++i) rep_pt[i] = code[i] == 0 ? Rational(0) : code[i] == 2 ? Rational(1) : make_rational(1, 2);
        if (!eval_formula(g.formula, rep_pt)) off_cells.push_back(code);
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++code[i] <= 2) break;
            code[i] = 0;
        }
        if (i < 0) break;
    }
    for (int s = 0; s < off_samples && !off_cells.empty(); ++s) {
        const auto& c = off_cells[rng() % off_cells.size()];
        std::vector<Rational> x(n);
        for (int i = 0; i < n; ++i) {
            if (c[i] != 1) {
                x[i] = c[i] / 2;
                continue;
            }
            Rational t;
            do t = random_unit_rational(rng); while (t == 0 || t == 1);
            x[i] = t;
        }
        ++rep.off_points;
        check(x, false, "off");
    }
    return rep;
}

/// Grid-point check for galleries without a source complex: covers(embed(x)) must match the formula.
inline SampleReport verify_formula_grid(const Gallery& g, int on_samples, int off_samples, std::uint64_t seed,
                                        CoverageMode mode = CoverageMode::Witness) {
    SampleReport rep;
    rep.seed = seed;
    std::mt19937_64 rng(seed);
    const auto& f = g.formula;
    if (grid_size(f.n, f.bands) > (std::size_t{1} << 20)) throw BudgetError("verify: test grid too large");
    std::vector<std::vector<Rational>> sat, unsat;
    for_each_grid_point(f.n, f.bands, [&](const std::vector<Rational>& x) {
        (eval_formula(f, x) ? sat : unsat).push_back(x);
        return true;
    });
    for (const auto& a : audit(g)) rep.failures.push_back("audit: " + a.what);
    WitnessSet ws;
    if (mode != CoverageMode::Exact) ws = gallery_witness_set(g, mode);
    auto run = [&](const std::vector<std::vector<Rational>>& pool, int count, bool expect, const char* kind) {
        for (int s = 0; s < count && !pool.empty(); ++s) {
            const auto& x = pool[rng() % pool.size()];
            auto guards = embed(g, x);
            auto r = mode == CoverageMode::Exact ? covers_exact(g.polygon, guards)
                                                 : covers_witness_set(g.room, g.polygon, guards, ws, mode);
            std::string verdict = r.covered ? "covered" : "uncovered";
            rep.lines.push_back(std::string(kind) + " " + detail::point_text(x) + " " + verdict);
            if (r.covered != expect) rep.failures.push_back(std::string(kind) + " point " + detail::point_text(x) + " " + verdict);
            (expect ? rep.on_points : rep.off_points)++;
        }
    };
    run(sat, on_samples, true, "on");
    run(unsat, off_samples, false, "off");
    return rep;
}

inline std::string report_text(const SampleReport& r) {
    std::ostringstream o;
    o << "artgallery-report 1\n";
    o << "seed " << r.seed << "\n";
    o << "on_points " << r.on_points << "\n";
    o << "off_points " << r.off_points << "\n";
    o << "pairs " << r.pairs << "\n";
    for (const auto& l : r.lines) o << "sample " << l << "\n";
    for (const auto& f : r.failures) o << "fail " << f << "\n";
    o << "result " << (r.ok() ? "pass" : "fail") << "\n";
    return o.str();
}

}  // namespace artgallery
