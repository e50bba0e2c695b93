#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace artgallery {

namespace detail {

struct BBox {
    double xlo, xhi, ylo, yhi;

    // Outward-rounded, so it can only over-report overlaps; exact tests decide.
    static BBox of(const Point& a, const Point& b) {
        auto lo = [](const Rational& u, const Rational& v) {
            double d = std::min(u, v).get_d();
            return std::nextafter(d - std::abs(d) * 1e-12, -std::numeric_limits<double>::infinity());
        };
        auto hi = [](const Rational& u, const Rational& v) {
            double d = std::max(u, v).get_d();
            return std::nextafter(d + std::abs(d) * 1e-12, std::numeric_limits<double>::infinity());
        };
        return {lo(a.x, b.x), hi(a.x, b.x), lo(a.y, b.y), hi(a.y, b.y)};
    }
    bool overlaps(const BBox& o) const {
        return !(o.xhi < xlo || xhi < o.xlo || o.yhi < ylo || yhi < o.ylo);
    }
};

struct RingIndex {
    const std::vector<Point>* ring;
    BBox box;
};

inline BBox ring_box(const std::vector<Point>& r) {
    BBox b = BBox::of(r[0], r[0]);
    for (const Point& p : r) {
        BBox q = BBox::of(p, p);
        b.xlo = std::min(b.xlo, q.xlo);
        b.xhi = std::max(b.xhi, q.xhi);
        b.ylo = std::min(b.ylo, q.ylo);
        b.yhi = std::max(b.yhi, q.yhi);
    }
    return b;
}

/// Is the closed region of `ring` present on side `side` (+1 left, -1 right) of direction dir, just beside m?
inline bool side_inside(const RingIndex& r, const Point& m, const Point& dir, int side) {
    BBox pb = BBox::of(m, m);
    if (!r.box.overlaps(pb)) return false;
    const auto& v = *r.ring;
    Location loc = locate(v, m);
    if (loc == Location::Inside) return true;
    if (loc == Location::Outside) return false;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (!on_segment(m, a, b)) continue;
        // Interior lies left of a->b (counterclockwise rings).
        int rel = sgn(dot(b - a, dir)) > 0 ? 1 : -1;
        return rel == side;
    }
    return false;
}

}  // namespace detail

/// A point of poly not covered by the union of pieces (each a subset of poly), or nothing.
inline std::optional<Point> find_uncovered(const SimplePolygon& poly, const std::vector<SimplePolygon>& pieces) {
    struct Edge {
        Point a, b;
        int owner;  // -1 for the outer polygon
        detail::BBox box;
    };
    std::vector<Edge> edges;
    auto add_ring = [&](const SimplePolygon& r, int owner) {
        for (std::size_t i = 0; i < r.size(); ++i)
            edges.push_back({r[i], r.next(i), owner, detail::BBox::of(r[i], r.next(i))});
    };
    add_ring(poly, -1);
    for (std::size_t j = 0; j < pieces.size(); ++j) add_ring(pieces[j], static_cast<int>(j));

    detail::RingIndex outer{&poly.vertices(), detail::ring_box(poly.vertices())};
    std::vector<detail::RingIndex> idx;
    for (const auto& pc : pieces) idx.push_back({&pc.vertices(), detail::ring_box(pc.vertices())});

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return edges[i].box.xlo < edges[j].box.xlo; });

    std::size_t last_cover = 0;
    auto covered = [&](const Point& m, const Point& dir, int side) {
        if (pieces.empty()) return false;
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            std::size_t j = (last_cover + k) % pieces.size();
            if (detail::side_inside(idx[j], m, dir, side)) {
                last_cover = j;
                return true;
            }
        }
        return false;
    };

    for (const Edge& e : edges) {
        const int side = e.owner < 0 ? 1 : -1;
        const Point dir = e.b - e.a;
        std::vector<Rational> cuts{0, 1};
        for (std::size_t oi : order) {
            const Edge& f = edges[oi];
            if (f.box.xlo > e.box.xhi) break;
            if (&f == &e || !e.box.overlaps(f.box)) continue;
            int o1 = orient(e.a, e.b, f.a), o2 = orient(e.a, e.b, f.b);
            if (o1 == 0 && o2 == 0) {
                for (const Point* p : {&f.a, &f.b}) {
                    Rational t = dot(*p - e.a, dir) / dot(dir, dir);
                    if (t > 0 && t < 1) cuts.push_back(t);
                }
                continue;
            }
            if (o1 * o2 > 0) continue;
            Point fd = f.b - f.a;
            Rational t = cross(f.a - e.a, fd) / cross(dir, fd);
            if (t > 0 && t < 1) cuts.push_back(t);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
            Point m = lerp(e.a, e.b, (cuts[k] + cuts[k + 1]) / 2);
            if (!detail::side_inside(outer, m, dir, side)) continue;
            if (covered(m, dir, side)) continue;
            // Step off the edge into the uncovered side until the point is certified.
            Point normal{-dir.y * side, dir.x * side};
            Rational delta = 1;
            for (int it = 0; it < 400; ++it, delta /= 2) {
                Point w = m + delta * normal;
                if (poly.locate(w) != Location::Inside) continue;
                bool seen = false;
                for (const auto& pc : pieces)
                    if (pc.locate(w) != Location::Outside) {
                        seen = true;
                        break;
                    }
                if (!seen) return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace artgallery
