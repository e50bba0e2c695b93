#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace artgallery {

namespace detail {

inline void require_in_polygon(const SimplePolygon& poly, const Point& p, const char* what) {
    if (poly.locate(p) == Location::Outside)
        throw PreconditionError(std::string(what) + ": point outside the polygon");
}

/// Parameter of a point lying on line pq, measured along p->q.
inline Rational param_on(const Point& p, const Point& q, const Point& x) {
    Point d = q - p;
    return dot(x - p, d) / dot(d, d);
}

/// Angular order around the origin starting at the positive x-axis.
inline bool angle_less(const Point& a, const Point& b) {
    auto half = [](const Point& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

/// Angle of v measured counterclockwise from `from`, compared without trigonometry.
inline bool ccw_from_less(const Point& from, const Point& a, const Point& b) {
    // Rotate so that `from` maps to the positive x-axis: (x,y) -> (from.x*x + from.y*y, from.x*y - from.y*x).
    auto rot = [&](const Point& v) { return Point{dot(from, v), cross(from, v)}; };
    return angle_less(rot(a), rot(b));
}

inline bool same_direction(const Point& a, const Point& b) {
    return cross(a, b) == 0 && dot(a, b) > 0;
}

}  // namespace detail

/// True iff the closed segment pq lies in the closed region of poly.
inline bool visible(const SimplePolygon& poly, const Point& p, const Point& q) {
    detail::require_in_polygon(poly, p, "visible");
    detail::require_in_polygon(poly, q, "visible");
    if (p == q) return true;
    const Rational xlo = std::min(p.x, q.x), xhi = std::max(p.x, q.x);
    const Rational ylo = std::min(p.y, q.y), yhi = std::max(p.y, q.y);
    std::vector<Rational> events{0, 1};
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly.next(i);
        if (std::max(a.x, b.x) < xlo || std::min(a.x, b.x) > xhi) continue;
        if (std::max(a.y, b.y) < ylo || std::min(a.y, b.y) > yhi) continue;
        int o1 = orient(p, q, a), o2 = orient(p, q, b);
        if (o1 * o2 < 0 && orient(a, b, p) * orient(a, b, q) < 0) return false;
        if (o1 == 0 && on_segment(a, p, q)) events.push_back(detail::param_on(p, q, a));
        if (o2 == 0 && on_segment(b, p, q)) events.push_back(detail::param_on(p, q, b));
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    for (std::size_t k = 0; k + 1 < events.size(); ++k) {
        Point m = lerp(p, q, (events[k] + events[k + 1]) / 2);
        if (poly.locate(m) == Location::Outside) return false;
    }
    return true;
}

namespace detail {

/// Whether the ray from p along d, rotated infinitesimally (side +1 ccw, -1 cw), starts into the interior.
inline bool ray_enters(const SimplePolygon& poly, const Point& p, Location where, const Point& d, int side) {
    if (where == Location::Inside) return true;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& v = poly[i];
        if (v == p) {
            Point e1 = poly.next(i) - v;
            Point e2 = poly[(i + n - 1) % n] - v;
            if (same_direction(d, e1)) return side > 0;
            if (same_direction(d, e2)) return side < 0;
            return ccw_from_less(e1, d, e2);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly.next(i);
        if (!on_segment(p, a, b)) continue;
        Point e = b - a;
        int s = sgn(cross(e, d));
        if (s != 0) return s > 0;
        return side * sgn(dot(e, d)) > 0;
    }
    return true;
}

/// Limit exit point of the perturbed ray from p along d; p itself when the ray leaves at once.
inline Point ray_exit(const SimplePolygon& poly, const Point& p, Location where, const Point& d, int side) {
    if (!ray_enters(poly, p, where, d, side)) return p;
    const std::size_t n = poly.size();
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        Point v = poly[i] - p;
        int c = sgn(cross(d, v));
        s[i] = c != 0 ? c : -side * sgn(dot(d, v));
    }
    std::optional<Rational> best;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        if (s[i] * s[j] >= 0) continue;
        const Point& a = poly[i];
        const Point& b = poly[j];
        if (where == Location::Boundary && on_segment(p, a, b)) continue;
        Point e = b - a;
        Rational t = cross(a - p, e) / cross(d, e);
        if (t <= 0) continue;
        if (!best || t < *best) best = t;
    }
    if (!best) throw Error("visibility_polygon: ray escaped the polygon");
    return p + (*best) * d;
}

}  // namespace detail

/// Region of poly visible from p, as a star-shaped polygon with p in its kernel.
inline SimplePolygon visibility_polygon(const SimplePolygon& poly, const Point& p) {
    Location where = poly.locate(p);
    if (where == Location::Outside) throw PreconditionError("visibility_polygon: point outside the polygon");
    std::vector<Point> dirs;
    dirs.reserve(poly.size());
    for (const Point& v : poly.vertices())
        if (v != p) dirs.push_back(v - p);
    std::sort(dirs.begin(), dirs.end(), detail::angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end(), detail::same_direction), dirs.end());

    std::vector<Point> ring;
    ring.reserve(2 * dirs.size());
    for (const Point& d : dirs) {
        for (int side : {-1, 1}) {
            Point h = detail::ray_exit(poly, p, where, d, side);
            if (ring.empty() || ring.back() != h) ring.push_back(std::move(h));
        }
    }
    while (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();

    // Drop vertices in the interior of a straight run.
    bool changed = true;
    while (changed && ring.size() > 3) {
        changed = false;
        std::vector<Point> out;
        const std::size_t m = ring.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = ring[(i + m - 1) % m];
            const Point& b = ring[i];
            const Point& c = ring[(i + 1) % m];
            if (orient(a, b, c) == 0 && dot(b - a, c - b) > 0) {
                changed = true;
                continue;
            }
            out.push_back(b);
        }
        ring.swap(out);
    }
    // Rotate so the ring starts at its lexicographically smallest vertex (deterministic output).
    auto it = std::min_element(ring.begin(), ring.end());
    std::rotate(ring.begin(), it, ring.end());
    return SimplePolygon::trusted(std::move(ring));
}

}  // namespace artgallery
