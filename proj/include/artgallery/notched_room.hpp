#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "coverage.hpp"
#include "geometry.hpp"

namespace artgallery {

enum class Wall { Left, Right };

/// A convex pocket cut outward from a vertical wall; its mouth is the wall interval [lo, hi].
struct Notch {
    Wall wall = Wall::Left;
    Rational lo, hi;
    std::vector<Point> inner;  // vertices off the wall, in boundary traversal order
    std::string tag;

    Rational wall_x(const Rational& west, const Rational& east) const { return wall == Wall::Left ? west : east; }

    /// Counterclockwise ring: mouth endpoints plus the inner chain.
    std::vector<Point> ring(const Rational& west, const Rational& east) const {
        Rational x = wall_x(west, east);
        std::vector<Point> r;
        r.push_back(wall == Wall::Right ? Point{x, lo} : Point{x, hi});
        r.insert(r.end(), inner.begin(), inner.end());
        r.push_back(wall == Wall::Right ? Point{x, hi} : Point{x, lo});
        return r;
    }
};

namespace detail {

/// Keeps the part of a convex ring where s * orient(a, b, p) >= 0.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& ring, const Point& a, const Point& b, int s) {
    std::vector<Point> out;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % n];
        int sp = s * orient(a, b, p), sq = s * orient(a, b, q);
        if (sp >= 0) out.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) out.push_back(intersect_lines(a, b, p, q));
    }
    return out;
}

/// Drops repeated and collinear vertices; empty when the ring has no area.
inline std::vector<Point> tidy_ring(std::vector<Point> r) {
    bool changed = true;
    while (changed && r.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < r.size() && r.size() >= 3; ++i) {
            const Point& a = r[(i + r.size() - 1) % r.size()];
            const Point& b = r[i];
            const Point& c = r[(i + 1) % r.size()];
            if (b == c || orient(a, b, c) == 0) {
                r.erase(r.begin() + static_cast<long>(i));
                changed = true;
                break;
            }
        }
    }
    if (r.size() < 3 || signed_area2(r) <= 0) return {};
    return r;
}

}  // namespace detail

/// Axis-aligned rectangle [west, east] x [bottom, top] with convex notches on its vertical walls.
struct NotchedRoom {
    Rational west, east, bottom, top;
    std::vector<Notch> notches;

    Rational wall_x(const Notch& n) const { return n.wall_x(west, east); }
    std::vector<Point> ring_of(const Notch& n) const { return n.ring(west, east); }

    /// Checks mouths and notch shapes, then assembles the counterclockwise boundary.
    SimplePolygon polygon() const {
        if (!(west < east) || !(bottom < top)) throw PreconditionError("room has no area");
        for (Wall w : {Wall::Left, Wall::Right}) {
            auto ids = on_wall(w);
            for (std::size_t k = 0; k < ids.size(); ++k) {
                const Notch& n = notches[ids[k]];
                if (!(bottom < n.lo && n.lo < n.hi && n.hi < top))
                    throw PreconditionError("notch " + n.tag + " mouth outside its wall");
                if (k + 1 < ids.size() && !(n.hi < notches[ids[k + 1]].lo))
                    throw PreconditionError("notch mouths overlap: " + n.tag + ", " + notches[ids[k + 1]].tag);
                for (const Point& p : n.inner)
                    if (w == Wall::Left ? !(p.x < west) : !(p.x > east))
                        throw PreconditionError("notch " + n.tag + " does not point outward");
                auto r = ring_of(n);
                for (std::size_t i = 0; i < r.size(); ++i)
                    if (orient(r[i], r[(i + 1) % r.size()], r[(i + 2) % r.size()]) <= 0)
                        throw PreconditionError("notch " + n.tag + " is not strictly convex");
            }
        }
        std::vector<Point> v{{west, bottom}, {east, bottom}};
        for (int id : on_wall(Wall::Right)) {
            auto r = ring_of(notches[id]);
            v.insert(v.end(), r.begin(), r.end());
        }
        v.push_back({east, top});
        v.push_back({west, top});
        auto left = on_wall(Wall::Left);
        for (auto it = left.rbegin(); it != left.rend(); ++it) {
            auto r = ring_of(notches[*it]);
            v.insert(v.end(), r.begin(), r.end());
        }
        return SimplePolygon(std::move(v));
    }

    /// Notch indices on one wall, by increasing mouth height.
    std::vector<int> on_wall(Wall w) const {
        std::vector<int> ids;
        for (std::size_t i = 0; i < notches.size(); ++i)
            if (notches[i].wall == w) ids.push_back(static_cast<int>(i));
        std::sort(ids.begin(), ids.end(), [&](int a, int b) { return notches[a].lo < notches[b].lo; });
        return ids;
    }

    bool in_room(const Point& p) const { return west <= p.x && p.x <= east && bottom <= p.y && p.y <= top; }

    /// Index of the notch holding p off the room, or nothing.
    std::optional<int> notch_of(const Point& p) const {
        if (in_room(p)) return std::nullopt;
        for (std::size_t i = 0; i < notches.size(); ++i)
            if (locate(ring_of(notches[i]), p) != Location::Outside) return static_cast<int>(i);
        return std::nullopt;
    }

    /// Visibility from a room point; a notch point is seen iff the sightline meets the closed mouth.
    bool sees_from_room(const Point& g, const Point& p) const {
        auto id = notch_of(p);
        if (!id) return in_room(p);
        return sees_in_notch(g, p, notches[*id]);
    }

    /// As sees_from_room, for p already known to lie off the room in notch n.
    bool sees_in_notch(const Point& g, const Point& p, const Notch& n) const {
        Rational x = wall_x(n);
        if (g.x == x) return n.lo <= g.y && g.y <= n.hi;
        Rational y = g.y + (p.y - g.y) * (x - g.x) / (p.x - g.x);
        return n.lo <= y && y <= n.hi;
    }

    /// Part of notch n visible from room point g: the notch clipped to the cone through its mouth.
    std::vector<Point> visible_part(const Notch& n, const Point& g) const {
        auto ring = ring_of(n);
        Rational x = wall_x(n);
        if (g.x == x) return (n.lo <= g.y && g.y <= n.hi) ? ring : std::vector<Point>{};
        Point lo{x, n.lo}, hi{x, n.hi};
        int s = n.wall == Wall::Right ? 1 : -1;
        ring = detail::clip_halfplane(ring, g, hi, -s);
        ring = detail::clip_halfplane(ring, g, lo, s);
        return detail::tidy_ring(std::move(ring));
    }

    /// Exact coverage for guards inside the room: the room is convex, so only notches can be missed.
    std::optional<Point> uncovered_by_room_guards(const std::vector<Point>& guards) const {
        if (guards.empty()) return midpoint({west, bottom}, {east, top});
        for (const Notch& n : notches) {
            std::vector<SimplePolygon> pieces;
            for (const Point& g : guards) {
                auto part = visible_part(n, g);
                if (!part.empty()) pieces.push_back(SimplePolygon::trusted(std::move(part)));
            }
            if (auto w = find_uncovered(SimplePolygon::trusted(ring_of(n)), pieces)) return w;
        }
        return std::nullopt;
    }
};

}  // namespace artgallery
