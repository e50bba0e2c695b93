#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace artgallery {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Rational dist_sq(const Point& a, const Point& b) {
    Rational dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Point at affine parameter t along a->b.
inline Point lerp(const Point& a, const Point& b, const Rational& t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}

struct Segment {
    Point a;
    Point b;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Sign of the signed area of triangle pqr: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orient(const Point& p, const Point& q, const Point& r) {
    Rational v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sgn(v);
}

/// Intersection of line(p1,p2) with line(q1,q2).
inline Point intersect_lines(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    if (p1 == p2 || q1 == q2) throw PreconditionError("intersect_lines: degenerate line");
    Point d1 = p2 - p1, d2 = q2 - q1;
    Rational den = cross(d1, d2);
    if (den == 0) throw PreconditionError("intersect_lines: parallel lines");
    Rational t = cross(q1 - p1, d2) / den;
    return lerp(p1, p2, t);
}

/// Closed-segment membership.
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// True when the closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && on_segment(c, a, b)) || (o2 == 0 && on_segment(d, a, b)) ||
           (o3 == 0 && on_segment(a, c, d)) || (o4 == 0 && on_segment(b, c, d));
}

/// True when ab and cd cross at a single point interior to both.
inline bool segments_cross_properly(const Point& a, const Point& b, const Point& c, const Point& d) {
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

/// Twice the signed area of a closed vertex ring.
inline Rational signed_area2(const std::vector<Point>& v) {
    Rational s = 0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) s += cross(v[i], v[(i + 1) % n]);
    return s;
}

enum class Location { Outside, Boundary, Inside };

/// Point location against a closed vertex ring (any orientation).
inline Location locate(const std::vector<Point>& v, const Point& p) {
    const std::size_t n = v.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (on_segment(p, a, b)) return Location::Boundary;
        if (a.y <= p.y) {
            if (b.y > p.y && orient(a, b, p) > 0) ++winding;
        } else if (b.y <= p.y && orient(a, b, p) < 0) {
            --winding;
        }
    }
    return winding != 0 ? Location::Inside : Location::Outside;
}

/// Describes why a vertex ring is not a simple polygon, or returns nothing.
inline std::optional<std::string> simplicity_violation(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) return "fewer than 3 vertices";
    {
        std::vector<Point> sorted = v;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return "repeated vertex";
    }
    struct Edge {
        std::size_t i;
        Rational xmin, xmax, ymin, ymax;
    };
    std::vector<Edge> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        edges.push_back({i, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y),
                         std::max(a.y, b.y)});
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& e, const Edge& f) { return e.xmin < f.xmin; });
    for (std::size_t s = 0; s < n; ++s) {
        const Edge& e = edges[s];
        for (std::size_t t = s + 1; t < n && edges[t].xmin <= e.xmax; ++t) {
            const Edge& f = edges[t];
            if (f.ymax < e.ymin || e.ymax < f.ymin) continue;
            std::size_t i = e.i, j = f.i;
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            const Point& c = v[j];
            const Point& d = v[(j + 1) % n];
            bool next = (i + 1) % n == j;
            bool prev = (j + 1) % n == i;
            if (next || prev) {
                // Adjacent edges share one endpoint; they must not fold back onto each other.
                const Point& shared = next ? b : a;
                const Point& far_e = next ? a : b;
                const Point& far_f = next ? d : c;
                if (orient(far_e, shared, far_f) == 0 && dot(far_e - shared, far_f - shared) > 0)
                    return "adjacent edges overlap at vertex " + std::to_string(next ? j : i);
                continue;
            }
            if (segments_intersect(a, b, c, d))
                return "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect";
        }
    }
    return std::nullopt;
}

/// Counterclockwise simple polygon; the constructor enforces every invariant.
class SimplePolygon {
public:
    SimplePolygon() = default;
    explicit SimplePolygon(std::vector<Point> vertices) : v_(std::move(vertices)) {
        if (auto why = simplicity_violation(v_)) throw PreconditionError("not a simple polygon: " + *why);
        if (signed_area2(v_) <= 0) throw PreconditionError("polygon is not counterclockwise");
    }

    /// Skips validation; for rings already known to be valid.
    static SimplePolygon trusted(std::vector<Point> vertices) {
        SimplePolygon p;
        p.v_ = std::move(vertices);
        return p;
    }

    const std::vector<Point>& vertices() const { return v_; }
    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i]; }
    const Point& next(std::size_t i) const { return v_[(i + 1) % v_.size()]; }
    Rational area2() const { return signed_area2(v_); }
    Location locate(const Point& p) const { return artgallery::locate(v_, p); }
    bool contains(const Point& p) const { return locate(p) != Location::Outside; }

    friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) { return a.v_ == b.v_; }

private:
    std::vector<Point> v_;
};

/// Image of p under the central projection through Z onto the line y = target_y.
inline Point invert_through(const Point& Z, const Point& p, const Rational& target_y) {
    if (p.y == Z.y) throw PreconditionError("invert_through: p and Z on one horizontal line");
    bool between = (p.y < Z.y && Z.y < target_y) || (target_y < Z.y && Z.y < p.y);
    if (!between) throw PreconditionError("invert_through: Z not strictly between the lines");
    Rational t = (target_y - p.y) / (Z.y - p.y);
    return {p.x + t * (Z.x - p.x), target_y};
}

/// Squared Hausdorff distance between two finite point sets.
inline Rational hausdorff_distance_sq_max(const std::vector<Point>& g0, const std::vector<Point>& g1) {
    if (g0.empty() || g1.empty()) throw PreconditionError("hausdorff distance of an empty set");
    auto directed = [](const std::vector<Point>& from, const std::vector<Point>& to) {
        Rational worst = 0;
        for (const Point& p : from) {
            Rational best = dist_sq(p, to.front());
            for (const Point& q : to) best = std::min(best, dist_sq(p, q));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(g0, g1), directed(g1, g0));
}

}  // namespace artgallery
