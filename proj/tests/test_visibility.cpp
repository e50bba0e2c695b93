#include <gtest/gtest.h>

#include <random>

#include "artgallery/coverage.hpp"
#include "artgallery/visibility.hpp"

using namespace artgallery;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }
Point Q(long xn, long xd, long yn, long yd) { return {make_rational(xn, xd), make_rational(yn, yd)}; }

SimplePolygon l_hexagon() {
    return SimplePolygon({P(0, 0), P(2, 0), P(2, 1), P(1, 1), P(1, 2), P(0, 2)});
}

SimplePolygon comb() {
    return SimplePolygon({P(0, 0), P(5, 0), P(5, 3), P(4, 3), P(4, 1), P(3, 1), P(3, 3), P(2, 3), P(2, 1),
                          P(1, 1), P(1, 3), P(0, 3)});
}

// Independent oracle: does the closed segment meet the open exterior? Checked by proper crossings
// plus dense exact sampling of the segment.
bool sampled_visible(const SimplePolygon& poly, const Point& p, const Point& q) {
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (segments_cross_properly(p, q, poly[i], poly.next(i))) return false;
    for (int k = 0; k <= 256; ++k)
        if (poly.locate(lerp(p, q, make_rational(k, 256))) == Location::Outside) return false;
    return true;
}

}  // namespace

TEST(Visible, ConvexAlwaysTrue) {
    SimplePolygon sq({P(0, 0), P(4, 0), P(4, 4), P(0, 4)});
    EXPECT_TRUE(visible(sq, P(1, 1), P(3, 2)));
    EXPECT_TRUE(visible(sq, P(0, 0), P(4, 4)));
    EXPECT_TRUE(visible(sq, P(0, 0), P(4, 0)));
}

TEST(Visible, LHexagonReflexCorner) {
    auto L = l_hexagon();
    // Passing exactly through the reflex corner keeps the segment in the closed region.
    EXPECT_TRUE(visible(L, Q(3, 2, 1, 2), Q(1, 2, 3, 2)));
    EXPECT_FALSE(visible(L, Q(3, 2, 1, 2), Q(3, 4, 3, 2)));
    EXPECT_TRUE(visible(L, P(2, 0), P(0, 2)));
    EXPECT_TRUE(visible(L, P(2, 1), P(1, 1)));
}

TEST(Visible, PointEqualsItself) {
    auto L = l_hexagon();
    EXPECT_TRUE(visible(L, Q(1, 2, 1, 2), Q(1, 2, 1, 2)));
}

TEST(Visible, OutsidePointIsPreconditionError) {
    auto L = l_hexagon();
    EXPECT_THROW(visible(L, Q(3, 2, 3, 2), P(0, 0)), PreconditionError);
}

TEST(Visible, SymmetricAndMatchesSamplingOracle) {
    auto C = comb();
    std::mt19937_64 rng(3);
    std::vector<Point> pts;
    while (pts.size() < 60) {
        Point p = Q(static_cast<long>(rng() % 41), 8, static_cast<long>(rng() % 25), 8);
        if (C.contains(p)) pts.push_back(p);
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); j += 3) {
            bool v = visible(C, pts[i], pts[j]);
            EXPECT_EQ(v, visible(C, pts[j], pts[i]));
            EXPECT_EQ(v, sampled_visible(C, pts[i], pts[j]));
        }
}

TEST(VisibilityPolygon, ConvexIsItself) {
    SimplePolygon sq({P(0, 0), P(4, 0), P(4, 4), P(0, 4)});
    auto V = visibility_polygon(sq, P(1, 2));
    EXPECT_EQ(V.area2(), sq.area2());
    EXPECT_EQ(V.size(), 4u);
    auto W = visibility_polygon(sq, P(0, 0));
    EXPECT_EQ(W.area2(), sq.area2());
    EXPECT_EQ(W.size(), 4u);
}

TEST(VisibilityPolygon, LHexagonClippedByReflexRay) {
    auto L = l_hexagon();
    // (1/2,1/2) lies in the kernel of the L, so nothing is clipped there.
    EXPECT_EQ(visibility_polygon(L, Q(1, 2, 1, 2)).area2(), L.area2());
    auto V = visibility_polygon(L, Q(3, 2, 1, 2));
    EXPECT_NO_THROW(SimplePolygon(V.vertices()));
    // Area check against Monte-Carlo sampling with the visible() oracle.
    std::mt19937_64 rng(99);
    int inside = 0, total = 0;
    for (int i = 0; i < 4000; ++i) {
        Point s = Q(static_cast<long>(rng() % 2000), 1000, static_cast<long>(rng() % 2000), 1000);
        if (!L.contains(s)) continue;
        ++total;
        bool vis = visible(L, Q(3, 2, 1, 2), s);
        EXPECT_EQ(vis, V.contains(s)) << s.x << "," << s.y;
        inside += vis;
    }
    double ratio = static_cast<double>(inside) / total;
    double exact = V.area2().get_d() / L.area2().get_d();
    EXPECT_NEAR(ratio, exact, 0.04);
    EXPECT_LT(V.area2(), L.area2());
}

TEST(VisibilityPolygon, SubsetAndVerticesSeen) {
    auto C = comb();
    std::vector<Point> probes{Q(1, 2, 1, 2), P(2, 1), Q(5, 2, 1, 2), P(0, 0), Q(9, 2, 5, 2), P(4, 1)};
    for (const Point& p : probes) {
        auto V = visibility_polygon(C, p);
        EXPECT_NO_THROW(SimplePolygon(V.vertices()));
        for (const Point& v : V.vertices()) {
            EXPECT_TRUE(C.contains(v));
            EXPECT_TRUE(visible(C, p, v));
        }
        EXPECT_NE(V.locate(p), Location::Outside);
    }
}

TEST(Coverage, FindUncovered) {
    auto C = comb();
    std::vector<SimplePolygon> pieces{visibility_polygon(C, Q(1, 2, 1, 2)), visibility_polygon(C, Q(5, 2, 1, 2))};
    auto w = find_uncovered(C, pieces);
    ASSERT_TRUE(w.has_value());
    EXPECT_FALSE(visible(C, Q(1, 2, 1, 2), *w));
    EXPECT_FALSE(visible(C, Q(5, 2, 1, 2), *w));
    pieces.push_back(visibility_polygon(C, Q(9, 2, 1, 2)));
    EXPECT_FALSE(find_uncovered(C, pieces).has_value());
    EXPECT_TRUE(find_uncovered(C, {}).has_value());
}
