#include <gtest/gtest.h>

#include <random>

#include "artgallery/gadgets.hpp"
#include "artgallery/notched_room.hpp"

using namespace artgallery;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

struct VariableFixture : ::testing::Test {
    VariableGadget v = make_variable_gadget({{0, 0}, {1, 0}}, -4, 5, r(1, 4));
    NotchedRoom room{-4, 5, -2, 2, {v.f_slit, v.i_slit, v.j_slit}};
};

}  // namespace

TEST_F(VariableFixture, GuardOnSegmentSeesAllThreeApexes) {
    room.polygon();
    Point g{r(1, 2), 0};
    EXPECT_TRUE(room.sees_from_room(g, v.F));
    EXPECT_TRUE(room.sees_from_room(g, v.I));
    EXPECT_TRUE(room.sees_from_room(g, v.J));
}

TEST_F(VariableFixture, GuardOffSegmentMissesJ) {
    EXPECT_FALSE(room.sees_from_room({r(1, 2), r(1, 10)}, v.J));
    EXPECT_FALSE(room.sees_from_room({r(1, 2), r(-1, 10)}, v.J));
    EXPECT_FALSE(room.sees_from_room({r(3, 2), 0}, v.J));
}

TEST_F(VariableFixture, JConeMeetsTheRowExactlyInTheSegment) {
    auto cone = v.j_cone();
    EXPECT_TRUE(segment_meets(cone, {0, 0}, {1, 0}));
    EXPECT_FALSE(segment_meets(cone, {r(-3), 0}, {r(-1, 100), 0}));
    EXPECT_FALSE(segment_meets(cone, {r(101, 100), 0}, {4, 0}));
}

TEST_F(VariableFixture, ForcedZonesAreTheSeeingCones) {
    // Room points seeing F (resp. I) are exactly the room part of triangle FIK (resp. EFI).
    std::mt19937_64 rng(5);
    auto coord = [&](const Rational& lo, const Rational& hi) -> Rational { return lo + (hi - lo) * r(rng() % 1001, 1000); };
    std::vector<Point> zf(v.zone_f.begin(), v.zone_f.end()), zi(v.zone_i.begin(), v.zone_i.end());
    for (int i = 0; i < 400; ++i) {
        Point p{coord(-4, 5), coord(r(-1, 5), r(1, 5))};
        EXPECT_EQ(room.sees_from_room(p, v.F), locate(zf, p) != Location::Outside);
        EXPECT_EQ(room.sees_from_room(p, v.I), locate(zi, p) != Location::Outside);
    }
}

TEST(VariableGadget, RejectsDegenerateInput) {
    EXPECT_THROW(make_variable_gadget({{0, 0}, {0, 0}}, -4, 5, r(1, 4)), PreconditionError);
    EXPECT_THROW(make_variable_gadget({{0, 0}, {1, 1}}, -4, 5, r(1, 4)), PreconditionError);
    EXPECT_THROW(make_variable_gadget({{0, 0}, {1, 0}}, 0, 5, r(1, 4)), PreconditionError);
    EXPECT_THROW(make_variable_gadget({{0, 0}, {1, 0}}, -4, 5, 0), PreconditionError);
}

namespace {

CopyGadget strip_copy() { return make_copy_gadget({{8, 4}, {10, 4}}, {{8, 0}, {10, 0}}, 0, 4, r(1, 16)); }

}  // namespace

TEST(CopyGadget, OccludersAreLineIntersections) {
    auto c = strip_copy();
    Point G{8, 4}, H{10, 4}, N{8, 0}, O{10, 0};
    EXPECT_EQ(intersect_lines(G, c.B, H, c.A), c.C);
    EXPECT_EQ(intersect_lines(N, c.B, O, c.A), c.D);
    EXPECT_EQ(intersect_lines(G, c.V, H, c.U), c.S);
    EXPECT_EQ(intersect_lines(N, c.V, O, c.U), c.T);
}

TEST(CopyGadget, InversionMapsSegmentEndsToPocketFloor) {
    auto c = strip_copy();
    EXPECT_EQ(invert_through(c.C, {8, 4}, c.A.y), c.B);
    EXPECT_EQ(invert_through(c.C, {10, 4}, c.A.y), c.A);
    EXPECT_EQ(invert_through(c.D, {8, 0}, c.A.y), c.B);
    EXPECT_EQ(invert_through(c.D, {10, 0}, c.A.y), c.A);
    // The image of the segment point at parameter t sits at parameter t along BA.
    Point alpha = lerp({8, 4}, {10, 4}, r(3, 7));
    EXPECT_EQ(invert_through(c.C, alpha, c.A.y), lerp(c.B, c.A, r(3, 7)));
}

TEST(CopyGadget, LowerPocketMirrorsUpper) {
    auto c = strip_copy();
    const Rational mid2 = 4;
    EXPECT_EQ(c.U.x, c.A.x);
    EXPECT_EQ(c.V.x, c.B.x);
    EXPECT_EQ(c.U.y + c.A.y, mid2);
    EXPECT_EQ(c.S.y + c.D.y, mid2);
    EXPECT_EQ(c.T.y + c.C.y, mid2);
    EXPECT_EQ(c.upper.wall, Wall::Left);
    EXPECT_EQ(c.lower.wall, Wall::Left);
}

TEST(CopyGadget, WedgesContainTheirSegments) {
    auto c = strip_copy();
    EXPECT_TRUE(segment_meets(c.upper_wedge(), {8, 4}, {10, 4}));
    EXPECT_TRUE(segment_meets(c.upper_wedge(), {8, 0}, {10, 0}));
    EXPECT_TRUE(segment_meets(c.lower_wedge(), {8, 4}, {10, 4}));
    EXPECT_FALSE(segment_meets(c.upper_wedge(), {8, 30}, {10, 30}));
}

TEST(CopyGadget, Preconditions) {
    EXPECT_THROW(make_copy_gadget({{8, 4}, {10, 4}}, {{9, 0}, {10, 0}}, 0, 4, r(1, 16)), PreconditionError);
    EXPECT_THROW(make_copy_gadget({{8, 0}, {10, 0}}, {{8, 4}, {10, 4}}, 0, 4, r(1, 16)), PreconditionError);
    EXPECT_THROW(make_copy_gadget({{8, 4}, {10, 4}}, {{8, 0}, {10, 0}}, 9, 4, r(1, 16)), PreconditionError);
    EXPECT_THROW(make_copy_gadget({{8, 4}, {10, 4}}, {{8, 0}, {10, 0}}, 0, 4, 0), PreconditionError);
}

TEST(CopyGadget, WallTooCloseIsInfeasible) {
    // With the wall right next to a long segment the occluder sightlines fail.
    EXPECT_THROW(make_copy_gadget({{1, 4}, {40, 4}}, {{1, 0}, {40, 0}}, 0, 4, r(1, 4)), InfeasibleError);
}

TEST(ClauseGadget, RegionMembership) {
    auto c = make_clause_gadget({100, 0}, 0, 4, r(1, 4));
    EXPECT_EQ(c.witness, (Point{104, 4}));
    EXPECT_TRUE(c.region_contains({100, r(1, 8)}));
    EXPECT_TRUE(c.region_contains({90, c.lower_at(90)}));
    EXPECT_TRUE(c.region_contains({90, c.upper_at(90)}));
    EXPECT_FALSE(c.region_contains({90, c.lower_at(90) - r(1, 1000)}));
    EXPECT_FALSE(c.region_contains({90, c.upper_at(90) + r(1, 1000)}));
    EXPECT_FALSE(c.region_contains({101, 1}));
    // Lower boundary has slope one; upper boundary passes the mouth's top corner.
    EXPECT_EQ(c.lower_at(90), -10);
    EXPECT_EQ(c.upper_at(100), r(1, 4));
}

TEST(ClauseGadget, StackedRegionsSeparateUntilTheFanWidensToTheSpacing) {
    // Same shapes 4 apart; the fan widens by 1/16 per unit, so they meet 64 units left of the apex.
    auto a = make_clause_gadget({100, 0}, 0, 4, r(1, 4));
    auto b = make_clause_gadget({100, 4}, 1, 4, r(1, 4));
    EXPECT_TRUE(clause_regions_disjoint(a, b, 50));
    EXPECT_TRUE(clause_regions_disjoint(b, a, 41));
    EXPECT_FALSE(clause_regions_disjoint(a, b, 40));
    EXPECT_FALSE(clause_regions_disjoint(a, b, -100));
}

TEST(ClauseGadget, Preconditions) {
    EXPECT_THROW(make_clause_gadget({0, 0}, 0, 4, 0), PreconditionError);
    EXPECT_THROW(make_clause_gadget({0, 0}, 0, 0, r(1, 4)), PreconditionError);
    EXPECT_THROW(make_clause_gadget({0, 0}, 0, 4, 4), PreconditionError);
}

TEST(WedgeSegments, TwoRowsGiveTheUnitInterval) {
    auto c = make_clause_gadget({100, 0}, 0, 4, r(1, 4));
    auto w = make_wedge_segments(2, c, 60);
    ASSERT_EQ(w.constants.size(), 2u);
    EXPECT_EQ(w.constants[0], 0);
    EXPECT_EQ(w.constants[1], 1);
}

TEST(WedgeSegments, PositionsFollowTheCone) {
    auto c = make_clause_gadget({100, 0}, 0, 4, r(1, 4));
    auto w = make_wedge_segments(4, c, 60);
    for (std::size_t b = 0; b + 1 < w.constants.size(); ++b) EXPECT_LT(w.constants[b], w.constants[b + 1]);
    EXPECT_EQ(w.constants.front(), 0);
    EXPECT_EQ(w.constants.back(), 1);
    for (std::size_t b = 0; b + 1 < w.positions.size(); ++b) {
        // The next row starts where this row's upper boundary height meets the lower boundary.
        Rational yu = c.upper_at(w.positions[b]);
        Point p = intersect_lines(c.witness, c.mouth_lo, {0, yu}, {1, yu});
        EXPECT_EQ(p.x, w.positions[b + 1]);
        EXPECT_EQ(w.heights[b], c.lower_at(w.positions[b]));
        // Row b enters the region where it crosses the lower boundary, inside the segment.
        auto seg = w.segment(static_cast<int>(b));
        EXPECT_TRUE(c.region_contains({w.positions[b], seg.a.y}));
        EXPECT_LE(seg.a.x, w.positions[b]);
        EXPECT_LE(w.positions[b], seg.b.x);
    }
}

TEST(WedgeSegments, Preconditions) {
    auto c = make_clause_gadget({100, 0}, 0, 4, r(1, 4));
    EXPECT_THROW(make_wedge_segments(1, c, 60), PreconditionError);
    EXPECT_THROW(make_wedge_segments(3, c, 100), PreconditionError);
}
