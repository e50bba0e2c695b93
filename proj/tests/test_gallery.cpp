#include <gtest/gtest.h>

#include "artgallery/fixtures.hpp"
#include "artgallery/gallery.hpp"

using namespace artgallery;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

const Gallery& mobius_gallery() {
    static const Gallery g = compile(fixtures::mobius_cnf(), r(1, 16));
    return g;
}

// Rectangle, nine vertices per variable gadget, eight per copy pocket pair, three per clause slit.
std::size_t expected_vertices(const Gallery& g) {
    return 4 + 9 * g.k() + 8 * g.copy_gadgets.size() + 3 * g.clause_gadgets.size();
}

}  // namespace

TEST(Compile, MobiusUsesOneGuardPerLiteral) {
    const auto& g = mobius_gallery();
    EXPECT_EQ(g.k(), 17u);
    EXPECT_EQ(g.clause_gadgets.size(), 5u);
    // Each variable's segments are chained: occurrences minus one copy gadgets per variable.
    EXPECT_EQ(g.copy_gadgets.size(), 17u - 4u);
    EXPECT_EQ(vertex_count(g), expected_vertices(g));
    EXPECT_EQ(vertex_count(g), 276u);
}

TEST(Compile, SingleLiteral) {
    CnfFormula f{1, {}, {{Literal::eq(0, 0)}}};
    auto g = compile(f, r(1, 16));
    EXPECT_EQ(g.k(), 1u);
    EXPECT_TRUE(g.copy_gadgets.empty());
    EXPECT_EQ(vertex_count(g), 16u);
}

TEST(Compile, AuditIsClean) {
    EXPECT_TRUE(audit(mobius_gallery()).empty());
}

TEST(Compile, CopyPairsChainConsecutiveOccurrences) {
    const auto& g = mobius_gallery();
    for (const auto& p : g.copy_pairs) {
        const auto& up = g.guard_segments[p[0]];
        const auto& lo = g.guard_segments[p[1]];
        EXPECT_EQ(up.var, lo.var);
        EXPECT_EQ(up.segment.a.x, lo.segment.a.x);
        EXPECT_EQ(up.segment.b.x, lo.segment.b.x);
        EXPECT_GT(up.segment.a.y, lo.segment.a.y);
    }
}

TEST(Compile, DesignatedEndpointsLieInTheirClauseRegion) {
    const auto& g = mobius_gallery();
    for (const auto& s : g.guard_segments) {
        const auto& c = g.clause_gadgets[s.clause];
        Point end = s.literal.value == 0 ? s.segment.a : s.segment.b;
        Point other = s.literal.value == 0 ? s.segment.b : s.segment.a;
        EXPECT_TRUE(c.region_contains(end));
        EXPECT_FALSE(c.region_contains(other));
        EXPECT_EQ(designation(s), s.literal.value == 0 ? "left" : "right");
    }
}

TEST(Compile, Rejections) {
    CnfFormula unsat{1, {}, {{Literal::eq(0, 0)}, {Literal::eq(0, 1)}}};
    EXPECT_THROW(compile(unsat, r(1, 16)), UnsatisfiableError);
    EXPECT_THROW(compile(CnfFormula{2, {}, {}}, r(1, 16)), PreconditionError);
    EXPECT_THROW(compile(fixtures::mobius_cnf(), 0), PreconditionError);
    CnfFormula band{1, {0, r(1, 2), 1}, {{Literal::band(0)}}};
    EXPECT_THROW(compile(band, r(1, 16)), PreconditionError);
}

TEST(Compile, LargeClearanceIsInfeasible) {
    EXPECT_THROW(compile(fixtures::mobius_cnf(), 1), InfeasibleError);
}

TEST(Compile, AddingAClauseAddsItsGadgets) {
    CnfFormula f{2, {}, {{Literal::eq(0, 0), Literal::eq(1, 1)}}};
    auto g1 = compile(f, r(1, 16));
    f.clauses.push_back({Literal::eq(0, 1), Literal::eq(1, 1)});
    auto g2 = compile(f, r(1, 16));
    EXPECT_EQ(vertex_count(g1), expected_vertices(g1));
    EXPECT_EQ(vertex_count(g2), expected_vertices(g2));
    EXPECT_EQ(vertex_count(g2) - vertex_count(g1), 2 * 9 + 2 * 8 + 3u);
}

TEST(Embed, ZeroPicksLeftEndpointsAndOnePicksRight) {
    const auto& g = mobius_gallery();
    auto lo = embed(g, {0, 0, 0, 0});
    auto hi = embed(g, {1, 1, 1, 1});
    for (std::size_t i = 0; i < g.k(); ++i) {
        EXPECT_EQ(lo[i], g.guard_segments[i].segment.a);
        EXPECT_EQ(hi[i], g.guard_segments[i].segment.b);
    }
    EXPECT_THROW(embed(g, {0, 0, 0}), PreconditionError);
    EXPECT_THROW(embed(g, {0, 0, 0, r(3, 2)}), PreconditionError);
}

TEST(Embed, HausdorffEqualsWeightedSupNorm) {
    const auto& g = mobius_gallery();
    auto w = column_widths(g);
    Rational eta = embed_threshold(g);
    ASSERT_GT(eta, 0);
    std::vector<Rational> x{r(1, 3), 0, r(2, 5), 1}, y = x;
    y[0] += eta / 2;
    y[2] -= eta / 3;
    Rational sup = std::max(w[0] * (eta / 2), w[2] * (eta / 3));
    EXPECT_EQ(hausdorff_distance_sq_max(embed(g, x), embed(g, y)), sup * sup);
}

TEST(CompileSurface, VertexCountIsAffineInGenus) {
    for (bool orientable : {true, false}) {
        std::vector<long> v;
        for (int n = 2; n <= 4; ++n) v.push_back(static_cast<long>(vertex_count(compile_surface(n, orientable, r(1, 16)))));
        EXPECT_EQ(v[2] - v[1], v[1] - v[0]) << (orientable ? "orientable" : "non-orientable");
    }
}

TEST(CompileSurface, WedgeRowsCarryBandDesignations) {
    auto g = compile_surface(3, true, r(1, 16));
    ASSERT_TRUE(g.surface);
    EXPECT_EQ(g.surface->genus, 3);
    EXPECT_FALSE(g.formula.bands.empty());
    bool band = false;
    for (const auto& s : g.guard_segments) band |= designation(s).rfind("band", 0) == 0;
    EXPECT_TRUE(band);
    EXPECT_TRUE(audit(g).empty());
    EXPECT_THROW(compile_surface(1, true, r(1, 16)), PreconditionError);
}

TEST(NotchedRoomTest, BareRectangle) {
    NotchedRoom room{0, 4, 0, 3, {}};
    EXPECT_EQ(room.polygon().size(), 4u);
    EXPECT_FALSE(room.uncovered_by_room_guards({{1, 1}}).has_value());
    EXPECT_TRUE(room.uncovered_by_room_guards({}).has_value());
}

TEST(NotchedRoomTest, RejectsBadNotches) {
    NotchedRoom overlap{0, 4, 0, 3, {{Wall::Left, 1, 2, {{-1, r(3, 2)}}, "a"}, {Wall::Left, r(3, 2), r(5, 2), {{-1, 2}}, "b"}}};
    EXPECT_THROW(overlap.polygon(), PreconditionError);
    NotchedRoom inward{0, 4, 0, 3, {{Wall::Right, 1, 2, {{3, r(3, 2)}}, "c"}}};
    EXPECT_THROW(inward.polygon(), PreconditionError);
}
