#include <gtest/gtest.h>

#include "artgallery/fixtures.hpp"
#include "artgallery/verifier.hpp"

using namespace artgallery;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

const Gallery& mobius_gallery() {
    static const Gallery g = compile(fixtures::mobius_cnf(), r(1, 16));
    return g;
}

SimplePolygon square() { return SimplePolygon({{0, 0}, {4, 0}, {4, 3}, {0, 3}}); }

SimplePolygon l_hexagon() { return SimplePolygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}); }

SimplePolygon comb() {
    return SimplePolygon({{0, 0}, {5, 0}, {5, 3}, {4, 3}, {4, 1}, {3, 1}, {3, 3}, {2, 3}, {2, 1}, {1, 1}, {1, 3}, {0, 3}});
}

CopyStrip canonical_strip() { return make_copy_strip({{8, 4}, {10, 4}}, {{8, 0}, {10, 0}}, 0, 14, r(1, 16)); }

}  // namespace

TEST(CoversExact, ConvexPolygonOneGuard) {
    auto rep = covers_exact(square(), {{1, 1}});
    EXPECT_TRUE(rep.covered);
    EXPECT_EQ(rep.method, CoverageMode::Exact);
}

TEST(CoversExact, ReflexCornerHidesPartOfTheL) {
    auto poly = l_hexagon();
    auto rep = covers_exact(poly, {{r(7, 4), r(1, 4)}});
    ASSERT_FALSE(rep.covered);
    ASSERT_TRUE(rep.uncovered_witness);
    EXPECT_FALSE(visible(poly, {r(7, 4), r(1, 4)}, *rep.uncovered_witness));
    EXPECT_TRUE(covers_exact(poly, {{r(1, 2), r(1, 2)}}).covered);
}

TEST(CoversExact, MonotoneAndOrderFree) {
    auto poly = comb();
    std::vector<Point> two{{r(1, 2), r(1, 2)}, {r(5, 2), r(1, 2)}};
    EXPECT_FALSE(covers_exact(poly, two).covered);
    std::vector<Point> three = two;
    three.push_back({r(9, 2), r(1, 2)});
    EXPECT_TRUE(covers_exact(poly, three).covered);
    std::reverse(three.begin(), three.end());
    EXPECT_TRUE(covers_exact(poly, three).covered);
    three.push_back({r(1, 2), r(5, 2)});
    EXPECT_TRUE(covers_exact(poly, three).covered);
}

TEST(CoversExact, GuardOutsideIsRejected) {
    EXPECT_THROW(covers_exact(square(), {{5, 5}}), PreconditionError);
}

TEST(CoversWitness, NeverClaimsLessThanExact) {
    auto s = canonical_strip();
    auto ws = classify_witnesses(s.room, room_witnesses(s.room, s.polygon, 16, 4, true));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        std::vector<Point> guards{lerp(s.copy.gh.a, s.copy.gh.b, random_unit_rational(rng, 8)),
                                  lerp(s.copy.no.a, s.copy.no.b, random_unit_rational(rng, 8))};
        bool exact = covers_exact(s.polygon, guards).covered;
        bool screen = covers_witness_set(s.room, s.polygon, guards, ws, CoverageMode::Witness).covered;
        EXPECT_TRUE(!exact || screen);
    }
}

TEST(CoversGallery, SingleLiteralExactBothWays) {
    auto g = compile(CnfFormula{1, {}, {{Literal::eq(0, 0)}}}, r(1, 16));
    EXPECT_TRUE(covers(g, embed(g, {0}), CoverageMode::Exact).covered);
    auto miss = covers(g, embed(g, {r(1, 2)}), CoverageMode::Exact);
    ASSERT_FALSE(miss.covered);
    EXPECT_EQ(g.room.notch_of(*miss.uncovered_witness), std::optional<int>(static_cast<int>(g.room.notches.size()) - 1));
    EXPECT_TRUE(covers_by_notches(g, embed(g, {0})).covered);
    EXPECT_FALSE(covers_by_notches(g, embed(g, {r(1, 2)})).covered);
}

TEST(CoversGallery, MobiusOnAndOffFace) {
    const auto& g = mobius_gallery();
    auto on = covers(g, embed(g, {r(1, 3), 0, r(2, 5), 0}), CoverageMode::Witness);
    EXPECT_TRUE(on.covered);
    EXPECT_GT(on.witness_count, vertex_count(g));
    auto guards = embed(g, {r(1, 2), r(1, 2), r(1, 2), r(1, 2)});
    auto off = covers(g, guards, CoverageMode::Witness);
    ASSERT_FALSE(off.covered);
    for (const Point& p : guards) EXPECT_FALSE(visible(g.polygon, p, *off.uncovered_witness));
}

TEST(CoversGallery, MismatchedCopyPairLeavesAGapOnThePocketFloor) {
    const auto& g = mobius_gallery();
    std::vector<Rational> x{r(1, 2), 0, r(1, 2), 0};
    ASSERT_TRUE(eval_formula(g.formula, x));
    std::size_t c = 0;
    while (g.guard_segments[g.copy_pairs[c][0]].var != 0) ++c;
    auto guards = embed(g, x);
    const auto& lower = g.guard_segments[g.copy_pairs[c][1]].segment;
    guards[g.copy_pairs[c][1]] = lerp(lower.a, lower.b, r(5, 8));
    EXPECT_FALSE(covers(g, guards, CoverageMode::Witness).covered);
    auto w = copy_gap_witness(g.copy_gadgets[c], r(1, 2), r(5, 8));
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->y == g.copy_gadgets[c].A.y || w->y == g.copy_gadgets[c].U.y);
    for (const Point& p : guards) EXPECT_FALSE(visible(g.polygon, p, *w));
}

TEST(CoversGallery, BoundaryModeUsesFewerWitnesses) {
    const auto& g = mobius_gallery();
    auto x = embed(g, {r(1, 3), 0, r(2, 5), 0});
    auto b = covers(g, x, CoverageMode::Boundary);
    auto w = covers(g, x, CoverageMode::Witness);
    EXPECT_TRUE(b.covered);
    EXPECT_LT(b.witness_count, w.witness_count);
}

TEST(CopyContract, CanonicalStripPasses) {
    auto rep = verify_copy_gadget(canonical_strip(), 1);
    EXPECT_TRUE(rep.zones_disjoint);
    EXPECT_GT(rep.grid_checked, 0u);
    EXPECT_EQ(rep.grid_seeing_all, 0u);
    EXPECT_EQ(rep.same_pass, rep.same_total);
    EXPECT_EQ(rep.mismatch_detected, rep.mismatch_total);
    EXPECT_TRUE(rep.ok());
}

TEST(CopyContract, EndpointCases) {
    auto s = canonical_strip();
    EXPECT_FALSE(copy_gap_witness(s.copy, 0, 0));
    EXPECT_FALSE(copy_gap_witness(s.copy, 1, 1));
    auto w = copy_gap_witness(s.copy, 0, 1);
    ASSERT_TRUE(w);
    EXPECT_FALSE(covers_exact(s.polygon, {s.copy.gh.a, s.copy.no.b}).covered);
    EXPECT_TRUE(covers_exact(s.polygon, {s.copy.gh.a, s.copy.no.a}).covered);
}

TEST(CopyContract, ExtraSlitBreaksTheHypothesis) {
    auto s = canonical_strip();
    s.room.notches.push_back({Wall::Right, r(-3), r(-2), {{15, r(-5, 2)}}, "extra"});
    s.polygon = s.room.polygon();
    EXPECT_THROW(verify_copy_gadget(s, 1), PreconditionError);
}

TEST(BruteForce, SmallPolygons) {
    EXPECT_EQ(brute_force_min_guards(square(), 3).min_guards, 1);
    EXPECT_EQ(brute_force_min_guards(l_hexagon(), 3).min_guards, 1);
    auto c = brute_force_min_guards(comb(), 4);
    EXPECT_EQ(c.min_guards, 3);
    EXPECT_TRUE(covers_exact(comb(), c.guards).covered);
    EXPECT_FALSE(brute_force_min_guards(comb(), 2).min_guards.has_value());
}

TEST(BruteForce, BudgetAndPreconditions) {
    EXPECT_THROW(brute_force_min_guards(comb(), 4, 16, 3), BudgetError);
    EXPECT_THROW(brute_force_min_guards(square(), 0), PreconditionError);
}

TEST(Sampling, MobiusSmallRunIsDeterministic) {
    const auto& g = mobius_gallery();
    auto a = sample_solution_space(g, fixtures::mobius(), 2, 10, 42);
    auto b = sample_solution_space(g, fixtures::mobius(), 2, 10, 42);
    EXPECT_TRUE(a.ok());
    EXPECT_EQ(a.on_points, 12u);
    EXPECT_EQ(a.off_points, 10u);
    EXPECT_EQ(report_text(a), report_text(b));
    EXPECT_NE(report_text(a), report_text(sample_solution_space(g, fixtures::mobius(), 2, 10, 43)));
}

TEST(Sampling, RejectsForeignComplex) {
    EXPECT_THROW(sample_solution_space(mobius_gallery(), fixtures::torus(), 1, 1, 1), PreconditionError);
}

TEST(Sampling, GridVerificationOfMobius) {
    auto rep = verify_formula_grid(mobius_gallery(), 10, 10, 9);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.on_points + rep.off_points, 20u);
}
