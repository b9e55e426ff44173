#include "isolab/curvature.hpp"
#include "isolab/error.hpp"
#include "isolab/generators.hpp"

#include <gtest/gtest.h>

using namespace isolab;

namespace {

// psi from the face table directly: 1 - deg/2 + sum over corners of 1/deg(face).
Rational psi_oracle(const PlanarMap& m, int v)
{
    Rational r = 1 - Rational(m.degree(v), 2);
    for (int d : m.rotation(v)) r += Rational(1, m.face_degree(m.face_of(d)));
    return r;
}

} // namespace

TEST(Curvature, RegularTriangulations)
{
    PlanarMap d7 = triangulation_deg_k(7, 3);
    Curvature c7(d7);
    PlanarMap d6 = triangulation_deg_k(6, 3);
    Curvature c6(d6);
    EXPECT_EQ(c7.psi(0), Rational(-1, 6));
    EXPECT_EQ(c6.psi(0), Rational(0));
    int e = d7.edge_of(d7.rotation(0)[0]);
    EXPECT_EQ(c7.phi(e), Rational(2, 7) + Rational(2, 3) - 1);
    int f = d7.face_of(d7.rotation(0)[0]);
    EXPECT_EQ(c7.chi(f), Rational(1) - Rational(3, 2) + Rational(3, 7));
}

TEST(Curvature, PsiMatchesFaceTableOracle)
{
    for (auto m : {nonnormal_chain(ChainParams{}), lambda_attachment(LambdaParams{}), square_lattice(5, 5)}) {
        Curvature c(m, true);
        for (int v = 0; v < m.num_vertices(); ++v)
            if (m.is_interior(v)) EXPECT_EQ(c.psi(v), psi_oracle(m, v)) << v;
    }
}

TEST(Curvature, ChainMidVerticesAreFiveTwelfths)
{
    PlanarMap m = nonnormal_chain(ChainParams{});
    Curvature c(m);
    int mids = 0;
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.labels()[v].rfind("v_", 0) == 0) {
            EXPECT_EQ(c.psi(v), Rational(5, 12));
            ++mids;
        }
    // 2|n| per block, blocks n = -4..4
    EXPECT_EQ(mids, 2 * (4 + 3 + 2 + 1) * 2);
}

TEST(Curvature, NonInteriorCarrierThrows)
{
    PlanarMap m = triangulation_deg_k(7, 2);
    Curvature c(m);
    int outer_vertex = m.num_vertices() - 1;
    ASSERT_FALSE(m.is_interior(outer_vertex));
    EXPECT_THROW(c.psi(outer_vertex), Error);
}

TEST(Curvature, BallAverages)
{
    PlanarMap m = triangulation_deg_k(7, 4);
    Curvature c(m);
    auto rows = upper_average_estimate(c, CurvatureKind::Psi, {1, 2});
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].mean, Rational(-1, 6));
    EXPECT_EQ(rows[0].support_size, 8);
    EXPECT_THROW(upper_average_estimate(c, CurvatureKind::Psi, {2, 1}), Error);
    EXPECT_THROW(upper_average_estimate(c, CurvatureKind::Psi, {9}), Error);
}

TEST(Curvature, GapHoldsOnDeg7)
{
    PlanarMap m = triangulation_deg_k(7, 4);
    Curvature c(m);
    EXPECT_TRUE(curvature_gap_violations(c).empty());
}

TEST(Curvature, EulerBoundsSingleVertexNotApplicable)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    EulerBounds b = verify_euler_bounds(ctx, make_view(ctx, {12}));
    EXPECT_FALSE(b.facebound_applicable);
    EXPECT_TRUE(b.facebound_ok);
    EulerBounds sq = verify_euler_bounds(ctx, make_view(ctx, {6, 7, 11, 12}));
    EXPECT_TRUE(sq.edgenumber_applicable);
    EXPECT_EQ(sq.edgenumber_lhs, 8);
    EXPECT_EQ(sq.edgenumber_rhs, 8);
    std::vector<int> ring{6, 7, 8, 11, 13, 16, 17, 18};
    EXPECT_THROW(verify_euler_bounds(ctx, make_view(ctx, ring)), Error);
}

TEST(WitnessSearch, PrunedSearchMatchesFullEnumeration)
{
    std::vector<PlanarMap> hosts;
    LambdaParams lp;
    lp.schedule = {8};
    hosts.push_back(lambda_attachment(lp));
    G2Params g;
    g.block = 4;
    g.ell = {2};
    hosts.push_back(g2_multiedge_lattice(g));
    hosts.push_back(nonnormal_chain(ChainParams{-1, 1, 2, 6}));
    hosts.push_back(nonnormal_chain(ChainParams{-2, 2, 2, 7}));
    hosts.push_back(triangulation_deg_k(6, 3));
    for (const auto& m : hosts) {
        Curvature c(m, true);
        for (int cap = 3; cap <= 5; ++cap) {
            WitnessSearch a = upper_average_witness_search(c, cap, 3, true);
            WitnessSearch b = upper_average_witness_search(c, cap, 3, false);
            EXPECT_EQ(a.best_weight, b.best_weight) << "cap " << cap;
            // The witness really attains the weight.
            long long w = 0;
            for (int v : a.witness) w += 6 * c.psi_scaled(v) + c.psi_scale();
            EXPECT_EQ(w, a.best_weight);
            EXPECT_GE(static_cast<int>(a.witness.size()), 3);
            EXPECT_LE(static_cast<int>(a.witness.size()), cap);
        }
    }
}

TEST(WitnessSearch, ChainHoldsAtCapTwelve)
{
    PlanarMap m = nonnormal_chain(ChainParams{});
    Curvature c(m);
    WitnessSearch w = upper_average_witness_search(c, 12);
    EXPECT_TRUE(w.found);
    EXPECT_TRUE(w.all_hold());
}
