#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/isoperimetry.hpp"

#include <gtest/gtest.h>

using namespace isolab;

namespace {

const IsoKind kAll[] = {IsoKind::Iota, IsoKind::J, IsoKind::Kappa, IsoKind::JTilde};

} // namespace

TEST(Iso, EstimateMatchesBruteForceOnWholeInterior)
{
    for (auto m : {square_lattice(4, 4), triangulation_deg_k(7, 2), square_lattice(3, 5)}) {
        SubgraphContext ctx(m);
        int interior = 0;
        for (char c : m.interior_mask()) interior += c != 0;
        for (IsoKind k : kAll) {
            IsoEstimate e = estimate(ctx, k, interior);
            IsoEstimate b = brute_force_minimum(ctx, k, true);
            ASSERT_TRUE(e.found);
            EXPECT_EQ(e.value, b.value) << iso_kind_name(k);
            EXPECT_EQ(e.witness, b.witness) << iso_kind_name(k);
        }
    }
}

// Disjoint components of an induced subgraph add up in numerator and
// denominator, so the connected minimum is the overall minimum for iota, j
// and kappa. The outer vertex boundary can be shared, so jtilde is only reported.
TEST(Iso, ConnectedMinimaEqualAllSubsetMinima)
{
    for (auto m : {square_lattice(4, 4), triangulation_deg_k(7, 2), square_lattice(2, 6)}) {
        SubgraphContext ctx(m);
        for (IsoKind k : {IsoKind::Iota, IsoKind::J, IsoKind::Kappa}) {
            IsoEstimate conn = brute_force_minimum(ctx, k, true);
            IsoEstimate all = brute_force_minimum(ctx, k, false);
            EXPECT_EQ(conn.value, all.value) << iso_kind_name(k);
        }
        IsoEstimate jt_conn = brute_force_minimum(ctx, IsoKind::JTilde, true);
        IsoEstimate jt_all = brute_force_minimum(ctx, IsoKind::JTilde, false);
        EXPECT_LE(jt_all.value, jt_conn.value);
    }
}

TEST(Iso, LambdaGroupRatio)
{
    LambdaParams p;
    p.schedule = {8, 10};
    PlanarMap m = lambda_attachment(p);
    SubgraphContext ctx(m);
    EXPECT_EQ(ratio(ctx, IsoKind::J, make_view(ctx, m.groups().at("S_1"))), Rational(1, 33));
    EXPECT_EQ(ratio(ctx, IsoKind::J, make_view(ctx, m.groups().at("S_2"))), Rational(1, 41));
}

TEST(Iso, KappaNeedsAFace)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    try {
        ratio(ctx, IsoKind::Kappa, make_view(ctx, {12}));
        FAIL() << "expected EmptyFaceSet";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EmptyFaceSet);
    }
    EXPECT_EQ(ratio(ctx, IsoKind::Kappa, make_view(ctx, {6, 7, 11, 12})), Rational(4));
}

TEST(Iso, SimplyConnectedFamilyNeverBeatsConnected)
{
    PlanarMap m = triangulation_deg_k(7, 3);
    SubgraphContext ctx(m);
    EstimateOptions sc;
    sc.family = SearchFamily::SimplyConnected;
    for (IsoKind k : kAll) {
        IsoEstimate a = estimate(ctx, k, 6);
        IsoEstimate b = estimate(ctx, k, 6, sc);
        EXPECT_LE(a.value, b.value);
        EXPECT_LE(b.searched, a.searched);
    }
}

TEST(Iso, JTildeCompanionsHoldPointwise)
{
    PlanarMap m = triangulation_deg_k(7, 3);
    SubgraphContext ctx(m);
    JTildeReport r = jtilde_identity_check(ctx, 8);
    EXPECT_GT(r.grow_checked, 0);
    EXPECT_GT(r.shrink_checked, 0);
    EXPECT_EQ(r.grow_failed, 0);
    EXPECT_EQ(r.shrink_failed, 0);
}

TEST(Iso, DualTransferOnDeg7)
{
    DualTransferReport r = dual_transfer_check(triangulation_deg_k(7, 3), 8);
    EXPECT_GT(r.polygons, 0);
    EXPECT_EQ(r.inequality_failures, 0);
    EXPECT_EQ(r.bijection_failures, 0);
    EXPECT_TRUE(r.c2_within);
    EXPECT_TRUE(r.kappa_host.found);
    EXPECT_TRUE(r.iota_dual.found);
}

TEST(Iso, ParseKinds)
{
    EXPECT_EQ(parse_iso_kind("jtilde"), IsoKind::JTilde);
    EXPECT_EQ(parse_iso_kind("k"), IsoKind::Kappa);
    EXPECT_THROW(parse_iso_kind("x"), Error);
}
