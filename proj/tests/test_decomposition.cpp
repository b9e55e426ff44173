#include "isolab/decomposition.hpp"
#include "isolab/error.hpp"
#include "isolab/generators.hpp"

#include <gtest/gtest.h>

using namespace isolab;

TEST(Parts, SingleVertexIsOneBranch)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    auto parts = find_parts(ctx, make_view(ctx, {12}));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].kind, PartKind::Branch);
    EXPECT_TRUE(parts[0].edges.empty());
}

TEST(Parts, PathIsOneBranch)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    auto parts = find_parts(ctx, make_view(ctx, {6, 7, 8}));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].kind, PartKind::Branch);
    EXPECT_EQ(parts[0].edges.size(), 2u);
}

TEST(Parts, BowtieIsTwoLeaves)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    auto parts = find_parts(ctx, make_view(ctx, {6, 7, 11, 12, 13, 17, 18}));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].kind, PartKind::Leaf);
    EXPECT_EQ(parts[1].kind, PartKind::Leaf);
    EXPECT_EQ(parts[1].attachment, 12);
    EXPECT_EQ(parts[1].shared, 1);
}

TEST(Parts, SquareWithTail)
{
    PlanarMap m = square_lattice(5, 5);
    SubgraphContext ctx(m);
    // Unit square 7 8 13 14 plus the path 14 15 16.
    auto parts = find_parts(ctx, make_view(ctx, {7, 8, 13, 14, 15, 16}));
    ASSERT_EQ(parts.size(), 2u);
    int leaves = 0, branches = 0;
    for (const auto& p : parts) (p.kind == PartKind::Leaf ? leaves : branches)++;
    EXPECT_EQ(leaves, 1);
    EXPECT_EQ(branches, 1);
}

TEST(Parts, RingThrows)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    try {
        find_parts(ctx, make_view(ctx, {6, 7, 8, 11, 13, 16, 17, 18}));
        FAIL() << "expected NotSimplyConnected";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotSimplyConnected);
    }
}

TEST(Partition, BowtieCertified)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    Partition p = partition(ctx, make_view(ctx, {6, 7, 11, 12, 13, 17, 18}));
    EXPECT_TRUE(p.certified());
    EXPECT_TRUE(p.union_matches);
    EXPECT_LE(static_cast<int>(p.parts.size()), 2 * p.vertex_boundary);
    EXPECT_TRUE(p.tree.is_tree);
}

TEST(Partition, CertifiedOnEverySmallSimplyConnectedSet)
{
    for (auto m : {square_lattice(5, 5), triangulation_deg_k(7, 3), triangulation_deg_k(6, 3)}) {
        SubgraphContext ctx(m);
        EnumOptions o;
        o.max_vertices = 7;
        ConnectedEnumerator en(ctx, o);
        long long checked = 0;
        en.run([&](const EnumState& st) {
            SubgraphView v = make_view(ctx, st.sorted_vertices());
            if (!is_simply_connected(ctx, v)) return true;
            Partition p = partition(ctx, v);
            EXPECT_TRUE(p.certified());
            EXPECT_TRUE(p.tree.is_tree);
            GreedyReport g = greedy_report(ctx, v);
            EXPECT_TRUE(g.single_vertex_meets);
            ++checked;
            return true;
        });
        EXPECT_GT(checked, 1000);
    }
}

TEST(Partition, ConclusionBound)
{
    PlanarMap m = square_lattice(5, 5);
    SubgraphContext ctx(m);
    SubgraphView s = make_view(ctx, {7, 8, 13, 14, 15, 16});
    Partition p = partition(ctx, s);
    ConclusionReport r = certify_conclusion(ctx, p, 4);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.lhs, 6);
    EXPECT_EQ(r.rhs, (1 + 2 * p.tau) * 4 * p.vertex_boundary);
}
