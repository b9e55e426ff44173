#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/map_io.hpp"
#include "isolab/subgraphs.hpp"

#include <gtest/gtest.h>

using namespace isolab;

namespace {

int count_interior(const PlanarMap& m)
{
    int n = 0;
    for (char c : m.interior_mask()) n += c != 0;
    return n;
}

} // namespace

TEST(Generators, DegKVertexCounts)
{
    const int expected[] = {1, 8, 29, 85, 232, 617};
    for (int r = 1; r <= 5; ++r) {
        PlanarMap m = triangulation_deg_k(7, r);
        EXPECT_EQ(m.num_vertices(), expected[r]) << r;
        EXPECT_EQ(count_interior(m), expected[r - 1]) << r;
        for (int v = 0; v < m.num_vertices(); ++v)
            if (m.is_interior(v)) EXPECT_EQ(m.degree(v), 7);
    }
    PlanarMap flat = triangulation_deg_k(6, 4);
    for (int v = 0; v < flat.num_vertices(); ++v)
        if (flat.is_interior(v)) EXPECT_EQ(flat.degree(v), 6);
}

TEST(Generators, SquareLatticeInterior)
{
    for (int s = 2; s <= 7; ++s) {
        PlanarMap m = square_lattice(s, s);
        EXPECT_EQ(m.num_vertices(), (s + 1) * (s + 1));
        EXPECT_EQ(count_interior(m), (s - 1) * (s - 1));
        EXPECT_EQ(m.num_faces(), s * s + 1);
    }
}

TEST(Generators, ChainFirstBlock)
{
    PlanarMap m = nonnormal_chain(ChainParams{});
    SubgraphContext ctx(m);
    SubgraphView s = make_view(ctx, m.groups().at("S_1"));
    EXPECT_EQ(s.size(), 6);
    BoundaryReport b = boundaries(ctx, s);
    EXPECT_EQ(b.num_faces, 4);
    EXPECT_EQ(b.surrounding_edges.size(), 4u);
    EXPECT_EQ(b.vertex_boundary.size(), 4u);
}

TEST(Generators, LambdaGroupSize)
{
    PlanarMap g = lambda_gadget();
    EXPECT_EQ(g.num_vertices(), 5);
    LambdaParams p;
    p.schedule = {8};
    PlanarMap m = lambda_attachment(p);
    // v_1 plus four new vertices for each of its 8 faces
    EXPECT_EQ(m.groups().at("S_1").size(), 33u);
}

TEST(Generators, G1MultiedgeGroup)
{
    PlanarMap m = g1_multiedge(G1Params{});
    SubgraphContext ctx(m);
    SubgraphView s = make_view(ctx, m.groups().at("S_3"));
    BoundaryReport b = boundaries(ctx, s);
    EXPECT_EQ(b.num_faces, 8);
    EXPECT_EQ(b.surrounding_edges.size(), 4u);
}

TEST(Generators, G2CountsMatch)
{
    EXPECT_EQ(g2_region_count(1, {1}), 13);
    G2Params p;
    p.radius = 3;
    p.auto_rule = true;
    G2Certificate cert;
    PlanarMap m = g2_multiedge_lattice(p, &cert);
    EXPECT_TRUE(cert.counts_match);
    EXPECT_TRUE(cert.rule_holds);
    EXPECT_GT(m.num_vertices(), 0);
}

TEST(Generators, Deterministic)
{
    const char* spec = R"({"family":"nonnormal_chain","lo":-2,"hi":2})";
    EXPECT_EQ(map_to_json(generate_family(spec)), map_to_json(generate_family(spec)));
    EXPECT_EQ(map_to_json(g1_multiedge(G1Params{})), map_to_json(g1_multiedge(G1Params{})));
}

TEST(Generators, JsonRoundTripKeepsGroups)
{
    PlanarMap m = nonnormal_chain(ChainParams{-1, 1, 2, 7});
    PlanarMap back = map_from_json(map_to_json(m));
    EXPECT_EQ(back.groups(), m.groups());
    EXPECT_EQ(back.labels(), m.labels());
    EXPECT_EQ(back.num_faces(), m.num_faces());
}

TEST(Generators, BadFamilyThrows)
{
    EXPECT_THROW(generate_family(R"({"family":"nope"})"), Error);
    EXPECT_THROW(generate_family("not json"), Error);
}

TEST(Generators, DrawingOuterFace)
{
    // Unit square with one diagonal.
    PlanarMap m = map_from_drawing({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    EXPECT_EQ(m.num_faces(), 3);
    EXPECT_EQ(m.face_degree(m.outer_face()), 4);
}
