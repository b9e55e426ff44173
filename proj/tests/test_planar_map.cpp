#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/map_io.hpp"
#include "isolab/planar_map.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>

using namespace isolab;

namespace {

PlanarMap k4()
{
    // Center 3 inside triangle 0 1 2 (counterclockwise).
    EmbeddingBuilder b;
    for (int i = 0; i < 4; ++i) b.add_vertex();
    b.rotation(0) = {1, 3, 2};
    b.rotation(1) = {2, 3, 0};
    b.rotation(2) = {0, 3, 1};
    b.rotation(3) = {0, 1, 2};
    return b.build(0, 1);
}

PlanarMap triangle()
{
    EmbeddingBuilder b;
    for (int i = 0; i < 3; ++i) b.add_vertex();
    b.rotation(0) = {1, 2};
    b.rotation(1) = {2, 0};
    b.rotation(2) = {0, 1};
    return b.build(0, 1);
}

} // namespace

TEST(PlanarMap, K4HasFourTriangles)
{
    PlanarMap m = k4();
    EXPECT_EQ(m.num_vertices(), 4);
    EXPECT_EQ(m.num_edges(), 6);
    EXPECT_EQ(m.num_faces(), 4);
    for (int f = 0; f < m.num_faces(); ++f) EXPECT_EQ(m.face_degree(f), 3);
    Classification c = classify(m);
    EXPECT_TRUE(c.simple);
    EXPECT_TRUE(c.normal);
}

TEST(PlanarMap, FaceWalkFollowsRotation)
{
    PlanarMap m = k4();
    for (int d = 0; d < m.num_darts(); ++d) {
        EXPECT_EQ(m.twin(m.twin(d)), d);
        EXPECT_EQ(m.face_of(m.face_next(d)), m.face_of(d));
        EXPECT_EQ(m.origin(m.face_next(d)), m.head(d));
    }
}

TEST(PlanarMap, TriangleDualHasTripleEdge)
{
    PlanarMap m = triangle();
    EXPECT_EQ(m.num_faces(), 2);
    DualMap d = dual(m);
    EXPECT_EQ(d.map.num_vertices(), 2);
    EXPECT_EQ(d.map.num_edges(), 3);
    EXPECT_FALSE(classify(d.map).simple);
}

TEST(PlanarMap, GridDoubleDualIsIsomorphic)
{
    PlanarMap m = square_lattice(3, 3);
    EXPECT_EQ(m.num_faces(), 10);
    PlanarMap dd = dual(dual(m).map).map;
    EXPECT_TRUE(isomorphic(m, dd));
    EXPECT_FALSE(isomorphic(m, square_lattice(2, 4)));
}

TEST(PlanarMap, LatticeOuterFaceIsTheBoundaryWalk)
{
    PlanarMap m = square_lattice(2, 2);
    EXPECT_EQ(m.face_degree(m.outer_face()), 8);
    int interior = 0;
    for (int v = 0; v < m.num_vertices(); ++v) interior += m.is_interior(v);
    EXPECT_EQ(interior, 1);
    EXPECT_TRUE(m.is_interior(4));
}

TEST(PlanarMap, JsonRoundTrip)
{
    PlanarMap m = nonnormal_chain(ChainParams{-1, 1, 1, 7});
    PlanarMap back = map_from_json(map_to_json(m));
    EXPECT_TRUE(isomorphic(m, back));
    EXPECT_EQ(back.interior_mask(), m.interior_mask());
    EXPECT_EQ(back.labels(), m.labels());
    EXPECT_EQ(back.groups(), m.groups());
    EXPECT_EQ(map_to_json(back), map_to_json(m));
}

TEST(PlanarMap, RejectsBrokenTwins)
{
    std::vector<std::vector<int>> rot{{0}, {1}};
    try {
        PlanarMap::build(rot, {0, 0}, 0);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NonInvolutiveTwin);
    }
}

TEST(PlanarMap, BuilderRejectsUnmirroredEdge)
{
    EmbeddingBuilder b;
    b.add_vertex();
    b.add_vertex();
    b.rotation(0) = {1};
    EXPECT_THROW(b.build(0, 1), Error);
}

TEST(PlanarMap, GridDistancesAreManhattan)
{
    PlanarMap m = square_lattice(4, 3);
    auto d = bfs_distances(m, 0);
    for (int y = 0; y <= 3; ++y)
        for (int x = 0; x <= 4; ++x) EXPECT_EQ(d[y * 5 + x], x + y);
}

TEST(PlanarMap, DefaultInteriorIsOffTheOuterWalk)
{
    PlanarMap m = square_lattice(3, 3);
    nlohmann::json j = nlohmann::json::parse(map_to_json(m));
    j.erase("interior");
    PlanarMap back = map_from_json(j.dump());
    EXPECT_FALSE(back.has_explicit_interior());
    EXPECT_EQ(back.interior_mask(), m.interior_mask());
    int interior = 0;
    for (char c : back.interior_mask()) interior += c != 0;
    EXPECT_EQ(interior, 4);
}
