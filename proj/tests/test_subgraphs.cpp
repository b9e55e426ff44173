#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/subgraphs.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace isolab;

namespace {

PlanarMap all_interior(PlanarMap m)
{
    m.set_interior_mask(std::vector<char>(m.num_vertices(), 1));
    return m;
}

PlanarMap path3()
{
    EmbeddingBuilder b;
    for (int i = 0; i < 3; ++i) b.add_vertex();
    b.rotation(0) = {1};
    b.rotation(1) = {0, 2};
    b.rotation(2) = {1};
    return all_interior(b.build(0, 1));
}

PlanarMap triangle()
{
    EmbeddingBuilder b;
    for (int i = 0; i < 3; ++i) b.add_vertex();
    b.rotation(0) = {1, 2};
    b.rotation(1) = {2, 0};
    b.rotation(2) = {0, 1};
    return all_interior(b.build(0, 1));
}

// Bitmask oracle: connected subsets of the allowed vertices.
long long brute_connected(const PlanarMap& m, int max_size)
{
    std::vector<int> pool;
    for (int v = 0; v < m.num_vertices(); ++v)
        if (m.is_interior(v)) pool.push_back(v);
    long long count = 0;
    for (uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
        if (__builtin_popcount(mask) > max_size) continue;
        std::set<int> s;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1u) s.insert(pool[i]);
        std::set<int> reached{*s.begin()};
        std::vector<int> stack{*s.begin()};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : m.neighbors(u))
                if (s.count(w) && reached.insert(w).second) stack.push_back(w);
        }
        count += reached.size() == s.size();
    }
    return count;
}

} // namespace

TEST(Enumerate, PathAndTriangleCounts)
{
    PlanarMap p = path3();
    SubgraphContext pc(p);
    EnumOptions o;
    o.max_vertices = 3;
    EXPECT_EQ(count_connected_subgraphs(pc, o), 6);
    PlanarMap t = triangle();
    SubgraphContext tc(t);
    EXPECT_EQ(count_connected_subgraphs(tc, o), 7);
}

TEST(Enumerate, MatchesBitmaskOracle)
{
    for (auto m : {square_lattice(4, 4), triangulation_deg_k(7, 2), square_lattice(3, 5)}) {
        SubgraphContext ctx(m);
        for (int cap = 1; cap <= 5; ++cap) {
            EnumOptions o;
            o.max_vertices = cap;
            EXPECT_EQ(count_connected_subgraphs(ctx, o), brute_connected(m, cap)) << "cap " << cap;
        }
    }
}

TEST(Enumerate, EachSetOnceAndRootIsMinimum)
{
    PlanarMap m = triangulation_deg_k(7, 3);
    SubgraphContext ctx(m);
    EnumOptions o;
    o.max_vertices = 5;
    ConnectedEnumerator en(ctx, o);
    std::set<std::vector<int>> seen;
    long long visits = 0;
    EnumState st(ctx);
    for (int r : en.roots())
        en.run_root(r, st, [&](const EnumState& s) {
            ++visits;
            auto v = s.sorted_vertices();
            EXPECT_EQ(v.front(), r);
            seen.insert(v);
            return true;
        });
    EXPECT_EQ(static_cast<long long>(seen.size()), visits);
}

TEST(Enumerate, CapAboveLimitThrows)
{
    PlanarMap m = square_lattice(3, 3);
    SubgraphContext ctx(m);
    EnumOptions o;
    o.max_vertices = kDefaultEnumerationCap + 1;
    try {
        ConnectedEnumerator en(ctx, o);
        FAIL() << "expected CapExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapExceeded);
    }
}

TEST(Boundaries, CenterOfGrid)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    BoundaryReport b = boundaries(ctx, make_view(ctx, {12}));
    EXPECT_EQ(b.edge_boundary.size(), 4u);
    EXPECT_EQ(b.vertex_boundary.size(), 1u);
    EXPECT_EQ(b.outer_vertex_boundary.size(), 4u);
    EXPECT_EQ(b.volume, 4);
    EXPECT_EQ(b.num_faces, 0);
}

TEST(Boundaries, UnitSquare)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    BoundaryReport b = boundaries(ctx, make_view(ctx, {6, 7, 11, 12}));
    EXPECT_EQ(b.num_faces, 1);
    EXPECT_EQ(b.num_edges, 4);
    EXPECT_EQ(b.surrounding_edges.size(), 4u);
    EXPECT_EQ(b.edge_boundary.size(), 8u);
    EXPECT_EQ(b.face_boundary.size(), 1u);
}

TEST(Boundaries, RequireInteriorThrows)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    try {
        boundaries(ctx, make_view(ctx, {0, 1}), true);
        FAIL() << "expected TouchesTruncationBoundary";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TouchesTruncationBoundary);
    }
}

TEST(Shape, RingIsNotSimplyConnectedUntilFilled)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    std::vector<int> ring{6, 7, 8, 11, 13, 16, 17, 18};
    SubgraphView s = make_view(ctx, ring);
    EXPECT_TRUE(is_connected(ctx, s));
    EXPECT_FALSE(is_simply_connected(ctx, s));
    SubgraphView f = fill_holes(ctx, s);
    EXPECT_EQ(f.size(), 9);
    EXPECT_TRUE(f.contains(12));
    EXPECT_TRUE(is_simply_connected(ctx, f));
    FaceGraphInfo info = classify_face_graph(ctx, f);
    EXPECT_TRUE(info.polygon);
}

TEST(Shape, BowtieIsAFaceGraphButNotAPolygon)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    // Two unit squares sharing the corner 12.
    FaceGraphInfo info = classify_face_graph(ctx, make_view(ctx, {6, 7, 11, 12, 13, 17, 18}));
    EXPECT_TRUE(info.face_graph);
    EXPECT_TRUE(info.simply_connected);
    EXPECT_FALSE(info.interior_connected);
    EXPECT_FALSE(info.polygon);
}

TEST(Shape, TesterAgreesWithViewPredicates)
{
    for (auto m : {square_lattice(5, 5), triangulation_deg_k(7, 3), triangulation_deg_k(6, 3)}) {
        SubgraphContext ctx(m);
        EnumOptions o;
        o.max_vertices = 6;
        ConnectedEnumerator en(ctx, o);
        ShapeTester shape(ctx);
        long long checked = 0;
        en.run([&](const EnumState& st) {
            SubgraphView v = make_view(ctx, st.sorted_vertices());
            bool sc = shape.simply_connected(st);
            EXPECT_EQ(sc, is_simply_connected(ctx, v));
            FaceGraphInfo info = classify_face_graph(ctx, v);
            EXPECT_EQ(shape.face_graph(st), info.face_graph);
            if (sc) EXPECT_EQ(shape.polygon(st), info.polygon);
            ++checked;
            return true;
        });
        EXPECT_GT(checked, 100);
    }
}

TEST(Shape, DualEdgesOfTwoAdjacentSquares)
{
    PlanarMap m = square_lattice(4, 4);
    SubgraphContext ctx(m);
    SubgraphView s = make_view(ctx, {6, 7, 8, 11, 12, 13});
    EXPECT_EQ(s.faces.size(), 2u);
    EXPECT_EQ(dual_edges(ctx, s).size(), 1u);
}

TEST(Views, RejectBadInput)
{
    PlanarMap m = square_lattice(2, 2);
    SubgraphContext ctx(m);
    EXPECT_THROW(make_view(ctx, {}), Error);
    EXPECT_THROW(make_view(ctx, {99}), Error);
    EXPECT_EQ(make_view(ctx, {4, 1, 4}).vertices, (std::vector<int>{1, 4}));
}
