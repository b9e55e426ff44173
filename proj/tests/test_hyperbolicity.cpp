#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/hyperbolicity.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace isolab;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::set<int>> nb(n);
    for (auto [a, b] : edges) {
        nb[a].insert(b);
        nb[b].insert(a);
    }
    Graph g;
    for (int v = 0; v < n; ++v) {
        for (int w : nb[v]) g.adj.push_back(w);
        g.offsets.push_back(static_cast<uint32_t>(g.adj.size()));
    }
    return g;
}

Graph cycle(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return from_edges(n, e);
}

// Distances by boolean matrix powers.
std::vector<std::vector<int>> power_distances(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
        reach[v][v] = 1;
        d[v][v] = 0;
    }
    for (int k = 1; k < n; ++k) {
        auto next = reach;
        for (int a = 0; a < n; ++a)
            for (int m = 0; m < n; ++m)
                if (reach[a][m])
                    for (const uint32_t* p = g.begin(m); p != g.end(m); ++p) next[a][*p] = 1;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (next[a][b] && d[a][b] < 0) d[a][b] = k;
        reach = std::move(next);
    }
    return d;
}

void all_geodesics(const Graph& g, const std::vector<std::vector<int>>& d, int a, int b, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out)
{
    cur.push_back(a);
    if (a == b) {
        out.push_back(cur);
    } else {
        for (const uint32_t* p = g.begin(a); p != g.end(a); ++p)
            if (d[*p][b] == d[a][b] - 1) all_geodesics(g, d, *p, b, cur, out);
    }
    cur.pop_back();
}

// Thinness by listing every geodesic explicitly.
int brute_thinness(const Graph& g)
{
    auto d = power_distances(g);
    const int n = g.num_vertices();
    std::vector<std::vector<std::vector<std::vector<int>>>> geo(n, std::vector<std::vector<std::vector<int>>>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> cur;
            all_geodesics(g, d, a, b, cur, geo[a][b]);
        }
    auto far = [&](int x, int a, int c) {
        int best = 0;
        for (const auto& path : geo[a][c]) {
            int m = 1 << 20;
            for (int y : path) m = std::min(m, d[x][y]);
            best = std::max(best, m);
        }
        return best;
    };
    int delta = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int x = 0; x < n; ++x)
                    if (d[a][x] + d[x][b] == d[a][b]) delta = std::max(delta, std::min(far(x, a, c), far(x, b, c)));
    return delta;
}

} // namespace

TEST(Metric, MatchesMatrixPowers)
{
    for (const Graph& g : {cycle(9), graph_of(square_lattice(3, 4)), graph_of(triangulation_deg_k(7, 2))}) {
        MetricTable t(g);
        auto d = power_distances(g);
        for (int a = 0; a < g.num_vertices(); ++a)
            for (int b = 0; b < g.num_vertices(); ++b) EXPECT_EQ(t(a, b), d[a][b]);
    }
}

TEST(Metric, DisconnectedThrows)
{
    Graph g = from_edges(4, {{0, 1}, {2, 3}});
    try {
        MetricTable t(g);
        FAIL() << "expected Disconnected";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Disconnected);
    }
}

TEST(Thinness, CycleOfEight)
{
    EXPECT_EQ(brute_thinness(cycle(8)), 2);
    EXPECT_EQ(thinness_all(cycle(8)).delta, 2);
}

TEST(Thinness, TreeIsZero)
{
    Graph t = from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    EXPECT_EQ(brute_thinness(t), 0);
    EXPECT_EQ(thinness_all(t).delta, 0);
}

TEST(Thinness, MatchesGeodesicListing)
{
    std::vector<Graph> gs{cycle(5), cycle(6), cycle(11), graph_of(square_lattice(2, 2)), graph_of(square_lattice(3, 3)),
                          graph_of(square_lattice(2, 5)), graph_of(triangulation_deg_k(7, 1)),
                          graph_of(triangulation_deg_k(6, 2))};
    for (const auto& g : gs) EXPECT_EQ(thinness_all(g).delta, brute_thinness(g)) << g.num_vertices();
}

TEST(Thinness, WitnessReevaluates)
{
    for (const auto& g : {graph_of(square_lattice(5, 5)), graph_of(triangulation_deg_k(7, 3))}) {
        ThinnessReport r = thinness_all(g);
        MetricTable d(g);
        EXPECT_EQ(thinness_witness_value(g, d, r.a, r.b, r.c, r.x), r.delta);
        ThinnessReport s = thinness_sampled(g, 12, 7);
        EXPECT_TRUE(s.sampled);
        EXPECT_LE(s.delta, r.delta);
    }
}

TEST(Thinness, CapExceeded)
{
    try {
        thinness_all(graph_of(square_lattice(10, 10)), 50);
        FAIL() << "expected CapExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::CapExceeded);
    }
}

TEST(Ball, SameAsGeneratedTriangulation)
{
    for (int k : {6, 7, 8})
        for (int r = 1; r <= 4; ++r) {
            std::vector<uint8_t> layer;
            Graph a = regular_triangulation_ball(k, r, &layer);
            Graph b = graph_of(triangulation_deg_k(k, r));
            ASSERT_EQ(a.num_vertices(), b.num_vertices()) << k << " " << r;
            for (int v = 0; v < a.num_vertices(); ++v) {
                std::set<uint32_t> x(a.begin(v), a.end(v)), y(b.begin(v), b.end(v));
                EXPECT_EQ(x, y) << "vertex " << v;
            }
            auto dist = bfs(a, 0);
            for (int v = 0; v < a.num_vertices(); ++v) EXPECT_EQ(dist[v], layer[v]);
        }
}

TEST(Ball, LayerSizesFollowRecurrence)
{
    std::vector<uint8_t> layer;
    Graph g = regular_triangulation_ball(7, 6, &layer);
    std::vector<long long> count(7, 0);
    for (auto l : layer) ++count[l];
    // 1, 7, 21, 56, 147, 385, 1008: a(n+1) = 3 a(n) - a(n-1)
    EXPECT_EQ(count[0], 1);
    EXPECT_EQ(count[1], 7);
    EXPECT_EQ(count[2], 21);
    for (int n = 2; n < 6; ++n) EXPECT_EQ(count[n + 1], 3 * count[n] - count[n - 1]);
}

TEST(Detour, ProbeOnDeg7)
{
    PlanarMap m = triangulation_deg_k(7, 7);
    auto probes = detour_growth(m, 0, {2, 3});
    ASSERT_EQ(probes.size(), 2u);
    for (const auto& p : probes) {
        EXPECT_EQ(p.geodesic, 2 * p.t);
        EXPECT_GE(p.detour, p.geodesic);
    }
    EXPECT_GT(probes[1].detour, probes[0].detour);
    EXPECT_THROW(detour_growth(m, 0, {8}), Error);
}

TEST(Detour, CycleGoesAround)
{
    Graph g = cycle(12);
    std::vector<char> interior(12, 1);
    auto probes = detour_growth(g, interior, 0, {2});
    ASSERT_EQ(probes.size(), 1u);
    EXPECT_EQ(probes[0].geodesic, 4);
    EXPECT_EQ(probes[0].detour, 8);
    EXPECT_EQ(probes[0].ball_size, 3);
}

TEST(Growth, ExactBound)
{
    // (1/2)(1/10)(11/10)^(1/2) = 0.0524...
    EXPECT_TRUE(growth_bound_holds(1, Rational(1, 10), 12));
    EXPECT_FALSE(growth_bound_holds(0, Rational(1, 10), 12));
    // (1/2)(1)(2)^(3) = 4 at t = 32, j = 1
    EXPECT_TRUE(growth_bound_holds(4, Rational(1), 32));
    EXPECT_FALSE(growth_bound_holds(3, Rational(1), 32));
    DetourProbe p;
    p.t = 8;
    p.detour = 100;
    try {
        growth_bound_check(true, Rational(1, 10), {p});
        FAIL() << "expected TooSmallT";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::TooSmallT);
    }
    p.t = 12;
    try {
        growth_bound_check(false, Rational(1, 10), {p});
        FAIL() << "expected NotTriangulation";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotTriangulation);
    }
    EXPECT_TRUE(growth_bound_check(true, Rational(1, 10), {p}).all_hold);
}
