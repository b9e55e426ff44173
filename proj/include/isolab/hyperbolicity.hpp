#pragma once

#include "isolab/planar_map.hpp"
#include "isolab/rational.hpp"

#include <cstdint>
#include <vector>

namespace isolab {

// Compressed adjacency over distinct neighbors.
struct Graph {
    std::vector<uint32_t> offsets{0};
    std::vector<uint32_t> adj;

    int num_vertices() const { return static_cast<int>(offsets.size()) - 1; }
    const uint32_t* begin(int v) const { return adj.data() + offsets[v]; }
    const uint32_t* end(int v) const { return adj.data() + offsets[v + 1]; }
    int degree(int v) const { return static_cast<int>(offsets[v + 1] - offsets[v]); }
};

Graph graph_of(const PlanarMap& map);

// Ball of radius `radius` in the (3,k) tessellation, grown layer by layer in
// the same vertex order as triangulation_deg_k. layer[v] = distance to vertex 0.
Graph regular_triangulation_ball(int k, int radius, std::vector<uint8_t>* layer = nullptr);

// Unit-weight BFS; -1 for unreachable or disallowed vertices.
std::vector<int> bfs(const Graph& g, int source, const std::vector<char>* allowed = nullptr);

// All-pairs distances in bytes, rows padded to a multiple of 32.
class MetricTable {
public:
    // Throws Error{Disconnected}; Error{BadInput} when the diameter exceeds 254.
    explicit MetricTable(const Graph& g);

    int size() const { return n_; }
    int stride() const { return stride_; }
    uint8_t operator()(int a, int b) const { return d_[static_cast<size_t>(a) * stride_ + b]; }
    const uint8_t* row(int a) const { return d_.data() + static_cast<size_t>(a) * stride_; }

private:
    int n_ = 0, stride_ = 0;
    std::vector<uint8_t> d_;
};

inline constexpr int kDefaultThinnessCap = 300;

struct ThinnessReport {
    int delta = 0;
    // Worst triangle: x lies on a geodesic a-b; every choice of geodesics a-c
    // and b-c can be kept at distance >= delta from x.
    int a = -1, b = -1, c = -1, x = -1;
    bool sampled = false;
    long long triangles = 0; // (c, {a,b}) combinations scanned
};

// Vertex thinness over every triangle and every choice of geodesic sides.
// Throws Error{CapExceeded} when |V| > cap.
ThinnessReport thinness_all(const Graph& g, int cap = kDefaultThinnessCap);
ThinnessReport thinness_all(const PlanarMap& map, int cap = kDefaultThinnessCap);

// Triangles on k random vertices (seeded) with one canonical geodesic per side
// (smallest-id next step). Never exceeds thinness_all on the same host.
ThinnessReport thinness_sampled(const Graph& g, int k, uint64_t seed);

// max over geodesics gamma from a to c of d(x, gamma), by direct recursion.
int farthest_geodesic_distance(const Graph& g, const MetricTable& d, int a, int c, int x);

// Re-evaluates a witness of thinness_all: min of the two farthest distances,
// or -1 when x is not on a geodesic a-b.
int thinness_witness_value(const Graph& g, const MetricTable& d, int a, int b, int c, int x);

struct DetourProbe {
    int t = 0;
    int center = -1;
    int a = -1, b = -1;            // d(a, center) = d(b, center) = t, d(a, b) = 2t
    long long geodesic = 0;        // d(a, b)
    long long detour = -1;         // shortest a-b path avoiding the open ball d(center, .) < t
    long long ball_size = 0;
};

// Throws Error{BallTouchesTruncationBoundary} when the open ball meets a
// non-interior vertex, Error{NoDetourExists} when no such pair or path exists.
std::vector<DetourProbe> detour_growth(const Graph& g, const std::vector<char>& interior, int center,
                                       const std::vector<int>& t_values);
std::vector<DetourProbe> detour_growth(const PlanarMap& map, int center, const std::vector<int>& t_values);

struct GrowthCheck {
    int t = 0;
    long long detour = 0;
    double bound = 0;  // display only; the comparison is exact
    double margin = 0; // detour - bound, display only
    bool holds = false;
};

struct GrowthReport {
    Rational j_lower;
    std::vector<GrowthCheck> checks;
    bool all_hold = true;
};

// detour >= (1/2) j (1+j)^(t/8 - 1), compared exactly through integer powers.
// Throws Error{NotTriangulation} unless triangulation is set, Error{TooSmallT} for t < 12.
GrowthReport growth_bound_check(bool triangulation, const Rational& j_lower, const std::vector<DetourProbe>& probes);
GrowthReport growth_bound_check(const PlanarMap& host, const Rational& j_lower, const std::vector<DetourProbe>& probes);

// Exact test of L >= (1/2) j (1+j)^(t/8 - 1).
bool growth_bound_holds(long long length, const Rational& j, int t);

} // namespace isolab
