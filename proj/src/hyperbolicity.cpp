#include "isolab/hyperbolicity.hpp"

#include "isolab/error.hpp"
#include "isolab/kernels.hpp"
#include "isolab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>

namespace isolab {

Graph graph_of(const PlanarMap& map)
{
    Graph g;
    const int n = map.num_vertices();
    g.offsets.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> ns = map.neighbors(v);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        ns.erase(std::remove(ns.begin(), ns.end(), v), ns.end());
        for (int w : ns) g.adj.push_back(static_cast<uint32_t>(w));
        g.offsets[v + 1] = static_cast<uint32_t>(g.adj.size());
    }
    return g;
}

namespace {

// Layered growth of the (3,k) ball with fixed adjacency slots; mirrors the
// planar-map generator so vertex ids agree.
struct SlotBall {
    int k;
    bool store;
    std::vector<uint8_t> deg, layer;
    std::vector<uint32_t> slots;

    uint32_t add(int lay)
    {
        deg.push_back(0);
        layer.push_back(static_cast<uint8_t>(lay));
        if (store) slots.resize(slots.size() + k);
        return static_cast<uint32_t>(deg.size() - 1);
    }
    void link(uint32_t a, uint32_t b)
    {
        if (deg[a] >= k || deg[b] >= k) throw Error(Errc::BadInput, "degree overflow in tessellation ball");
        if (store) {
            slots[static_cast<size_t>(a) * k + deg[a]] = b;
            slots[static_cast<size_t>(b) * k + deg[b]] = a;
        }
        ++deg[a];
        ++deg[b];
    }
    void run(int radius, size_t reserve)
    {
        deg.reserve(reserve);
        layer.reserve(reserve);
        if (store) slots.reserve(reserve * k);
        uint32_t c = add(0);
        std::vector<uint32_t> walk;
        for (int j = 0; j < k; ++j) walk.push_back(add(1));
        for (int j = 0; j < k; ++j) link(c, walk[j]);
        for (int j = 0; j < k; ++j) link(walk[j], walk[(j + 1) % k]);
        std::vector<int> r;
        for (int lay = 2; lay <= radius; ++lay) {
            const size_t m = walk.size();
            r.assign(m, 0);
            for (size_t i = 0; i < m; ++i) {
                r[i] = k - deg[walk[i]];
                if (r[i] < 1) throw Error(Errc::BadInput, "vertex cannot reach its target degree");
            }
            if (r[m - 1] == 1 && std::any_of(r.begin(), r.end(), [](int v) { return v > 1; })) {
                size_t shift = 0;
                while (r[(m - 1 + shift) % m] == 1) ++shift;
                std::rotate(walk.begin(), walk.begin() + shift, walk.end());
                std::rotate(r.begin(), r.begin() + shift, r.end());
            }
            uint32_t s0 = add(lay);
            std::vector<uint32_t> ring{s0};
            uint32_t first = s0;
            for (size_t i = 0; i < m; ++i) {
                link(walk[i], first);
                for (int t = 1; t < r[i]; ++t) {
                    uint32_t y = (i == m - 1 && t == r[i] - 1) ? s0 : add(lay);
                    link(walk[i], y);
                    if (y != s0) ring.push_back(y);
                    first = y;
                }
            }
            if (first != s0) throw Error(Errc::BadInput, "layer does not close");
            const size_t len = ring.size();
            for (size_t j = 0; j < len; ++j) link(ring[j], ring[(j + 1) % len]);
            walk = std::move(ring);
        }
    }
};

} // namespace

Graph regular_triangulation_ball(int k, int radius, std::vector<uint8_t>* layer)
{
    if (k < 6) throw Error(Errc::BadInput, "k must be >= 6");
    if (radius < 1 || radius > 250) throw Error(Errc::BadInput, "radius out of range");
    SlotBall count{k, false, {}, {}, {}};
    count.run(radius, 0);
    const size_t n = count.deg.size();
    if (n >= (1ULL << 31) / static_cast<size_t>(k)) throw Error(Errc::BadInput, "tessellation ball too large");
    count = {};
    SlotBall ball{k, true, {}, {}, {}};
    ball.run(radius, n);

    Graph g;
    g.offsets.assign(n + 1, 0);
    for (size_t v = 0; v < n; ++v) g.offsets[v + 1] = g.offsets[v] + ball.deg[v];
    // Compact in place: every target index is at or before its source.
    for (size_t v = 0; v < n; ++v)
        std::copy_n(ball.slots.begin() + static_cast<std::ptrdiff_t>(v * k), ball.deg[v],
                    ball.slots.begin() + g.offsets[v]);
    ball.slots.resize(g.offsets[n]);
    g.adj = std::move(ball.slots);
    for (size_t v = 0; v < n; ++v) std::sort(g.adj.begin() + g.offsets[v], g.adj.begin() + g.offsets[v + 1]);
    if (layer) *layer = std::move(ball.layer);
    return g;
}

std::vector<int> bfs(const Graph& g, int source, const std::vector<char>* allowed)
{
    const int n = g.num_vertices();
    std::vector<int> dist(n, -1);
    if (allowed && !(*allowed)[source]) return dist;
    std::vector<uint32_t> queue;
    queue.reserve(1024);
    queue.push_back(static_cast<uint32_t>(source));
    dist[source] = 0;
    for (size_t h = 0; h < queue.size(); ++h) {
        uint32_t u = queue[h];
        for (const uint32_t* p = g.begin(u); p != g.end(u); ++p) {
            uint32_t w = *p;
            if (dist[w] >= 0 || (allowed && !(*allowed)[w])) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

MetricTable::MetricTable(const Graph& g) : n_(g.num_vertices())
{
    stride_ = (n_ + 31) / 32 * 32;
    d_.assign(static_cast<size_t>(n_) * stride_, 0);
    std::atomic<bool> disconnected{false}, too_far{false};
    parallel_for(n_, [&](int, int s) {
        auto dist = bfs(g, s);
        uint8_t* row = d_.data() + static_cast<size_t>(s) * stride_;
        for (int v = 0; v < n_; ++v) {
            if (dist[v] < 0) disconnected = true;
            else if (dist[v] > 254) too_far = true;
            else row[v] = static_cast<uint8_t>(dist[v]);
        }
    });
    if (disconnected) throw Error(Errc::Disconnected, "host is disconnected");
    if (too_far) throw Error(Errc::BadInput, "diameter exceeds 254");
}

namespace {

// W[a][x] = max over geodesics a -> c of the distance from x to the geodesic.
void fill_farthest(const Graph& g, const MetricTable& d, int c, const std::vector<std::vector<int>>& by_dist,
                   std::vector<uint8_t>& w)
{
    const int stride = d.stride();
    const size_t n = static_cast<size_t>(d.size());
    std::copy_n(d.row(c), stride, w.data() + static_cast<size_t>(c) * stride);
    for (size_t k = 1; k < by_dist.size(); ++k)
        for (int a : by_dist[k]) {
            uint8_t* wa = w.data() + static_cast<size_t>(a) * stride;
            std::fill_n(wa, stride, 0);
            for (const uint32_t* p = g.begin(a); p != g.end(a); ++p)
                if (d(c, *p) + 1 == d(c, a)) kernels::max_into(wa, w.data() + static_cast<size_t>(*p) * stride, n);
            kernels::min_into(wa, d.row(a), n);
        }
}

std::vector<std::vector<int>> layers_from(const MetricTable& d, int c)
{
    std::vector<std::vector<int>> by;
    for (int v = 0; v < d.size(); ++v) {
        int k = d(c, v);
        if (static_cast<int>(by.size()) <= k) by.resize(k + 1);
        by[k].push_back(v);
    }
    return by;
}

} // namespace

ThinnessReport thinness_all(const Graph& g, int cap)
{
    const int n = g.num_vertices();
    if (n > cap) throw Error(Errc::CapExceeded, std::to_string(n) + " vertices exceed the thinness cap " + std::to_string(cap));
    MetricTable d(g);
    const int stride = d.stride();
    const int workers = worker_count();
    std::vector<std::vector<uint8_t>> buf(workers);
    std::atomic<int> best{0};
    std::atomic<long long> scanned{0};
    parallel_for(n, [&](int wk, int c) {
        auto& w = buf[wk];
        w.resize(static_cast<size_t>(n) * stride);
        fill_farthest(g, d, c, layers_from(d, c), w);
        long long local = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                const uint8_t dab = d(a, b);
                if (dab / 2 <= best.load(std::memory_order_relaxed)) continue;
                ++local;
                int val = kernels::interval_max_min(w.data() + static_cast<size_t>(a) * stride,
                                                    w.data() + static_cast<size_t>(b) * stride, d.row(a), d.row(b), dab,
                                                    static_cast<size_t>(n));
                int cur = best.load();
                while (val > cur && !best.compare_exchange_weak(cur, val)) {
                }
            }
        scanned += local;
    });

    ThinnessReport r;
    r.delta = best.load();
    r.triangles = scanned.load();
    // Deterministic witness: smallest (c, a, b, x) attaining delta.
    std::vector<uint8_t> w(static_cast<size_t>(n) * stride);
    for (int c = 0; c < n && r.c < 0; ++c) {
        fill_farthest(g, d, c, layers_from(d, c), w);
        for (int a = 0; a < n && r.c < 0; ++a)
            for (int b = a + 1; b < n; ++b) {
                const uint8_t dab = d(a, b);
                if (dab / 2 < r.delta) continue;
                const uint8_t* wa = w.data() + static_cast<size_t>(a) * stride;
                const uint8_t* wb = w.data() + static_cast<size_t>(b) * stride;
                if (kernels::interval_max_min(wa, wb, d.row(a), d.row(b), dab, static_cast<size_t>(n)) != r.delta)
                    continue;
                for (int x = 0; x < n; ++x)
                    if (d(a, x) + d(x, b) == dab && std::min(wa[x], wb[x]) == r.delta) {
                        r.a = a;
                        r.b = b;
                        r.c = c;
                        r.x = x;
                        break;
                    }
                break;
            }
    }
    return r;
}

ThinnessReport thinness_all(const PlanarMap& map, int cap) { return thinness_all(graph_of(map), cap); }

namespace {

std::vector<int> canonical_geodesic(const Graph& g, const MetricTable& d, int a, int b)
{
    std::vector<int> path{a};
    int cur = a;
    while (cur != b) {
        int next = -1;
        for (const uint32_t* p = g.begin(cur); p != g.end(cur); ++p)
            if (d(static_cast<int>(*p), b) + 1 == d(cur, b) && (next < 0 || static_cast<int>(*p) < next))
                next = static_cast<int>(*p);
        cur = next;
        path.push_back(cur);
    }
    return path;
}

} // namespace

ThinnessReport thinness_sampled(const Graph& g, int k, uint64_t seed)
{
    const int n = g.num_vertices();
    MetricTable d(g);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> pick;
    std::mt19937_64 rng(seed);
    std::sample(all.begin(), all.end(), std::back_inserter(pick), std::min(k, n), rng);
    std::sort(pick.begin(), pick.end());
    ThinnessReport r;
    r.sampled = true;
    auto dist_to = [&](int x, const std::vector<int>& path) {
        int best = 255;
        for (int y : path) best = std::min<int>(best, d(x, y));
        return best;
    };
    const int m = static_cast<int>(pick.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int l = j + 1; l < m; ++l) {
                int t[3] = {pick[i], pick[j], pick[l]};
                std::vector<int> side[3] = {canonical_geodesic(g, d, t[0], t[1]), canonical_geodesic(g, d, t[1], t[2]),
                                            canonical_geodesic(g, d, t[0], t[2])};
                ++r.triangles;
                for (int s = 0; s < 3; ++s)
                    for (int x : side[s]) {
                        int v = std::min(dist_to(x, side[(s + 1) % 3]), dist_to(x, side[(s + 2) % 3]));
                        if (v > r.delta || r.x < 0) {
                            r.delta = std::max(r.delta, v);
                            r.a = side[s].front();
                            r.b = side[s].back();
                            r.c = t[0] + t[1] + t[2] - r.a - r.b;
                            r.x = x;
                        }
                    }
            }
    return r;
}

int farthest_geodesic_distance(const Graph& g, const MetricTable& d, int a, int c, int x)
{
    std::vector<int> memo(g.num_vertices(), -1);
    auto rec = [&](auto&& self, int v) -> int {
        if (memo[v] >= 0) return memo[v];
        int best = -1;
        if (v == c) best = d(c, x);
        else {
            for (const uint32_t* p = g.begin(v); p != g.end(v); ++p)
                if (d(static_cast<int>(*p), c) + 1 == d(v, c)) best = std::max(best, self(self, static_cast<int>(*p)));
            best = std::min<int>(best, d(v, x));
        }
        return memo[v] = best;
    };
    return rec(rec, a);
}

int thinness_witness_value(const Graph& g, const MetricTable& d, int a, int b, int c, int x)
{
    if (d(a, x) + d(x, b) != d(a, b)) return -1;
    return std::min(farthest_geodesic_distance(g, d, a, c, x), farthest_geodesic_distance(g, d, b, c, x));
}

std::vector<DetourProbe> detour_growth(const Graph& g, const std::vector<char>& interior, int center,
                                       const std::vector<int>& t_values)
{
    const int n = g.num_vertices();
    if (center < 0 || center >= n) throw Error(Errc::BadInput, "center out of range");
    auto dz = bfs(g, center);
    std::vector<DetourProbe> out;
    for (int t : t_values) {
        if (t < 1) throw Error(Errc::BadInput, "t must be positive");
        DetourProbe pr;
        pr.t = t;
        pr.center = center;
        std::vector<uint64_t> ball((n + 63) / 64, 0);
        for (int v = 0; v < n; ++v)
            if (dz[v] >= 0 && dz[v] < t) {
                if (!interior[v])
                    throw Error(Errc::BallTouchesTruncationBoundary,
                                "ball of radius " + std::to_string(t) + " meets the truncation frontier");
                ball[v / 64] |= 1ULL << (v % 64);
            }
        pr.ball_size = static_cast<long long>(kernels::popcount(ball.data(), ball.size()));
        for (int v = 0; v < n && pr.a < 0; ++v)
            if (dz[v] == t) pr.a = v;
        if (pr.a < 0) throw Error(Errc::NoDetourExists, "no vertex at distance " + std::to_string(t));
        auto da = bfs(g, pr.a);
        for (int v = 0; v < n; ++v)
            if (dz[v] == t && da[v] == 2 * t) {
                pr.b = v;
                break;
            }
        if (pr.b < 0) throw Error(Errc::NoDetourExists, "no pair at distance 2t through the center");
        pr.geodesic = da[pr.b];
        std::vector<char> allowed(n);
        for (int v = 0; v < n; ++v) allowed[v] = dz[v] >= t;
        auto dd = bfs(g, pr.a, &allowed);
        if (dd[pr.b] < 0) throw Error(Errc::NoDetourExists, "the ball separates the endpoints");
        pr.detour = dd[pr.b];
        out.push_back(pr);
    }
    return out;
}

std::vector<DetourProbe> detour_growth(const PlanarMap& map, int center, const std::vector<int>& t_values)
{
    return detour_growth(graph_of(map), map.interior_mask(), center, t_values);
}

bool growth_bound_holds(long long length, const Rational& j, int t)
{
    if (j < 0) throw Error(Errc::BadInput, "negative isoperimetric lower bound");
    if (j == 0) return length >= 0;
    // (2L/j)^Q >= (1+j)^P with P/Q = (t-8)/8 in lowest terms.
    int num = t - 8, den = 8;
    int gd = std::gcd(std::abs(num), den);
    num /= gd;
    den /= gd;
    BigInt p = boost::multiprecision::numerator(j), q = boost::multiprecision::denominator(j);
    BigInt lhs = pow(BigInt(2 * length) * q, den);
    BigInt rhs = pow(p, den);
    if (num >= 0) {
        lhs *= pow(q, num);
        rhs *= pow(p + q, num);
    } else {
        lhs *= pow(p + q, -num);
        rhs *= pow(q, -num);
    }
    return lhs >= rhs;
}

GrowthReport growth_bound_check(bool triangulation, const Rational& j_lower, const std::vector<DetourProbe>& probes)
{
    if (!triangulation) throw Error(Errc::NotTriangulation, "growth bound needs a simple triangulation");
    GrowthReport rep;
    rep.j_lower = j_lower;
    const double j = j_lower.convert_to<double>();
    for (const auto& pr : probes) {
        if (pr.t < 12) throw Error(Errc::TooSmallT, "growth bound requires t >= 12");
        GrowthCheck c;
        c.t = pr.t;
        c.detour = pr.detour;
        c.bound = 0.5 * j * std::pow(1.0 + j, pr.t / 8.0 - 1.0);
        c.margin = static_cast<double>(pr.detour) - c.bound;
        c.holds = pr.detour >= 0 && growth_bound_holds(pr.detour, j_lower, pr.t);
        if (!c.holds) rep.all_hold = false;
        rep.checks.push_back(c);
    }
    return rep;
}

GrowthReport growth_bound_check(const PlanarMap& host, const Rational& j_lower, const std::vector<DetourProbe>& probes)
{
    Classification cl = classify(host);
    bool tri = cl.simple;
    for (int f = 0; f < host.num_faces(); ++f)
        if (host.is_bounded(f) && host.face_degree(f) != 3) tri = false;
    return growth_bound_check(tri, j_lower, probes);
}

} // namespace isolab
