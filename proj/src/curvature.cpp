#include "isolab/curvature.hpp"

#include "isolab/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <queue>
#include <limits>
#include <functional>

namespace isolab {

std::string kind_name(CurvatureKind k)
{
    switch (k) {
    case CurvatureKind::Phi: return "phi";
    case CurvatureKind::Psi: return "psi";
    case CurvatureKind::Chi: return "chi";
    case CurvatureKind::Chi1: return "chi1";
    }
    return "?";
}

CurvatureKind parse_curvature_kind(const std::string& s)
{
    if (s == "phi") return CurvatureKind::Phi;
    if (s == "psi") return CurvatureKind::Psi;
    if (s == "chi") return CurvatureKind::Chi;
    if (s == "chi1") return CurvatureKind::Chi1;
    throw Error(Errc::BadFlags, "unknown curvature kind " + s);
}

Curvature::Curvature(const PlanarMap& map, bool allow_violation) : map_(&map)
{
    if (!allow_violation && !satisfies_standing_assumption(classify(map)))
        throw Error(Errc::AssumptionViolated, "host is not simple/dual simple with degrees >= 3");
    // Common denominator: lcm(2, degrees of faces at interior vertices).
    long long l = 2;
    for (int v = 0; v < map.num_vertices(); ++v) {
        if (!map.is_interior(v)) continue;
        for (int d : map.rotation(v)) {
            l = std::lcm(l, static_cast<long long>(map.face_degree(map.face_of(d))));
            if (l > (1LL << 40)) throw Error(Errc::BadInput, "curvature denominators too large");
        }
    }
    scale_ = l;
    psi_scaled_.assign(map.num_vertices(), 0);
    for (int v = 0; v < map.num_vertices(); ++v) {
        if (!map.is_interior(v)) continue;
        long long s = l - l / 2 * map.degree(v);
        for (int d : map.rotation(v)) s += l / map.face_degree(map.face_of(d));
        psi_scaled_[v] = s;
    }
}

bool Curvature::edge_interior(int e) const
{
    int d = map_->edge_dart(e);
    return map_->is_interior(map_->origin(d)) && map_->is_interior(map_->head(d));
}

bool Curvature::face_interior(int f) const { return map_->is_interior_face(f); }

Rational Curvature::phi(int e) const
{
    if (e < 0 || e >= map_->num_edges()) throw Error(Errc::BadInput, "edge id out of range");
    if (!edge_interior(e)) throw Error(Errc::NotInterior, "edge " + std::to_string(e) + " is not interior");
    int d = map_->edge_dart(e);
    return Rational(1, map_->degree(map_->origin(d))) + Rational(1, map_->degree(map_->head(d))) +
           Rational(1, map_->face_degree(map_->face_of(d))) +
           Rational(1, map_->face_degree(map_->face_of(map_->twin(d)))) - 1;
}

Rational Curvature::psi(int v) const
{
    if (v < 0 || v >= map_->num_vertices()) throw Error(Errc::BadInput, "vertex id out of range");
    if (!map_->is_interior(v)) throw Error(Errc::NotInterior, "vertex " + std::to_string(v) + " is not interior");
    return Rational(psi_scaled_[v], scale_);
}

Rational Curvature::chi(int f) const
{
    if (f < 0 || f >= map_->num_faces()) throw Error(Errc::BadInput, "face id out of range");
    if (!face_interior(f)) throw Error(Errc::NotInterior, "face " + std::to_string(f) + " is not interior");
    Rational r = 1 - Rational(map_->face_degree(f), 2);
    for (int w : map_->faces().vertices[f]) r += Rational(1, map_->degree(w));
    return r;
}

AverageReport average(const Curvature& c, CurvatureKind kind, const std::vector<int>& carriers)
{
    if (carriers.empty()) throw Error(Errc::EmptySet, "average over an empty carrier set");
    AverageReport r;
    Rational sum = 0;
    for (int x : carriers) {
        switch (kind) {
        case CurvatureKind::Phi: sum += c.phi(x); break;
        case CurvatureKind::Psi: sum += c.psi(x); break;
        case CurvatureKind::Chi:
        case CurvatureKind::Chi1: sum += c.chi(x); break;
        }
    }
    r.support_size = static_cast<int>(carriers.size());
    r.mean = sum / r.support_size;
    r.witness = carriers;
    return r;
}

int default_center(const PlanarMap& map)
{
    auto tagged = map.find_label("center");
    if (!tagged.empty()) return tagged.front();
    // Multi-source BFS from the non-interior vertices.
    std::vector<int> dist(map.num_vertices(), -1);
    std::deque<int> q;
    for (int v = 0; v < map.num_vertices(); ++v)
        if (!map.is_interior(v)) {
            dist[v] = 0;
            q.push_back(v);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : map.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    int best = -1;
    for (int v = 0; v < map.num_vertices(); ++v)
        if (map.is_interior(v) && (best < 0 || dist[v] > dist[best])) best = v;
    if (best < 0) throw Error(Errc::EmptySet, "host has no interior vertex");
    return best;
}

std::vector<AverageReport> upper_average_estimate(const Curvature& c, CurvatureKind kind,
                                                  const std::vector<int>& radii, int center)
{
    const PlanarMap& map = c.map();
    if (center < 0) center = default_center(map);
    for (size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1]) throw Error(Errc::BadInput, "radii must be increasing");
    auto dist = bfs_distances(map, center);
    SubgraphContext ctx(map);
    std::vector<AverageReport> out;
    for (int r : radii) {
        std::vector<int> ball;
        for (int v = 0; v < map.num_vertices(); ++v)
            if (dist[v] >= 0 && dist[v] <= r) ball.push_back(v);
        // Carriers of the ball must have complete stars.
        for (int v : ball)
            if (!map.is_interior(v))
                throw Error(Errc::RadiusExceedsInterior, "ball of radius " + std::to_string(r) + " leaves the interior");
        SubgraphView s = make_view(ctx, ball);
        std::vector<int> carriers;
        switch (kind) {
        case CurvatureKind::Psi: carriers = s.vertices; break;
        case CurvatureKind::Phi: carriers = s.edges; break;
        case CurvatureKind::Chi: carriers = s.faces; break;
        case CurvatureKind::Chi1: {
            SubgraphView filled = fill_holes(ctx, s);
            if (classify_face_graph(ctx, filled).polygon) carriers = filled.faces;
            break;
        }
        }
        if (carriers.empty()) throw Error(Errc::EmptySet, "ball of radius " + std::to_string(r) + " has no carriers");
        out.push_back(average(c, kind, carriers));
    }
    return out;
}

EulerBounds verify_euler_bounds(const SubgraphContext& ctx, const SubgraphView& s)
{
    if (!is_simply_connected(ctx, s)) throw Error(Errc::PreconditionNotMet, "subgraph is not simply connected");
    BoundaryReport b = boundaries(ctx, s, false);
    EulerBounds r;
    r.edges = b.num_edges;
    r.facebound_rhs = 2LL * static_cast<long long>(b.vertex_boundary.size()) + 3LL * b.num_faces - 3;
    r.facebound_applicable = b.num_vertices >= 2;
    r.facebound_ok = !r.facebound_applicable || r.edges <= r.facebound_rhs;
    r.edgenumber_applicable = classify_face_graph(ctx, s).polygon;
    if (r.edgenumber_applicable) {
        r.edgenumber_lhs = 2LL * b.num_edges;
        long long sum = 0;
        for (int f : s.faces) sum += ctx.map().face_degree(f);
        r.edgenumber_rhs = sum + static_cast<long long>(b.surrounding_edges.size());
        r.edgenumber_ok = r.edgenumber_lhs == r.edgenumber_rhs;
    }
    return r;
}

WitnessSearch upper_average_witness_search(const Curvature& c, int cap, int min_size, bool prune)
{
    const PlanarMap& map = c.map();
    const int n = map.num_vertices();
    if (cap > kDefaultEnumerationCap) throw Error(Errc::CapExceeded, "witness search cap above enumeration cap");
    SubgraphContext ctx(map);
    WitnessSearch out;
    out.cap = cap;
    out.min_size = min_size = std::max(min_size, 1);
    if (min_size > cap) return out;

    std::vector<long long> w(n, 0);
    std::vector<char> positive(n, 0);
    long long wmax = 0;
    for (int v = 0; v < n; ++v) {
        if (!map.is_interior(v)) continue;
        w[v] = 6 * c.psi_scaled(v) + c.psi_scale();
        positive[v] = w[v] > 0;
        wmax = std::max(wmax, w[v]);
    }
    auto offer = [&](long long total, std::vector<int> verts) {
        if (!out.found || total > out.best_weight || (total == out.best_weight && lex_less(verts, out.witness))) {
            out.found = true;
            out.best_weight = total;
            out.witness = std::move(verts);
        }
    };

    // Every set of size min_size.
    EnumOptions eo;
    eo.max_vertices = prune ? min_size : cap;
    eo.min_vertices = prune ? min_size : 1;
    ConnectedEnumerator en(ctx, eo);
    en.run([&](const EnumState& s) {
        ++out.visited;
        if (s.size() < min_size) return true;
        long long total = 0;
        for (int v : s.vertices()) total += w[v];
        offer(total, s.sorted_vertices());
        return true;
    });
    if (!prune || min_size == cap) return out;

    // A larger set can shed non-positive vertices that are not cut vertices,
    // and non-positive pendant parts, without losing weight. What is left
    // (if still larger than min_size) is a union of paths whose ends are
    // positive: grow those from the smallest positive vertex, a path of
    // non-positive vertices plus a positive end at a time.
    std::vector<int> hops(n, -1);     // non-positive vertices needed to reach a positive
    std::vector<long long> cost(n);   // least weight lost on the way
    {
        std::deque<int> q;
        for (int v = 0; v < n; ++v)
            if (positive[v]) {
                hops[v] = 0;
                q.push_back(v);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int x : ctx.distinct_neighbors(u))
                if (map.is_interior(x) && hops[x] < 0) {
                    hops[x] = positive[u] ? 0 : hops[u] + 1;
                    if (!positive[x]) q.push_back(x);
                }
        }
        // hops[x] for non-positive x: interior vertices strictly between x and a positive.
        std::vector<long long> dist(n, std::numeric_limits<long long>::max());
        using Item = std::pair<long long, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        for (int v = 0; v < n; ++v)
            if (positive[v])
                for (int x : ctx.distinct_neighbors(v))
                    if (map.is_interior(x) && !positive[x] && dist[x] > 0) {
                        dist[x] = 0;
                        pq.push({0, x});
                    }
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d != dist[u]) continue;
            for (int x : ctx.distinct_neighbors(u)) {
                if (!map.is_interior(x) || positive[x]) continue;
                long long nd = d - w[u];
                if (nd < dist[x]) {
                    dist[x] = nd;
                    pq.push({nd, x});
                }
            }
        }
        for (int v = 0; v < n; ++v) cost[v] = dist[v] == std::numeric_limits<long long>::max() ? -1 : dist[v];
    }

    std::vector<char> in(n, 0), on_path(n, 0);
    std::vector<int> members, path;
    std::set<std::vector<int>> seen;
    long long sum = 0;
    int root = -1;

    std::function<void()> grow;
    // Extends the current path ending at y (already on the path).
    std::function<void(int, long long)> walk = [&](int y, long long path_sum) {
        const int used = static_cast<int>(members.size() + path.size());
        for (int x : ctx.distinct_neighbors(y)) {
            if (!map.is_interior(x) || in[x] || on_path[x]) continue;
            if (positive[x]) {
                if (x < root || used + 1 > cap) continue;
                path.push_back(x);
                std::vector<int> added = path;
                path.pop_back();
                for (int v : added) in[v] = 1;
                members.insert(members.end(), added.begin(), added.end());
                sum += path_sum + w[x];
                std::vector<int> key = members;
                std::sort(key.begin(), key.end());
                if (seen.insert(key).second) grow();
                sum -= path_sum + w[x];
                members.resize(members.size() - added.size());
                for (int v : added) in[v] = 0;
                continue;
            }
            if (cost[x] < 0) continue;
            const int room = cap - used - 1 - hops[x] - 1; // slots left for positives after x
            if (room < 0) continue;
            if (sum + path_sum + w[x] - cost[x] + wmax * (room + 1) <= out.best_weight) {
                ++out.pruned;
                continue;
            }
            on_path[x] = 1;
            path.push_back(x);
            walk(x, path_sum + w[x]);
            path.pop_back();
            on_path[x] = 0;
        }
    };
    grow = [&]() {
        ++out.visited;
        const int size = static_cast<int>(members.size());
        if (size >= min_size) offer(sum, [&] {
            auto v = members;
            std::sort(v.begin(), v.end());
            return v;
        }());
        if (size >= cap) return;
        if (sum + wmax * (cap - size) <= out.best_weight) {
            ++out.pruned;
            return;
        }
        for (size_t i = 0; i < members.size(); ++i) walk(members[i], 0);
    };
    for (int r = 0; r < n; ++r) {
        if (!positive[r]) continue;
        root = r;
        seen.clear();
        in[r] = 1;
        members = {r};
        sum = w[r];
        grow();
        in[r] = 0;
    }
    return out;
}

std::vector<GapViolation> curvature_gap_violations(const Curvature& c)
{
    std::vector<GapViolation> out;
    const Rational gap(-1, 1806);
    for (int v = 0; v < c.map().num_vertices(); ++v) {
        if (!c.map().is_interior(v)) continue;
        Rational p = c.psi(v);
        if (p < 0 && p > gap) out.push_back({v, p});
    }
    return out;
}

} // namespace isolab
