#include "isolab/subgraphs.hpp"

#include "isolab/error.hpp"

#include <algorithm>
#include <numeric>

namespace isolab {

SubgraphContext::SubgraphContext(const PlanarMap& map) : map_(&map)
{
    const int nv = map.num_vertices(), nf = map.num_faces();
    face_vertices_.resize(nf);
    vertex_faces_.resize(nv);
    distinct_nbrs_.resize(nv);
    frontier_face_.assign(nf, 0);
    for (int f = 0; f < nf; ++f) {
        if (!map.is_bounded(f)) {
            frontier_face_[f] = 1;
            continue;
        }
        auto vs = map.faces().vertices[f];
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) {
            vertex_faces_[v].push_back(f);
            if (!map.is_interior(v)) frontier_face_[f] = 1;
        }
        face_vertices_[f] = std::move(vs);
    }
    for (int v = 0; v < nv; ++v) {
        auto ns = map.neighbors(v);
        std::sort(ns.begin(), ns.end());
        ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
        ns.erase(std::remove(ns.begin(), ns.end(), v), ns.end());
        distinct_nbrs_[v] = std::move(ns);
    }
}

SubgraphView make_view(const SubgraphContext& ctx, std::vector<int> vertices)
{
    const PlanarMap& map = ctx.map();
    if (vertices.empty()) throw Error(Errc::EmptySet, "empty vertex set");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    if (vertices.front() < 0 || vertices.back() >= map.num_vertices())
        throw Error(Errc::BadInput, "subgraph vertex id out of range");
    SubgraphView s;
    s.vertices = std::move(vertices);
    s.in.assign(map.num_vertices(), 0);
    for (int v : s.vertices) s.in[v] = 1;
    for (int v : s.vertices)
        for (int d : map.rotation(v))
            if (d < map.twin(d) && s.in[map.head(d)]) s.edges.push_back(map.edge_of(d));
    std::sort(s.edges.begin(), s.edges.end());
    std::vector<int> cand;
    for (int v : s.vertices)
        for (int f : ctx.vertex_faces(v)) cand.push_back(f);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (int f : cand) {
        const auto& fv = ctx.face_vertices(f);
        if (std::all_of(fv.begin(), fv.end(), [&](int w) { return s.in[w] != 0; })) s.faces.push_back(f);
    }
    return s;
}

bool inside_interior(const SubgraphContext& ctx, const SubgraphView& s)
{
    return std::all_of(s.vertices.begin(), s.vertices.end(), [&](int v) { return ctx.map().is_interior(v); });
}

BoundaryReport boundaries(const SubgraphContext& ctx, const SubgraphView& s, bool require_interior)
{
    const PlanarMap& map = ctx.map();
    if (require_interior && !inside_interior(ctx, s))
        throw Error(Errc::TouchesTruncationBoundary, "subgraph meets a non-interior vertex");
    BoundaryReport r;
    std::vector<char> full(map.num_faces(), 0), outer_mark(map.num_vertices(), 0);
    for (int f : s.faces) full[f] = 1;
    for (int v : s.vertices) {
        r.volume += map.degree(v);
        bool on_boundary = false;
        for (int d : map.rotation(v)) {
            int w = map.head(d);
            if (!s.in[w]) {
                r.edge_boundary.push_back(map.edge_of(d));
                on_boundary = true;
                if (!outer_mark[w]) {
                    outer_mark[w] = 1;
                    r.outer_vertex_boundary.push_back(w);
                }
            }
        }
        if (on_boundary) r.vertex_boundary.push_back(v);
    }
    std::vector<char> face_marked(map.num_faces(), 0);
    for (int e : s.edges) {
        int d = map.edge_dart(e);
        int f1 = map.face_of(d), f2 = map.face_of(map.twin(d));
        if (full[f1] && full[f2]) continue;
        r.surrounding_edges.push_back(e);
        for (int f : {f1, f2})
            if (full[f] && !face_marked[f]) {
                face_marked[f] = 1;
                r.face_boundary.push_back(f);
            }
    }
    std::sort(r.edge_boundary.begin(), r.edge_boundary.end());
    std::sort(r.outer_vertex_boundary.begin(), r.outer_vertex_boundary.end());
    std::sort(r.face_boundary.begin(), r.face_boundary.end());
    r.num_vertices = s.size();
    r.num_edges = static_cast<int>(s.edges.size());
    r.num_faces = static_cast<int>(s.faces.size());
    return r;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Labels complement components; non-interior vertices share the label of the
// outside territory. Returns the number of components (outside counts as one
// when present).
int complement_components(const SubgraphContext& ctx, const std::vector<char>& in, std::vector<int>& comp,
                          int& outside)
{
    const PlanarMap& map = ctx.map();
    const int n = map.num_vertices();
    UnionFind uf(n + 1);
    outside = -1;
    bool has_outside = false;
    for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        if (!map.is_interior(v)) {
            uf.unite(v, n);
            has_outside = true;
        }
        for (int w : ctx.distinct_neighbors(v))
            if (!in[w]) uf.unite(v, w);
    }
    comp.assign(n, -1);
    std::vector<int> seen;
    for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        comp[v] = uf.find(v);
        seen.push_back(comp[v]);
    }
    if (has_outside) outside = uf.find(n);
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    return static_cast<int>(seen.size());
}

} // namespace

bool is_connected(const SubgraphContext& ctx, const SubgraphView& s)
{
    if (s.vertices.empty()) return false;
    std::vector<char> seen(ctx.num_vertices(), 0);
    std::vector<int> stack{s.vertices.front()};
    seen[s.vertices.front()] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : ctx.distinct_neighbors(v))
            if (s.in[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count == s.size();
}

bool is_simply_connected(const SubgraphContext& ctx, const SubgraphView& s)
{
    if (!is_connected(ctx, s)) return false;
    std::vector<int> comp;
    int outside;
    return complement_components(ctx, s.in, comp, outside) <= 1;
}

std::vector<int> dual_edges(const SubgraphContext& ctx, const SubgraphView& s)
{
    const PlanarMap& map = ctx.map();
    std::vector<char> full(map.num_faces(), 0);
    for (int f : s.faces) full[f] = 1;
    std::vector<int> out;
    for (int e : s.edges) {
        int d = map.edge_dart(e);
        int f1 = map.face_of(d), f2 = map.face_of(map.twin(d));
        if (f1 != f2 && full[f1] && full[f2]) out.push_back(e);
    }
    return out;
}

FaceGraphInfo classify_face_graph(const SubgraphContext& ctx, const SubgraphView& s)
{
    const PlanarMap& map = ctx.map();
    FaceGraphInfo info;
    info.simply_connected = is_simply_connected(ctx, s);
    if (s.faces.empty()) return info;

    std::vector<char> covered(map.num_vertices(), 0);
    for (int f : s.faces)
        for (int v : ctx.face_vertices(f)) covered[v] = 1;
    info.face_graph = std::all_of(s.vertices.begin(), s.vertices.end(), [&](int v) { return covered[v] != 0; });

    const int nf = map.num_faces();
    std::vector<char> full(nf, 0);
    for (int f : s.faces) full[f] = 1;
    // S*: faces of F(S) joined across edges both of whose sides are in F(S).
    UnionFind uf(nf + 1);
    for (int e : dual_edges(ctx, s)) {
        int d = map.edge_dart(e);
        uf.unite(map.face_of(d), map.face_of(map.twin(d)));
    }
    int root = uf.find(s.faces.front());
    info.interior_connected =
        std::all_of(s.faces.begin(), s.faces.end(), [&](int f) { return uf.find(f) == root; });

    // Dual complement: faces outside F(S), adjacent across any edge not in S*;
    // frontier faces merge into one outside territory.
    UnionFind cu(nf + 1);
    bool has_outside = false;
    for (int f = 0; f < nf; ++f)
        if (!full[f] && ctx.face_is_frontier(f)) {
            cu.unite(f, nf);
            has_outside = true;
        }
    for (int d = 0; d < map.num_darts(); ++d) {
        int f1 = map.face_of(d), f2 = map.face_of(map.twin(d));
        if (!full[f1] && !full[f2]) cu.unite(f1, f2);
    }
    std::vector<int> comps;
    for (int f = 0; f < nf; ++f)
        if (!full[f]) comps.push_back(cu.find(f));
    if (has_outside) comps.push_back(cu.find(nf));
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    info.dual_simply_connected = info.interior_connected && comps.size() <= 1;
    info.polygon = info.simply_connected && info.face_graph && info.dual_simply_connected;
    return info;
}

SubgraphView fill_holes(const SubgraphContext& ctx, const SubgraphView& s)
{
    if (!inside_interior(ctx, s))
        throw Error(Errc::TouchesTruncationBoundary, "cannot fill a subgraph that meets the truncation frontier");
    std::vector<int> comp;
    int outside;
    complement_components(ctx, s.in, comp, outside);
    std::vector<int> verts = s.vertices;
    if (outside < 0) {
        // No frontier at all: keep the largest complement component as the outside.
        std::vector<int> count(ctx.num_vertices() + 1, 0);
        for (int v = 0; v < ctx.num_vertices(); ++v)
            if (comp[v] >= 0) ++count[comp[v]];
        outside = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
    }
    for (int v = 0; v < ctx.num_vertices(); ++v)
        if (comp[v] >= 0 && comp[v] != outside) verts.push_back(v);
    return make_view(ctx, std::move(verts));
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace isolab
