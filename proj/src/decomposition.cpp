#include "isolab/decomposition.hpp"

#include "isolab/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace isolab {

const char* part_kind_name(PartKind k)
{
    switch (k) {
    case PartKind::Leaf: return "leaf";
    case PartKind::Branch: return "branch";
    case PartKind::Piece: return "piece";
    }
    return "?";
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x)
    {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

void sort_unique(std::vector<int>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

int vertex_boundary_of(const SubgraphContext& ctx, const std::vector<int>& verts)
{
    SubgraphView v = make_view(ctx, verts);
    return static_cast<int>(boundaries(ctx, v, false).vertex_boundary.size());
}

std::vector<int> induced_edges(const SubgraphContext& ctx, const std::vector<char>& in, const std::vector<int>& verts)
{
    const PlanarMap& map = ctx.map();
    std::vector<int> out;
    for (int v : verts)
        for (int d : map.rotation(v))
            if (d < map.twin(d) && in[map.head(d)]) out.push_back(map.edge_of(d));
    std::sort(out.begin(), out.end());
    return out;
}

// Branches are paths and no vertex lies in three parts.
void shape_flags(const std::vector<Part>& parts, const PlanarMap& map, bool& paths, bool& triples)
{
    paths = true;
    triples = true;
    std::map<int, int> count;
    for (const auto& p : parts) {
        for (int v : p.vertices) ++count[v];
        if (p.kind != PartKind::Branch) continue;
        std::map<int, int> deg;
        for (int e : p.edges) {
            int d = map.edge_dart(e);
            ++deg[map.origin(d)];
            ++deg[map.head(d)];
        }
        for (auto& [v, k] : deg)
            if (k > 2) paths = false;
    }
    for (auto& [v, k] : count)
        if (k >= 3) triples = false;
}

} // namespace

std::vector<Part> find_parts(const SubgraphContext& ctx, const SubgraphView& s)
{
    const PlanarMap& map = ctx.map();
    if (!is_simply_connected(ctx, s)) throw Error(Errc::NotSimplyConnected, "subgraph is not simply connected");

    std::vector<Part> parts;
    std::vector<int> edge_part(map.num_edges(), -1);

    // Leaves: faces of F(S) joined across shared edges.
    Dsu fu(map.num_faces());
    for (int e : dual_edges(ctx, s)) {
        int d = map.edge_dart(e);
        fu.unite(map.face_of(d), map.face_of(map.twin(d)));
    }
    std::map<int, int> leaf_of_root;
    for (int f : s.faces) {
        int r = fu.find(f);
        auto it = leaf_of_root.find(r);
        if (it == leaf_of_root.end()) {
            it = leaf_of_root.emplace(r, static_cast<int>(parts.size())).first;
            parts.push_back(Part{PartKind::Leaf, {}, {}, {}, -1, 0});
        }
        Part& p = parts[it->second];
        p.faces.push_back(f);
        for (int v : ctx.face_vertices(f)) p.vertices.push_back(v);
    }
    std::vector<char> in(map.num_vertices(), 0);
    for (size_t i = 0; i < parts.size(); ++i) {
        Part& p = parts[i];
        sort_unique(p.vertices);
        for (int v : p.vertices) in[v] = 1;
        p.edges = induced_edges(ctx, in, p.vertices);
        for (int v : p.vertices) in[v] = 0;
        for (int e : p.edges) edge_part[e] = static_cast<int>(i);
    }

    // Branches: components of the remaining edges.
    Dsu vu(map.num_vertices());
    std::vector<int> free_edges;
    for (int e : s.edges)
        if (edge_part[e] < 0) {
            free_edges.push_back(e);
            int d = map.edge_dart(e);
            vu.unite(map.origin(d), map.head(d));
        }
    std::map<int, int> branch_of_root;
    for (int e : free_edges) {
        int d = map.edge_dart(e);
        int r = vu.find(map.origin(d));
        auto it = branch_of_root.find(r);
        if (it == branch_of_root.end()) {
            it = branch_of_root.emplace(r, static_cast<int>(parts.size())).first;
            parts.push_back(Part{PartKind::Branch, {}, {}, {}, -1, 0});
        }
        Part& p = parts[it->second];
        p.edges.push_back(e);
        p.vertices.push_back(map.origin(d));
        p.vertices.push_back(map.head(d));
        edge_part[e] = it->second;
    }
    for (auto& p : parts) {
        sort_unique(p.vertices);
        std::sort(p.edges.begin(), p.edges.end());
    }
    if (parts.empty()) {
        // Single vertex: one edgeless branch.
        parts.push_back(Part{PartKind::Branch, s.vertices, {}, {}, -1, 0});
        return parts;
    }

    // Greedy order by smallest dart leaving the accumulated union.
    std::vector<int> darts;
    for (int v : s.vertices)
        for (int d : map.rotation(v))
            if (s.in[map.head(d)]) darts.push_back(d);
    std::sort(darts.begin(), darts.end());
    std::vector<char> used(parts.size(), 0), in_union(map.num_vertices(), 0);
    std::vector<Part> ordered;
    auto take = [&](int idx, int attach) {
        Part p = parts[idx];
        used[idx] = 1;
        p.attachment = attach;
        p.shared = 0;
        for (int v : p.vertices)
            if (in_union[v]) ++p.shared;
        for (int v : p.vertices) in_union[v] = 1;
        ordered.push_back(std::move(p));
    };
    take(edge_part[map.edge_of(darts.front())], -1);
    while (ordered.size() < parts.size()) {
        int pick = -1;
        for (int d : darts) {
            int idx = edge_part[map.edge_of(d)];
            if (!used[idx] && in_union[map.origin(d)]) {
                pick = d;
                break;
            }
        }
        if (pick < 0) throw Error(Errc::Disconnected, "parts do not connect");
        take(edge_part[map.edge_of(pick)], map.origin(pick));
    }
    return ordered;
}

ContractionTree contract(const SubgraphContext& ctx, const SubgraphView& s)
{
    const PlanarMap& map = ctx.map();
    ContractionTree t;
    for (auto& p : find_parts(ctx, s))
        if (p.kind == PartKind::Leaf) t.leaves.push_back(std::move(p));
    const int k = static_cast<int>(t.leaves.size());
    t.vertex_boundary = vertex_boundary_of(ctx, s.vertices);

    std::vector<int> edge_leaf(map.num_edges(), -1);
    std::vector<std::vector<int>> leaves_at(map.num_vertices());
    for (int i = 0; i < k; ++i) {
        for (int e : t.leaves[i].edges) edge_leaf[e] = i;
        for (int v : t.leaves[i].vertices) leaves_at[v].push_back(i);
    }
    t.attach.resize(k);
    std::vector<char> is_v3(map.num_vertices(), 0);
    for (int i = 0; i < k; ++i)
        for (int v : t.leaves[i].vertices) {
            bool out = false;
            for (int d : map.rotation(v))
                if (s.in[map.head(d)] && edge_leaf[map.edge_of(d)] != i) out = true;
            if (out) {
                t.attach[i].push_back(v);
                is_v3[v] = 1;
            }
        }

    for (int i = 0; i < k; ++i) t.nodes.push_back({TreeNode::LeafNode, i});
    std::vector<int> node_of(map.num_vertices(), -1);
    for (int v : s.vertices) {
        if (leaves_at[v].empty()) {
            node_of[v] = static_cast<int>(t.nodes.size());
            t.nodes.push_back({TreeNode::Untouched, v});
        } else if (is_v3[v]) {
            node_of[v] = static_cast<int>(t.nodes.size());
            t.nodes.push_back({TreeNode::Attachment, v});
        }
    }
    for (int e : s.edges) {
        if (edge_leaf[e] >= 0) continue;
        int d = map.edge_dart(e);
        int a = node_of[map.origin(d)], b = node_of[map.head(d)];
        if (a < 0 || b < 0) throw Error(Errc::BadInput, "free edge endpoint missing from the tree");
        t.edges.push_back({a, b});
        t.edge_host.push_back(e);
    }
    for (int i = 0; i < k; ++i)
        for (int v : t.attach[i]) {
            t.edges.push_back({i, node_of[v]});
            t.edge_host.push_back(-1);
        }

    const int n = static_cast<int>(t.nodes.size());
    const int m = static_cast<int>(t.edges.size());
    Dsu conn(n);
    std::vector<int> deg(n, 0);
    for (auto [a, b] : t.edges) {
        conn.unite(a, b);
        ++deg[a];
        ++deg[b];
    }
    bool connected = true;
    for (int x = 1; x < n; ++x)
        if (conn.find(x) != conn.find(0)) connected = false;
    t.is_tree = connected && m == n - 1;
    for (int x = 0; x < n; ++x) {
        if (deg[x] == 1) t.degree_one.push_back(x);
        if (deg[x] >= 3) t.branching.push_back(x);
    }

    // Components of T - A: edges sharing a node outside A.
    std::vector<char> in_a(n, 0);
    for (int x : t.branching) in_a[x] = 1;
    Dsu eu(std::max(m, 1));
    std::vector<int> first_edge(n, -1);
    for (int j = 0; j < m; ++j)
        for (int x : {t.edges[j].first, t.edges[j].second}) {
            if (in_a[x]) continue;
            if (first_edge[x] < 0)
                first_edge[x] = j;
            else
                eu.unite(j, first_edge[x]);
        }
    std::map<int, int> comp_index;
    std::vector<std::vector<int>> comps;
    for (int j = 0; j < m; ++j) {
        int r = eu.find(j);
        auto it = comp_index.find(r);
        if (it == comp_index.end()) {
            it = comp_index.emplace(r, static_cast<int>(comps.size())).first;
            comps.emplace_back();
        }
        comps[it->second].push_back(j);
    }
    std::vector<char> taken(comps.size(), 0), reached(n, 0);
    for (size_t step = 0; step < comps.size(); ++step) {
        int pick = -1;
        for (size_t c = 0; c < comps.size() && pick < 0; ++c) {
            if (taken[c]) continue;
            if (step == 0) {
                pick = static_cast<int>(c);
                break;
            }
            for (int j : comps[c])
                if (reached[t.edges[j].first] || reached[t.edges[j].second]) {
                    pick = static_cast<int>(c);
                    break;
                }
        }
        if (pick < 0) break;
        taken[pick] = 1;
        for (int j : comps[pick]) reached[t.edges[j].first] = reached[t.edges[j].second] = 1;
        t.paths.push_back(comps[pick]);
    }
    t.paths_bound_ok = static_cast<long long>(t.paths.size()) <= 2LL * t.vertex_boundary;
    t.leaves_bound_ok = static_cast<long long>(t.degree_one.size()) <= t.vertex_boundary;
    return t;
}

Partition partition(const SubgraphContext& ctx, const SubgraphView& s)
{
    const PlanarMap& map = ctx.map();
    Partition p;
    p.tree = contract(ctx, s);
    const ContractionTree& t = p.tree;
    p.vertex_boundary = t.vertex_boundary;

    if (t.paths.empty()) {
        Part whole;
        whole.vertices = s.vertices;
        whole.edges = s.edges;
        whole.kind = t.leaves.empty() ? PartKind::Branch : PartKind::Leaf;
        if (!t.leaves.empty()) whole.faces = t.leaves.front().faces;
        p.parts.push_back(std::move(whole));
    } else {
        std::vector<char> leaf_used(t.leaves.size(), 0);
        for (const auto& path : t.paths) {
            Part part;
            int leaves = 0, branch_edges = 0;
            std::vector<int> nodes;
            for (int j : path) {
                nodes.push_back(t.edges[j].first);
                nodes.push_back(t.edges[j].second);
                if (t.edge_host[j] >= 0) {
                    part.edges.push_back(t.edge_host[j]);
                    ++branch_edges;
                }
            }
            sort_unique(nodes);
            for (int x : nodes) {
                const TreeNode& nd = t.nodes[x];
                if (nd.tag != TreeNode::LeafNode) {
                    part.vertices.push_back(nd.value);
                    continue;
                }
                if (leaf_used[nd.value]) continue;
                leaf_used[nd.value] = 1;
                ++leaves;
                const Part& leaf = t.leaves[nd.value];
                part.vertices.insert(part.vertices.end(), leaf.vertices.begin(), leaf.vertices.end());
                part.edges.insert(part.edges.end(), leaf.edges.begin(), leaf.edges.end());
                part.faces.insert(part.faces.end(), leaf.faces.begin(), leaf.faces.end());
            }
            if (part.edges.empty()) continue;
            sort_unique(part.vertices);
            sort_unique(part.edges);
            std::sort(part.faces.begin(), part.faces.end());
            part.kind = leaves == 0 ? PartKind::Branch : (branch_edges == 0 && leaves == 1 ? PartKind::Leaf : PartKind::Piece);
            p.parts.push_back(std::move(part));
        }
    }

    // Certification.
    const int n = static_cast<int>(p.parts.size());
    std::vector<char> in_union(map.num_vertices(), 0);
    std::vector<int> union_verts, union_edges;
    std::vector<int> edge_count(map.num_edges(), 0);
    p.induced_prefixes = p.single_vertex_meets = p.prefix_inequality = true;
    for (int i = 0; i < n; ++i) {
        Part& part = p.parts[i];
        int shared = 0, attach = -1;
        for (int v : part.vertices)
            if (in_union[v]) {
                ++shared;
                attach = v;
            }
        part.shared = shared;
        part.attachment = i == 0 ? -1 : attach;
        if (i > 0 && shared != 1) p.single_vertex_meets = false;
        for (int v : part.vertices)
            if (!in_union[v]) {
                in_union[v] = 1;
                union_verts.push_back(v);
            }
        for (int e : part.edges) {
            if (edge_count[e]++ == 0) union_edges.push_back(e);
        }
        std::vector<int> ue = union_edges;
        std::sort(ue.begin(), ue.end());
        if (ue != induced_edges(ctx, in_union, union_verts)) p.induced_prefixes = false;
        p.prefix_boundary.push_back(vertex_boundary_of(ctx, union_verts));
        p.part_boundary.push_back(vertex_boundary_of(ctx, part.vertices));
        if (i > 0 && p.prefix_boundary[i] < p.prefix_boundary[i - 1] + p.part_boundary[i] - 2)
            p.prefix_inequality = false;
    }
    std::sort(union_verts.begin(), union_verts.end());
    bool disjoint = std::all_of(edge_count.begin(), edge_count.end(), [](int c) { return c <= 1; });
    std::vector<int> ue = union_edges;
    std::sort(ue.begin(), ue.end());
    p.union_matches = disjoint && union_verts == s.vertices && ue == s.edges;
    p.count_bound = Rational(n) <= p.tau * p.vertex_boundary;

    p.pieces_shaped = true;
    for (const auto& part : p.parts) {
        SubgraphView pv = make_view(ctx, part.vertices);
        if (!is_simply_connected(ctx, pv)) {
            p.pieces_shaped = false;
            continue;
        }
        bool paths, triples;
        shape_flags(find_parts(ctx, pv), map, paths, triples);
        if (!paths || !triples) p.pieces_shaped = false;
    }
    return p;
}

ConclusionReport certify_conclusion(const SubgraphContext& ctx, const Partition& p, const Rational& c)
{
    ConclusionReport r;
    r.c = c;
    long long total = 0;
    std::vector<char> seen(ctx.num_vertices(), 0);
    for (size_t i = 0; i < p.parts.size(); ++i) {
        const Part& part = p.parts[i];
        int dv = vertex_boundary_of(ctx, part.vertices);
        const long long nv = static_cast<long long>(part.vertices.size());
        Rational bound = part.kind == PartKind::Branch ? Rational(2) : c;
        if (dv == 0 || Rational(nv) > bound * dv)
            throw Error(Errc::HypothesisFailed, "part " + std::to_string(i) + " has |V| = " + std::to_string(nv) +
                                                    " above " + to_string(bound) + " * " + std::to_string(dv));
        r.part_ratio.push_back(Rational(nv, dv));
        if (part.kind == PartKind::Branch && r.c < 2) r.c = 2;
        for (int v : part.vertices)
            if (!seen[v]) {
                seen[v] = 1;
                ++total;
            }
    }
    r.lhs = total;
    r.rhs = (1 + 2 * p.tau) * r.c * p.vertex_boundary;
    r.holds = Rational(r.lhs) <= r.rhs;
    return r;
}

GreedyReport greedy_report(const SubgraphContext& ctx, const SubgraphView& s)
{
    GreedyReport g;
    auto parts = find_parts(ctx, s);
    g.parts = static_cast<int>(parts.size());
    g.vertex_boundary = vertex_boundary_of(ctx, s.vertices);
    g.single_vertex_meets = true;
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i].shared != 1) g.single_vertex_meets = false;
    shape_flags(parts, ctx.map(), g.branches_are_paths, g.no_triple_points);
    g.third_bound = 3LL * g.vertex_boundary >= g.parts;
    return g;
}

} // namespace isolab
