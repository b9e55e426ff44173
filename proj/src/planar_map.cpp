#include "isolab/planar_map.hpp"

#include "isolab/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace isolab {

PlanarMap PlanarMap::build(std::vector<std::vector<int>> rotations, std::vector<int> twin,
                           int outer_face_dart)
{
    PlanarMap m;
    const int nd = static_cast<int>(twin.size());
    const int nv = static_cast<int>(rotations.size());
    if (nd == 0 || nv == 0) throw Error(Errc::BadInput, "map needs at least one edge");
    if (nd % 2 != 0) throw Error(Errc::NonInvolutiveTwin, "odd number of darts");
    for (int d = 0; d < nd; ++d) {
        int t = twin[d];
        if (t < 0 || t >= nd || t == d || twin[t] != d)
            throw Error(Errc::NonInvolutiveTwin, "dart " + std::to_string(d));
    }

    m.origin_.assign(nd, -1);
    m.rot_next_.assign(nd, -1);
    m.rot_prev_.assign(nd, -1);
    for (int v = 0; v < nv; ++v) {
        const auto& rot = rotations[v];
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            int d = rot[i];
            if (d < 0 || d >= nd) throw Error(Errc::BadInput, "dart id out of range");
            if (m.origin_[d] != -1)
                throw Error(Errc::BadInput, "dart " + std::to_string(d) + " listed twice");
            m.origin_[d] = v;
            m.rot_next_[d] = rot[(i + 1) % k];
            m.rot_prev_[d] = rot[(i + k - 1) % k];
        }
    }
    for (int d = 0; d < nd; ++d)
        if (m.origin_[d] == -1)
            throw Error(Errc::BadInput, "dart " + std::to_string(d) + " missing from rotations");

    std::vector<char> seen(nv, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int d : rotations[v]) {
            int w = m.origin_[twin[d]];
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != nv) throw Error(Errc::DisconnectedGraph, std::to_string(nv - reached) + " vertices unreachable");

    m.twin_ = std::move(twin);
    m.rotations_ = std::move(rotations);

    m.dart_face_.assign(nd, -1);
    for (int d = 0; d < nd; ++d) {
        if (m.dart_face_[d] != -1) continue;
        int f = static_cast<int>(m.faces_.darts.size());
        std::vector<int> cycle, verts;
        int x = d;
        do {
            m.dart_face_[x] = f;
            cycle.push_back(x);
            verts.push_back(m.origin_[x]);
            x = m.face_next(x);
        } while (x != d);
        m.faces_.degree.push_back(static_cast<int>(cycle.size()));
        m.faces_.darts.push_back(std::move(cycle));
        m.faces_.vertices.push_back(std::move(verts));
    }
    if (nv - nd / 2 + m.num_faces() != 2)
        throw Error(Errc::EulerViolation, "V - E + F = " + std::to_string(nv - nd / 2 + m.num_faces()));

    if (outer_face_dart < 0 || outer_face_dart >= nd) throw Error(Errc::BadInput, "outer face dart out of range");
    m.outer_dart_ = outer_face_dart;
    m.outer_face_ = m.dart_face_[outer_face_dart];

    m.dart_edge_.assign(nd, -1);
    for (int d = 0; d < nd; ++d) {
        if (d < m.twin_[d]) {
            m.dart_edge_[d] = m.dart_edge_[m.twin_[d]] = static_cast<int>(m.edge_dart_.size());
            m.edge_dart_.push_back(d);
        }
    }

    m.neighbors_.resize(nv);
    for (int v = 0; v < nv; ++v)
        for (int d : m.rotations_[v]) m.neighbors_[v].push_back(m.head(d));

    m.interior_.assign(nv, 1);
    for (int v : m.faces_.vertices[m.outer_face_]) m.interior_[v] = 0;
    m.labels_.assign(nv, {});
    return m;
}

void PlanarMap::set_interior(const std::vector<int>& vertices)
{
    interior_.assign(num_vertices(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= num_vertices()) throw Error(Errc::BadInput, "interior vertex out of range");
        interior_[v] = 1;
    }
    explicit_interior_ = true;
}

void PlanarMap::set_interior_mask(std::vector<char> mask)
{
    if (static_cast<int>(mask.size()) != num_vertices()) throw Error(Errc::BadInput, "interior mask size");
    interior_ = std::move(mask);
    explicit_interior_ = true;
}

bool PlanarMap::is_interior_face(int f) const
{
    if (!is_bounded(f)) return false;
    for (int v : faces_.vertices[f])
        if (!interior_[v]) return false;
    return true;
}

std::vector<int> PlanarMap::find_label(const std::string& label) const
{
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (labels_[v] == label) out.push_back(v);
    return out;
}

int EmbeddingBuilder::add_vertex()
{
    rot_.emplace_back();
    return static_cast<int>(rot_.size()) - 1;
}

PlanarMap EmbeddingBuilder::build(int outer_from, int outer_to) const
{
    const int nv = num_vertices();
    std::vector<std::vector<int>> rotations(nv);
    std::unordered_map<long long, int> dart_of;
    auto key = [nv](int u, int v) { return static_cast<long long>(u) * nv + v; };
    int next = 0;
    for (int v = 0; v < nv; ++v) {
        for (int w : rot_[v]) {
            if (w == v) throw Error(Errc::BadInput, "loop in builder");
            if (!dart_of.emplace(key(v, w), next).second) throw Error(Errc::BadInput, "parallel edge in builder");
            rotations[v].push_back(next++);
        }
    }
    std::vector<int> twin(next, -1);
    for (int v = 0; v < nv; ++v) {
        for (int w : rot_[v]) {
            auto it = dart_of.find(key(w, v));
            if (it == dart_of.end())
                throw Error(Errc::NonInvolutiveTwin, "edge " + std::to_string(v) + "-" + std::to_string(w) + " not mirrored");
            twin[dart_of[key(v, w)]] = it->second;
        }
    }
    auto it = dart_of.find(key(outer_from, outer_to));
    if (it == dart_of.end()) throw Error(Errc::BadInput, "outer dart is not an edge");
    return PlanarMap::build(std::move(rotations), std::move(twin), it->second);
}

DualMap dual(const PlanarMap& map)
{
    const auto& faces = map.faces();
    std::vector<std::vector<int>> rotations(faces.darts.begin(), faces.darts.end());
    DualMap out;
    out.map = PlanarMap::build(std::move(rotations), map.twins(), map.outer_face_dart());
    out.edge_bijection.resize(map.num_edges());
    for (int e = 0; e < map.num_edges(); ++e) out.edge_bijection[e] = out.map.edge_of(map.edge_dart(e));

    // Dual face traced through dart d is the rotation orbit of origin(d).
    out.face_to_vertex.assign(out.map.num_faces(), -1);
    for (int d = 0; d < map.num_darts(); ++d) out.face_to_vertex[out.map.face_of(d)] = map.origin(d);

    std::vector<char> mask(out.map.num_vertices(), 0);
    for (int f = 0; f < map.num_faces(); ++f) mask[f] = map.is_interior_face(f) ? 1 : 0;
    out.map.set_interior_mask(std::move(mask));
    return out;
}

namespace {

bool has_no_loops_or_parallels(int n, const std::vector<int>& darts_src, const std::vector<int>& darts_dst)
{
    std::vector<std::vector<int>> adj(n);
    for (size_t i = 0; i < darts_src.size(); ++i) {
        if (darts_src[i] == darts_dst[i]) return false;
        adj[darts_src[i]].push_back(darts_dst[i]);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
    }
    return true;
}

} // namespace

Classification classify(const PlanarMap& map)
{
    Classification c;
    const int nd = map.num_darts();
    std::vector<int> src(nd), dst(nd), fsrc, fdst;
    for (int d = 0; d < nd; ++d) {
        src[d] = map.origin(d);
        dst[d] = map.head(d);
        // The outer face is an artifact of truncation; dual simplicity is judged on bounded faces.
        int f = map.face_of(d), g = map.face_of(map.twin(d));
        if (map.is_bounded(f) && map.is_bounded(g)) {
            fsrc.push_back(f);
            fdst.push_back(g);
        }
    }
    c.simple = has_no_loops_or_parallels(map.num_vertices(), src, dst);
    c.dual_simple = has_no_loops_or_parallels(map.num_faces(), fsrc, fdst);

    const auto& faces = map.faces();
    c.proper = true;
    for (int f = 0; f < map.num_faces() && c.proper; ++f) {
        if (!map.is_bounded(f)) continue;
        auto verts = faces.vertices[f];
        std::sort(verts.begin(), verts.end());
        if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) c.proper = false;
    }

    if (c.proper) {
        c.normal = true;
        // Shared vertex sets for every pair of bounded faces meeting at a vertex.
        std::map<std::pair<int, int>, std::vector<int>> shared;
        for (int v = 0; v < map.num_vertices(); ++v) {
            std::vector<int> around;
            for (int d : map.rotation(v))
                if (map.is_bounded(map.face_of(d))) around.push_back(map.face_of(d));
            std::sort(around.begin(), around.end());
            around.erase(std::unique(around.begin(), around.end()), around.end());
            for (size_t i = 0; i < around.size(); ++i)
                for (size_t j = i + 1; j < around.size(); ++j) shared[{around[i], around[j]}].push_back(v);
        }
        for (const auto& [pair, verts] : shared) {
            if (verts.size() > 2) {
                c.normal = false;
                break;
            }
            if (verts.size() == 2) {
                bool joined = false;
                for (int d : faces.darts[pair.first]) {
                    int a = map.origin(d), b = map.head(d);
                    bool ends = (a == verts[0] && b == verts[1]) || (a == verts[1] && b == verts[0]);
                    if (ends && map.face_of(map.twin(d)) == pair.second) joined = true;
                }
                if (!joined) {
                    c.normal = false;
                    break;
                }
            }
        }
    }

    c.min_vertex_degree = -1;
    for (int v = 0; v < map.num_vertices(); ++v) {
        if (!map.is_interior(v)) continue;
        if (c.min_vertex_degree < 0 || map.degree(v) < c.min_vertex_degree) c.min_vertex_degree = map.degree(v);
    }
    c.min_face_degree = -1;
    c.max_face_degree = 0;
    for (int f = 0; f < map.num_faces(); ++f) {
        if (!map.is_interior_face(f)) continue;
        int k = map.face_degree(f);
        if (c.min_face_degree < 0 || k < c.min_face_degree) c.min_face_degree = k;
        c.max_face_degree = std::max(c.max_face_degree, k);
    }
    if (c.min_vertex_degree < 0) c.min_vertex_degree = 0;
    if (c.min_face_degree < 0) c.min_face_degree = 0;
    return c;
}

bool satisfies_standing_assumption(const Classification& c)
{
    return c.simple && c.dual_simple && c.min_vertex_degree >= 3 && c.min_face_degree >= 3;
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b)
{
    if (a.num_vertices() != b.num_vertices() || a.num_darts() != b.num_darts() || a.num_faces() != b.num_faces())
        return false;
    const int nd = a.num_darts();
    for (int root = 0; root < nd; ++root) {
        if (a.degree(a.origin(0)) != b.degree(b.origin(root))) continue;
        std::vector<int> fwd(nd, -1), back(nd, -1);
        std::deque<int> queue{0};
        fwd[0] = root;
        back[root] = 0;
        bool ok = true;
        while (!queue.empty() && ok) {
            int x = queue.front();
            queue.pop_front();
            int y = fwd[x];
            const std::pair<int, int> steps[] = {{a.twin(x), b.twin(y)}, {a.rot_next(x), b.rot_next(y)}};
            for (auto [xa, yb] : steps) {
                if (fwd[xa] == -1 && back[yb] == -1) {
                    fwd[xa] = yb;
                    back[yb] = xa;
                    queue.push_back(xa);
                } else if (fwd[xa] != yb || back[yb] != xa) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<int> bfs_distances(const PlanarMap& map, int source)
{
    std::vector<int> dist(map.num_vertices(), -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : map.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace isolab
