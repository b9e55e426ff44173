#pragma once

#include "isolab/planar_map.hpp"

#include <cstdint>
#include <vector>

namespace isolab {

// Per-host lookup tables shared by every subgraph query.
class SubgraphContext {
public:
    explicit SubgraphContext(const PlanarMap& map);
    SubgraphContext(PlanarMap&&) = delete;

    const PlanarMap& map() const { return *map_; }
    int num_vertices() const { return map_->num_vertices(); }
    // Distinct vertices of each face (empty for the outer face).
    const std::vector<int>& face_vertices(int f) const { return face_vertices_[f]; }
    // Distinct bounded faces at v.
    const std::vector<int>& vertex_faces(int v) const { return vertex_faces_[v]; }
    // Distinct neighbors of v, ascending.
    const std::vector<int>& distinct_neighbors(int v) const { return distinct_nbrs_[v]; }
    // Face touching a non-interior vertex, or the outer face.
    bool face_is_frontier(int f) const { return frontier_face_[f] != 0; }

private:
    const PlanarMap* map_;
    std::vector<std::vector<int>> face_vertices_, vertex_faces_, distinct_nbrs_;
    std::vector<char> frontier_face_;
};

// Induced subgraph, keyed by its sorted vertex set.
struct SubgraphView {
    std::vector<int> vertices; // sorted, distinct
    std::vector<char> in;      // membership over host vertices
    std::vector<int> edges;    // host edge ids with both ends in S
    std::vector<int> faces;    // F(S): bounded faces with every vertex in S

    int size() const { return static_cast<int>(vertices.size()); }
    bool contains(int v) const { return in[v] != 0; }
};

// Throws Error{BadInput} on out-of-range ids, Error{EmptySet} on an empty list.
SubgraphView make_view(const SubgraphContext& ctx, std::vector<int> vertices);

bool inside_interior(const SubgraphContext& ctx, const SubgraphView& s);

struct BoundaryReport {
    std::vector<int> edge_boundary;         // edges with exactly one end in S
    std::vector<int> vertex_boundary;       // vertices of S incident to edge_boundary
    std::vector<int> surrounding_edges;     // edges of S on a face outside F(S)
    std::vector<int> face_boundary;         // faces of F(S) carrying a surrounding edge
    std::vector<int> outer_vertex_boundary; // vertices outside S with a neighbor in S
    long long volume = 0;
    int num_vertices = 0, num_edges = 0, num_faces = 0;
};

// Throws Error{TouchesTruncationBoundary} when S leaves the interior and
// require_interior is set.
BoundaryReport boundaries(const SubgraphContext& ctx, const SubgraphView& s, bool require_interior = true);

bool is_connected(const SubgraphContext& ctx, const SubgraphView& s);

// Connected, and the host minus S has one component once all non-interior
// vertices are identified into a single outside territory.
bool is_simply_connected(const SubgraphContext& ctx, const SubgraphView& s);

struct FaceGraphInfo {
    bool face_graph = false;         // F(S) nonempty and V(S) = union of V(f), f in F(S)
    bool interior_connected = false; // S* connected
    bool dual_simply_connected = false;
    bool simply_connected = false;
    bool polygon = false;
};

FaceGraphInfo classify_face_graph(const SubgraphContext& ctx, const SubgraphView& s);

// S plus every complement component that does not reach the outside territory.
SubgraphView fill_holes(const SubgraphContext& ctx, const SubgraphView& s);

// Edges of the dual subgraph S*: primal edges flanked by two distinct faces of F(S).
std::vector<int> dual_edges(const SubgraphContext& ctx, const SubgraphView& s);

inline constexpr int kDefaultEnumerationCap = 14;

struct EnumOptions {
    int max_vertices = 8;
    int min_vertices = 1;
    int cap = kDefaultEnumerationCap;   // max_vertices above this throws CapExceeded
    std::vector<char> allowed;          // empty = interior mask
};

// Incremental state of the set currently visited by the enumerator.
class EnumState {
public:
    explicit EnumState(const SubgraphContext& ctx);

    const SubgraphContext& ctx() const { return *ctx_; }
    const std::vector<int>& vertices() const { return verts_; } // insertion order
    int size() const { return static_cast<int>(verts_.size()); }
    bool contains(int v) const { return in_[v] != 0; }
    // Darts from v into S, with multiplicity.
    int darts_into(int v) const { return into_[v]; }
    int num_edges() const { return edges_; }
    int num_faces() const { return full_faces_; }
    long long volume() const { return volume_; }
    long long edge_boundary() const { return volume_ - 2LL * edges_; }
    bool face_full(int f) const;

    int vertex_boundary() const;
    int outer_vertex_boundary() const;
    int surrounding_edges() const;
    std::vector<int> sorted_vertices() const;

    void push(int v);
    void pop();

private:
    const SubgraphContext* ctx_;
    std::vector<int> verts_;
    std::vector<char> in_;
    std::vector<int> into_, face_hits_;
    mutable std::vector<uint32_t> stamp_;
    mutable uint32_t clock_ = 0;
    int edges_ = 0, full_faces_ = 0;
    long long volume_ = 0;
};

// Visitor verdict: descend, skip the supersets reached from this set, or end the root.
enum class Step { Continue, Prune, Stop };

// ESU enumeration of connected induced subgraphs over the allowed vertices.
// Every set is visited once; a root's sets all have the root as minimum.
class ConnectedEnumerator {
public:
    ConnectedEnumerator(const SubgraphContext& ctx, EnumOptions opts);

    const std::vector<int>& roots() const { return roots_; }

    // visit(const EnumState&) returns bool (false stops the root) or Step.
    template <class Visit>
    void run_root(int root, EnumState& st, Visit&& visit) const
    {
        if (!allowed_[root]) return;
        st.push(root);
        Step s = st.size() < opts_.min_vertices ? Step::Continue : as_step(visit(st));
        if (s == Step::Continue) {
            std::vector<int> ext;
            for (int u : ctx_->distinct_neighbors(root))
                if (u > root && allowed_[u]) ext.push_back(u);
            bool go = true;
            extend(root, ext, st, visit, go);
        }
        st.pop();
    }

    template <class Visit>
    void run(Visit&& visit) const
    {
        EnumState st(*ctx_);
        for (int r : roots_) run_root(r, st, visit);
    }

private:
    static Step as_step(bool b) { return b ? Step::Continue : Step::Stop; }
    static Step as_step(Step s) { return s; }

    template <class Visit>
    void extend(int root, std::vector<int> ext, EnumState& st, Visit& visit, bool& go) const
    {
        if (st.size() >= opts_.max_vertices) return;
        while (go && !ext.empty()) {
            int w = ext.back();
            ext.pop_back();
            std::vector<int> next = ext;
            for (int u : ctx_->distinct_neighbors(w))
                if (u > root && allowed_[u] && !st.contains(u) && st.darts_into(u) == 0) next.push_back(u);
            st.push(w);
            Step s = st.size() >= opts_.min_vertices ? as_step(visit(st)) : Step::Continue;
            if (s == Step::Stop) go = false;
            if (s == Step::Continue) extend(root, std::move(next), st, visit, go);
            st.pop();
        }
    }

    const SubgraphContext* ctx_;
    EnumOptions opts_;
    std::vector<char> allowed_;
    std::vector<int> roots_;
};

// Shape predicates on the enumerator's current set, with reusable scratch.
// Results agree with is_simply_connected / classify_face_graph.
class ShapeTester {
public:
    explicit ShapeTester(const SubgraphContext& ctx);

    // Assumes the set is connected (enumerated sets always are).
    bool simply_connected(const EnumState& st);
    // Every vertex lies on a face of F(S), and F(S) is nonempty.
    bool face_graph(const EnumState& st) const;
    // S* connected (faces of F(S) joined across shared edges).
    bool interior_connected(const EnumState& st);
    // simply connected + face graph + S* connected; for simply connected face
    // graphs this is equivalent to the polygon definition.
    bool polygon(const EnumState& st);

private:
    const SubgraphContext* ctx_;
    std::vector<uint32_t> seen_;
    std::vector<int> label_;
    std::vector<int> queue_;
    std::vector<uint32_t> face_seen_;
    uint32_t clock_ = 0;
    bool any_frontier_ = false;
    uint32_t tick();
};

// Count of connected induced subgraphs with min..max vertices over the allowed set.
long long count_connected_subgraphs(const SubgraphContext& ctx, const EnumOptions& opts);

// Lexicographic order on sorted vertex lists (witness tie-break).
bool lex_less(const std::vector<int>& a, const std::vector<int>& b);

} // namespace isolab
