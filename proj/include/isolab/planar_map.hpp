#pragma once

#include <map>
#include <string>
#include <vector>

namespace isolab {

struct FaceTable {
    std::vector<std::vector<int>> darts;    // dart cycle of each face, in tracing order
    std::vector<int> degree;                // cycle length
    std::vector<std::vector<int>> vertices; // origins along the cycle (multiset)
};

// Finite combinatorial map. Darts are half-edges; rotations list the outgoing
// darts of each vertex counterclockwise. Faces follow next(d) = rot_next(twin(d)).
class PlanarMap {
public:
    PlanarMap() = default;

    // Validates and traces faces. Throws Error{NonInvolutiveTwin, DisconnectedGraph,
    // EulerViolation, BadInput}.
    static PlanarMap build(std::vector<std::vector<int>> rotations, std::vector<int> twin,
                           int outer_face_dart);

    int num_vertices() const { return static_cast<int>(rotations_.size()); }
    int num_darts() const { return static_cast<int>(twin_.size()); }
    int num_edges() const { return num_darts() / 2; }
    int num_faces() const { return static_cast<int>(faces_.darts.size()); }

    int origin(int d) const { return origin_[d]; }
    int head(int d) const { return origin_[twin_[d]]; }
    int twin(int d) const { return twin_[d]; }
    int rot_next(int d) const { return rot_next_[d]; }
    int rot_prev(int d) const { return rot_prev_[d]; }
    int face_next(int d) const { return rot_next_[twin_[d]]; }
    int face_of(int d) const { return dart_face_[d]; }
    int edge_of(int d) const { return dart_edge_[d]; }
    int edge_dart(int e) const { return edge_dart_[e]; }

    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    const std::vector<int>& twins() const { return twin_; }
    int degree(int v) const { return static_cast<int>(rotations_[v].size()); }

    const FaceTable& faces() const { return faces_; }
    int face_degree(int f) const { return faces_.degree[f]; }
    int outer_face() const { return outer_face_; }
    int outer_face_dart() const { return outer_dart_; }
    bool is_bounded(int f) const { return f != outer_face_; }

    // Neighbors with multiplicity, in rotation order.
    const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }

    bool is_interior(int v) const { return interior_[v] != 0; }
    const std::vector<char>& interior_mask() const { return interior_; }
    bool has_explicit_interior() const { return explicit_interior_; }
    void set_interior(const std::vector<int>& vertices);
    void set_interior_mask(std::vector<char> mask);

    // Bounded face all of whose vertices are interior.
    bool is_interior_face(int f) const;

    std::vector<std::string>& labels() { return labels_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::map<std::string, std::vector<int>>& groups() { return groups_; }
    const std::map<std::string, std::vector<int>>& groups() const { return groups_; }
    // Vertices carrying exactly this label.
    std::vector<int> find_label(const std::string& label) const;

    // Serialized FamilySpec of the generator that produced the map, or empty.
    const std::string& provenance() const { return provenance_; }
    void set_provenance(std::string json) { provenance_ = std::move(json); }

private:
    std::vector<std::vector<int>> rotations_;
    std::vector<int> twin_, origin_, rot_next_, rot_prev_, dart_face_, dart_edge_, edge_dart_;
    std::vector<std::vector<int>> neighbors_;
    FaceTable faces_;
    int outer_face_ = -1;
    int outer_dart_ = -1;
    std::vector<char> interior_;
    bool explicit_interior_ = false;
    std::vector<std::string> labels_;
    std::map<std::string, std::vector<int>> groups_;
    std::string provenance_;
};

// Builds simple embedded graphs from counterclockwise neighbor lists.
class EmbeddingBuilder {
public:
    int add_vertex();
    int num_vertices() const { return static_cast<int>(rot_.size()); }
    std::vector<int>& rotation(int v) { return rot_[v]; }
    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    // Outer face is the face traced from the dart from -> to.
    PlanarMap build(int outer_from, int outer_to) const;

private:
    std::vector<std::vector<int>> rot_;
};

struct DualMap {
    PlanarMap map;
    // Primal edge id -> dual edge id (dual darts reuse primal dart ids).
    std::vector<int> edge_bijection;
    // Primal face id of each dual vertex is the identity; dual face -> primal vertex.
    std::vector<int> face_to_vertex;
};

// Dual vertex f has the darts of face f as its rotation, in tracing order.
// Dual interior: bounded faces whose vertices are all interior.
DualMap dual(const PlanarMap& map);

struct Classification {
    bool simple = false;
    bool dual_simple = false;
    bool proper = false;
    bool normal = false;
    int min_vertex_degree = 0;
    int min_face_degree = 0;
    int max_face_degree = 0;
};

Classification classify(const PlanarMap& map);

// Standing assumption: simple, dual simple, vertex and face degrees >= 3 on the interior.
bool satisfies_standing_assumption(const Classification& c);

// Combinatorial map isomorphism (orientation preserving), rooted search.
bool isomorphic(const PlanarMap& a, const PlanarMap& b);

// Unit-length BFS distances from a source; -1 for unreachable.
std::vector<int> bfs_distances(const PlanarMap& map, int source);

} // namespace isolab
