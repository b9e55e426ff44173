#pragma once

#include "isolab/rational.hpp"
#include "isolab/subgraphs.hpp"

#include <utility>
#include <vector>

namespace isolab {

// Piece is a partition part mixing leaves and branch paths.
enum class PartKind { Leaf, Branch, Piece };

const char* part_kind_name(PartKind k);

struct Part {
    PartKind kind = PartKind::Leaf;
    std::vector<int> vertices; // sorted
    std::vector<int> edges;    // sorted host edge ids
    std::vector<int> faces;    // leaf faces
    int attachment = -1;       // shared vertex with the union of earlier parts
    int shared = 0;            // size of that intersection
};

// Leaves (edge-connected components of F(S), as induced subgraphs) and branches
// (components of the edges lying on no face of F(S)), in greedy order: the next
// part holds the smallest uncovered dart leaving the union. A single vertex is
// one branch. Throws Error{NotSimplyConnected}.
std::vector<Part> find_parts(const SubgraphContext& ctx, const SubgraphView& s);

struct TreeNode {
    enum Tag { LeafNode, Untouched, Attachment } tag; // V1, V2, V3
    int value;                                       // leaf index or vertex id
};

struct ContractionTree {
    std::vector<Part> leaves;
    std::vector<std::vector<int>> attach;  // V^i per leaf
    std::vector<TreeNode> nodes;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> edge_host;            // host edge for S-edges, -1 for leaf links
    bool is_tree = false;
    std::vector<int> degree_one;           // B
    std::vector<int> branching;            // A: nodes of degree >= 3
    // Closures of the components of T minus A, ordered so every prefix union
    // is connected. Each entry lists tree edge indices.
    std::vector<std::vector<int>> paths;
    int vertex_boundary = 0;               // |d_v S|
    bool paths_bound_ok = false;           // m <= 2|d_v S|
    bool leaves_bound_ok = false;          // |B| <= |d_v S|
};

// Throws Error{NotSimplyConnected}.
ContractionTree contract(const SubgraphContext& ctx, const SubgraphView& s);

struct Partition {
    std::vector<Part> parts;
    Rational tau = 2;
    int vertex_boundary = 0;            // |d_v S|
    bool induced_prefixes = false;      // (b)
    bool single_vertex_meets = false;   // (c)
    bool count_bound = false;           // (d): n <= tau |d_v S|
    bool union_matches = false;         // parts reproduce S exactly, edge-disjoint
    std::vector<int> prefix_boundary;   // |d_v(S_1 u ... u S_i)|
    std::vector<int> part_boundary;     // |d_v S_i|
    bool prefix_inequality = false;     // |d_v U_i| >= |d_v U_{i-1}| + |d_v S_i| - 2
    bool pieces_shaped = false;         // every branch of a piece is a path, no vertex in 3 parts
    ContractionTree tree;

    bool certified() const
    {
        return induced_prefixes && single_vertex_meets && count_bound && union_matches && prefix_inequality &&
               tree.paths_bound_ok && tree.leaves_bound_ok;
    }
};

// Pieces from the path decomposition of contract(S); leaves already used by
// earlier paths are removed, edgeless pieces dropped. Throws Error{NotSimplyConnected}.
Partition partition(const SubgraphContext& ctx, const SubgraphView& s);

struct ConclusionReport {
    Rational c;                         // effective constant (>= 2 when branches occur)
    long long lhs = 0;                  // |V(S)|
    Rational rhs;                       // (1 + 2 tau) c |d_v S|
    bool holds = false;
    std::vector<Rational> part_ratio;   // |V(S_i)| / |d_v S_i|
};

// Throws Error{HypothesisFailed} when a part exceeds its bound: c for pieces
// containing a leaf, 2 for pure branches.
ConclusionReport certify_conclusion(const SubgraphContext& ctx, const Partition& p, const Rational& c);

struct GreedyReport {
    int parts = 0;
    int vertex_boundary = 0;
    bool single_vertex_meets = false; // each part meets the union in one vertex
    bool branches_are_paths = false;
    bool no_triple_points = false;
    bool third_bound = false;         // |d_v S| >= n/3
};

GreedyReport greedy_report(const SubgraphContext& ctx, const SubgraphView& s);

} // namespace isolab
