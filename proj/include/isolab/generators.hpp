#pragma once

#include "isolab/planar_map.hpp"

#include <string>
#include <vector>

namespace isolab {

// Combinatorial ball of the (3,k) tessellation: layer 0 is a single vertex,
// layer r+1 wraps layer r. Interior = layers 0..radius-1.
PlanarMap triangulation_deg_k(int k, int radius);

// The gadget attached by lambda_attachment, on its own: K5 minus the edge a-v4,
// drawn with outer triangle (a, v1, v2). Vertex 0 is a.
PlanarMap lambda_gadget();

struct LambdaParams {
    int k = 7;
    int radius = 4;
    int attach_layer = 2;
    std::vector<int> schedule{8, 10, 12}; // n_k = degree of v_k in the base triangulation
};

// Base deg-k triangulation with vertices v_k of degree n_k; every face at v_k
// receives one gadget attached at v_k. Groups "S_k" hold v_k plus its gadgets.
PlanarMap lambda_attachment(const LambdaParams& p);

struct ChainParams {
    int lo = -3;
    int hi = 3;
    int layers = 2;       // completion layers around the chain
    int fill_degree = 7;  // target degree of b vertices and added vertices
};

// Minimum hub degree used for o_n.
int chain_hub_degree(int n);

// Blocks S_n for n in [lo-1, hi+1] glued at o_n, completed by triangulated layers.
// Labels: "o_n", "b_j^n", "v_k^n"; groups "S_n".
PlanarMap nonnormal_chain(const ChainParams& p);

struct G1Params {
    int radius = 8;
    std::vector<int> multiplicities{1, 2, 3};
    int spacing = 10;
};

// Deg-7 triangulation where edge e_n is replaced by n parallel strands, each
// subdivided by the segment from c_n to d_n. Groups "S_n".
PlanarMap g1_multiedge(const G1Params& p);

// width x height unit squares, vertices (x, y) numbered row-major.
PlanarMap square_lattice(int width, int height);

struct G2Params {
    int radius = 0;                 // diamond truncation |x|+|y| <= radius (squares fully inside)
    int block = 0;                  // or square block of block x block unit squares around the origin
    std::vector<long long> ell;     // explicit ell_1, ell_2, ... (last value repeats)
    bool auto_rule = false;         // ell_{n+1} = C_n starting from ell_1 (default 1)
};

struct G2Certificate {
    std::vector<long long> ell;        // ell_1..ell_N used
    std::vector<long long> c_formula;  // C_n for n = 1..N-1
    std::vector<long long> c_counted;  // vertices counted in the generated map (-1 when region not covered)
    bool rule_holds = true;            // ell_{n+1} >= C_n for all recorded n
    bool counts_match = true;
    int max_face_degree = 0;
};

// C_n: vertices of G2 in |x|+|y| < n + 1/10.
long long g2_region_count(int n, const std::vector<long long>& ell);

// Square lattice with E_n edges replaced by ell_n strands and the lines
// x = m+1/2, y = m+1/2 drawn through them. Labels: "p_<L1>" lattice points,
// "m_<n>" strand middles of E_n edges, "c_<L1>" square centers.
PlanarMap g2_multiedge_lattice(const G2Params& p, G2Certificate* cert = nullptr);

// Builds any family from a FamilySpec JSON, e.g.
// {"family":"nonnormal_chain","lo":-3,"hi":3}. Output embeds the spec.
PlanarMap generate_family(const std::string& spec_json);

// Straight-line planar drawing -> map; rotations from angular order.
// The outer face is the walk of largest signed area.
PlanarMap map_from_drawing(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::pair<int, int>>& edges);

} // namespace isolab
