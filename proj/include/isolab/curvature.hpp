#pragma once

#include "isolab/planar_map.hpp"
#include "isolab/rational.hpp"
#include "isolab/subgraphs.hpp"

#include <string>
#include <vector>

namespace isolab {

enum class CurvatureKind { Phi, Psi, Chi, Chi1 };

std::string kind_name(CurvatureKind k);
CurvatureKind parse_curvature_kind(const std::string& s);

// Exact curvatures of one host. Carriers must be interior; the standing
// assumption (simple, dual simple, degrees >= 3) is checked once unless
// allow_violation is set.
class Curvature {
public:
    explicit Curvature(const PlanarMap& map, bool allow_violation = false);
    Curvature(PlanarMap&&, bool = false) = delete;

    const PlanarMap& map() const { return *map_; }

    // 1/deg(u) + 1/deg(w) + 1/deg(f1) + 1/deg(f2) - 1
    Rational phi(int edge) const;
    // 1 - deg(v)/2 + sum over corners of 1/deg(face)
    Rational psi(int v) const;
    // 1 - deg(f)/2 + sum over the boundary walk of 1/deg(w)
    Rational chi(int face) const;

    bool edge_interior(int e) const;
    bool face_interior(int f) const;

    // psi(v) * scale as an integer; scale is a common denominator of all
    // interior vertex curvatures.
    long long psi_scale() const { return scale_; }
    long long psi_scaled(int v) const { return psi_scaled_[v]; }

private:
    const PlanarMap* map_;
    long long scale_ = 1;
    std::vector<long long> psi_scaled_;
};

struct AverageReport {
    Rational mean;
    int support_size = 0;
    std::vector<int> witness; // carrier ids
};

// Exact mean over carriers (edges, vertices, or faces by kind; Chi1 reads faces).
// Throws Error{EmptySet}.
AverageReport average(const Curvature& c, CurvatureKind kind, const std::vector<int>& carriers);

// Means over combinatorial balls B(center, r) for each radius: psi over the ball's
// vertices, phi over its edges, chi over F(ball), chi1 over the faces of the
// filled ball when it is a polygon. A lower estimate of the upper average only.
// Throws Error{RadiusExceedsInterior}, Error{BadInput} on non-increasing radii.
std::vector<AverageReport> upper_average_estimate(const Curvature& c, CurvatureKind kind,
                                                  const std::vector<int>& radii, int center = -1);

// Vertex used as the default ball center: "center" label, else the interior
// vertex of largest distance to the non-interior set (smallest id on ties).
int default_center(const PlanarMap& map);

struct EulerBounds {
    bool facebound_applicable = false; // needs |V(S)| >= 2: every vertex carries an edge of S
    long long edges = 0;
    long long facebound_rhs = 0; // 2|d_v S| + 3|F(S)| - 3
    bool facebound_ok = false;
    bool edgenumber_applicable = false;
    long long edgenumber_lhs = 0; // 2|E(S)|
    long long edgenumber_rhs = 0; // sum deg f + |d_e S|
    bool edgenumber_ok = false;
};

// Throws Error{PreconditionNotMet} when S is not simply connected.
EulerBounds verify_euler_bounds(const SubgraphContext& ctx, const SubgraphView& s);

struct WitnessSearch {
    int cap = 0, min_size = 0;
    // Max over connected interior T with min_size <= |T| <= cap of
    // sum over T of (6 psi(v) + 1), scaled by psi_scale(). Every such T has
    // mean psi <= -1/6 iff best_weight <= 0.
    long long best_weight = 0;
    bool found = false;
    std::vector<int> witness; // sorted; attains best_weight
    long long visited = 0, pruned = 0;
    bool all_hold() const { return !found || best_weight <= 0; }
};

// Sets of exactly min_size are enumerated; larger sets are grown from the
// smallest positive-weight vertex by paths of non-positive vertices ending in
// a positive one, which reaches a heaviest set of every size class, with
// bounds from the cheapest route to a positive vertex. prune = false
// enumerates every connected set instead.
WitnessSearch upper_average_witness_search(const Curvature& c, int cap, int min_size = 3, bool prune = true);

struct GapViolation {
    int vertex;
    Rational psi;
};

// Interior vertices with -1/1806 < psi(v) < 0.
std::vector<GapViolation> curvature_gap_violations(const Curvature& c);

} // namespace isolab
