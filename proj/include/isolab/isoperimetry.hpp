#pragma once

#include "isolab/planar_map.hpp"
#include "isolab/rational.hpp"
#include "isolab/subgraphs.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isolab {

// iota: |dS|/Vol(S); j: |d_v S|/|V(S)|; kappa: |d_e S|/|F(S)|; jtilde: outer vertex boundary / |V(S)|
enum class IsoKind { Iota, J, Kappa, JTilde };

std::string iso_kind_name(IsoKind k);
IsoKind parse_iso_kind(const std::string& s);

// Throws Error{EmptyFaceSet} for kappa with F(S) empty, Error{TouchesTruncationBoundary}.
Rational ratio(const SubgraphContext& ctx, IsoKind kind, const SubgraphView& s);

// Same ratio from enumeration state; nullopt for kappa with F(S) empty.
std::optional<Ratio> state_ratio(IsoKind kind, const EnumState& st);

enum class SearchFamily { Connected, SimplyConnected };

struct EstimateOptions {
    SearchFamily family = SearchFamily::Connected;
    std::vector<char> allowed; // empty = interior mask
    int host_radius = -1;      // recorded only
};

struct IsoEstimate {
    IsoKind kind = IsoKind::J;
    bool found = false;
    Ratio value;
    std::vector<int> witness; // sorted; lexicographically smallest among minimizers
    int search_cap = 0;
    int host_radius = -1;
    long long searched = 0;
};

// Exact minimum of the ratio over connected interior subgraphs with at most
// search_cap vertices. Throws Error{CapExceeded} above kDefaultEnumerationCap.
IsoEstimate estimate(const SubgraphContext& ctx, IsoKind kind, int search_cap, const EstimateOptions& opts = {});

// All nonempty subsets of the allowed vertices (at most 20), optionally
// connected only. Independent of the enumerator; test oracle.
IsoEstimate brute_force_minimum(const SubgraphContext& ctx, IsoKind kind, bool connected_only,
                                const std::vector<char>& allowed = {});

struct JTildeReport {
    IsoEstimate j, jtilde;
    Rational j_min;           // min j-ratio
    Rational jtilde_image;    // m/(1+m) for m = min jtilde-ratio
    bool minima_equal = false;
    // S' = S + outer boundary: j(S') <= jt(S)/(1+jt(S)).
    long long grow_checked = 0, grow_failed = 0, grow_skipped = 0;
    // S'' = S - d_v S: jt(S'') <= j(S)/(1-j(S)).
    long long shrink_checked = 0, shrink_failed = 0, shrink_skipped = 0;
    std::vector<int> first_failure;
};

JTildeReport jtilde_identity_check(const SubgraphContext& ctx, int search_cap, const std::vector<char>& allowed = {});

struct DualTransferReport {
    long long polygons = 0;
    long long inequality_failures = 0; // sum deg f > 3|d_e S| + 6|F(S)|
    long long equality_cases = 0;
    Ratio c1;                          // max |F(S)| / |d_e S|
    Ratio c2;                          // max sum deg f / |d_e S|
    bool c2_within = true;             // c2 <= 6 c1 + 3
    long long bijection_failures = 0;  // |d_e S| != |d S*| in the dual
    IsoEstimate kappa_host, iota_dual;
    std::vector<int> first_failure;
};

// Throws Error{AssumptionViolated} when host or dual fails the standing assumption.
DualTransferReport dual_transfer_check(const PlanarMap& host, int search_cap, bool allow_violation = false);

} // namespace isolab
