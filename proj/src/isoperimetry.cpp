#include "isolab/isoperimetry.hpp"

#include "isolab/error.hpp"
#include "isolab/parallel.hpp"

#include <algorithm>

namespace isolab {

std::string iso_kind_name(IsoKind k)
{
    switch (k) {
    case IsoKind::Iota: return "iota";
    case IsoKind::J: return "j";
    case IsoKind::Kappa: return "kappa";
    case IsoKind::JTilde: return "jtilde";
    }
    return "?";
}

IsoKind parse_iso_kind(const std::string& s)
{
    if (s == "iota" || s == "i") return IsoKind::Iota;
    if (s == "j") return IsoKind::J;
    if (s == "kappa" || s == "k") return IsoKind::Kappa;
    if (s == "jtilde" || s == "jt") return IsoKind::JTilde;
    throw Error(Errc::BadFlags, "unknown isoperimetric kind " + s);
}

namespace {

Ratio report_ratio(IsoKind kind, const BoundaryReport& b)
{
    switch (kind) {
    case IsoKind::Iota: return {static_cast<int64_t>(b.edge_boundary.size()), b.volume};
    case IsoKind::J: return {static_cast<int64_t>(b.vertex_boundary.size()), b.num_vertices};
    case IsoKind::Kappa: return {static_cast<int64_t>(b.surrounding_edges.size()), b.num_faces};
    case IsoKind::JTilde: return {static_cast<int64_t>(b.outer_vertex_boundary.size()), b.num_vertices};
    }
    return {};
}

struct Best {
    bool found = false;
    Ratio value;
    std::vector<int> witness;

    void offer(const Ratio& r, const EnumState& st)
    {
        if (found && r > value) return;
        auto w = st.sorted_vertices();
        if (found && r == value && !lex_less(w, witness)) return;
        found = true;
        value = r;
        witness = std::move(w);
    }
    void merge(const Best& o)
    {
        if (!o.found) return;
        if (!found || o.value < value || (o.value == value && lex_less(o.witness, witness))) *this = o;
    }
};

} // namespace

Rational ratio(const SubgraphContext& ctx, IsoKind kind, const SubgraphView& s)
{
    BoundaryReport b = boundaries(ctx, s, true);
    if (kind == IsoKind::Kappa && b.num_faces == 0) throw Error(Errc::EmptyFaceSet, "kappa ratio needs F(S) nonempty");
    return report_ratio(kind, b).value();
}

std::optional<Ratio> state_ratio(IsoKind kind, const EnumState& st)
{
    switch (kind) {
    case IsoKind::Iota: return Ratio{st.edge_boundary(), st.volume()};
    case IsoKind::J: return Ratio{st.vertex_boundary(), st.size()};
    case IsoKind::Kappa:
        if (st.num_faces() == 0) return std::nullopt;
        return Ratio{st.surrounding_edges(), st.num_faces()};
    case IsoKind::JTilde: return Ratio{st.outer_vertex_boundary(), st.size()};
    }
    return std::nullopt;
}

IsoEstimate estimate(const SubgraphContext& ctx, IsoKind kind, int search_cap, const EstimateOptions& opts)
{
    EnumOptions eo;
    eo.max_vertices = search_cap;
    eo.allowed = opts.allowed;
    ConnectedEnumerator en(ctx, eo);
    const auto& roots = en.roots();
    const int workers = worker_count();
    std::vector<Best> best(workers);
    std::vector<long long> searched(workers, 0);
    parallel_for(static_cast<int>(roots.size()), [&](int w, int i) {
        EnumState st(ctx);
        ShapeTester shape(ctx);
        en.run_root(roots[i], st, [&](const EnumState& s) {
            if (opts.family == SearchFamily::SimplyConnected && !shape.simply_connected(s)) return true;
            ++searched[w];
            if (auto r = state_ratio(kind, s)) best[w].offer(*r, s);
            return true;
        });
    });
    Best all;
    for (const auto& b : best) all.merge(b);
    IsoEstimate out;
    out.kind = kind;
    out.found = all.found;
    out.value = all.value;
    out.witness = std::move(all.witness);
    out.search_cap = search_cap;
    out.host_radius = opts.host_radius;
    for (long long c : searched) out.searched += c;
    return out;
}

IsoEstimate brute_force_minimum(const SubgraphContext& ctx, IsoKind kind, bool connected_only,
                                const std::vector<char>& allowed_in)
{
    const PlanarMap& map = ctx.map();
    const auto& allowed = allowed_in.empty() ? map.interior_mask() : allowed_in;
    std::vector<int> pool;
    for (int v = 0; v < map.num_vertices(); ++v)
        if (allowed[v]) pool.push_back(v);
    if (pool.size() > 20) throw Error(Errc::CapExceeded, "brute force supports at most 20 vertices");
    IsoEstimate out;
    out.kind = kind;
    out.search_cap = static_cast<int>(pool.size());
    const uint32_t total = 1u << pool.size();
    for (uint32_t mask = 1; mask < total; ++mask) {
        std::vector<int> verts;
        for (size_t i = 0; i < pool.size(); ++i)
            if (mask >> i & 1u) verts.push_back(pool[i]);
        SubgraphView s = make_view(ctx, verts);
        if (connected_only && !is_connected(ctx, s)) continue;
        BoundaryReport b = boundaries(ctx, s, false);
        if (kind == IsoKind::Kappa && b.num_faces == 0) continue;
        ++out.searched;
        Ratio r = report_ratio(kind, b);
        if (!out.found || r < out.value || (r == out.value && lex_less(s.vertices, out.witness))) {
            out.found = true;
            out.value = r;
            out.witness = s.vertices;
        }
    }
    return out;
}

JTildeReport jtilde_identity_check(const SubgraphContext& ctx, int search_cap, const std::vector<char>& allowed)
{
    const PlanarMap& map = ctx.map();
    JTildeReport rep;
    EstimateOptions opts;
    opts.allowed = allowed;
    rep.j = estimate(ctx, IsoKind::J, search_cap, opts);
    rep.jtilde = estimate(ctx, IsoKind::JTilde, search_cap, opts);
    if (!rep.j.found || !rep.jtilde.found) throw Error(Errc::EmptySet, "no subgraph to search");
    rep.j_min = rep.j.value.value();
    Rational m = rep.jtilde.value.value();
    rep.jtilde_image = m / (1 + m);
    rep.minima_equal = rep.j_min == rep.jtilde_image;

    // Pointwise companions. Boundaries are read in the truncation; companions
    // that reach a non-interior vertex cannot be evaluated and are skipped.
    EnumOptions eo;
    eo.max_vertices = search_cap;
    eo.allowed = allowed;
    ConnectedEnumerator en(ctx, eo);
    std::vector<char> in(map.num_vertices(), 0);
    en.run([&](const EnumState& st) {
        const auto& verts = st.vertices();
        int jt_num = st.outer_vertex_boundary();
        int j_num = st.vertex_boundary();
        int n = st.size();

        std::vector<int> grown = verts;
        for (int v : verts)
            for (int w : ctx.distinct_neighbors(v))
                if (!st.contains(w) && !in[w]) {
                    in[w] = 1;
                    grown.push_back(w);
                }
        for (int w : grown) in[w] = 0;
        bool grown_ok = std::all_of(grown.begin(), grown.end(), [&](int v) { return map.is_interior(v); });
        if (!grown_ok) {
            ++rep.grow_skipped;
        } else {
            SubgraphView g = make_view(ctx, grown);
            BoundaryReport b = boundaries(ctx, g, true);
            ++rep.grow_checked;
            // j(S') <= jt/(1+jt) = jt_num/(n + jt_num)
            Ratio lhs{static_cast<int64_t>(b.vertex_boundary.size()), b.num_vertices};
            if (lhs > Ratio{jt_num, n + jt_num}) {
                ++rep.grow_failed;
                if (rep.first_failure.empty()) rep.first_failure = st.sorted_vertices();
            }
        }

        std::vector<int> shrunk;
        for (int v : verts)
            if (st.darts_into(v) == map.degree(v)) shrunk.push_back(v);
        if (shrunk.empty()) {
            ++rep.shrink_skipped;
        } else {
            SubgraphView s = make_view(ctx, shrunk);
            BoundaryReport b = boundaries(ctx, s, true);
            ++rep.shrink_checked;
            // jt(S'') <= j/(1-j) = j_num/(n - j_num)
            Ratio lhs{static_cast<int64_t>(b.outer_vertex_boundary.size()), b.num_vertices};
            if (lhs > Ratio{j_num, n - j_num}) {
                ++rep.shrink_failed;
                if (rep.first_failure.empty()) rep.first_failure = st.sorted_vertices();
            }
        }
        return true;
    });
    return rep;
}

DualTransferReport dual_transfer_check(const PlanarMap& host, int search_cap, bool allow_violation)
{
    DualMap dm = dual(host);
    if (!allow_violation) {
        if (!satisfies_standing_assumption(classify(host)))
            throw Error(Errc::AssumptionViolated, "host fails the standing assumption");
        if (!satisfies_standing_assumption(classify(dm.map)))
            throw Error(Errc::AssumptionViolated, "dual fails the standing assumption");
    }
    SubgraphContext ctx(host);
    SubgraphContext dctx(dm.map);
    DualTransferReport rep;
    rep.c1 = {0, 1};
    rep.c2 = {0, 1};

    EnumOptions eo;
    eo.max_vertices = search_cap;
    ConnectedEnumerator en(ctx, eo);
    ShapeTester shape(ctx);
    std::vector<char> full(host.num_faces(), 0);
    en.run([&](const EnumState& st) {
        if (!shape.polygon(st)) return true;
        ++rep.polygons;
        long long de = st.surrounding_edges();
        long long nf = st.num_faces();
        long long degsum = 0;
        std::vector<int> faces;
        for (int v : st.vertices())
            for (int f : ctx.vertex_faces(v))
                if (st.face_full(f) && !full[f]) {
                    full[f] = 1;
                    faces.push_back(f);
                    degsum += host.face_degree(f);
                }
        long long rhs = 3 * de + 6 * nf;
        if (degsum > rhs) {
            ++rep.inequality_failures;
            if (rep.first_failure.empty()) rep.first_failure = st.sorted_vertices();
        }
        if (degsum == rhs) ++rep.equality_cases;
        if (de > 0) {
            rep.c1 = std::max(rep.c1, Ratio{nf, de});
            rep.c2 = std::max(rep.c2, Ratio{degsum, de});
        }
        // |d S*| in the dual: dual edges leaving the face set.
        long long dual_boundary = 0;
        for (int f : faces)
            for (int d : dm.map.rotation(f))
                if (!full[dm.map.head(d)]) ++dual_boundary;
        if (dual_boundary != de) {
            ++rep.bijection_failures;
            if (rep.first_failure.empty()) rep.first_failure = st.sorted_vertices();
        }
        for (int f : faces) full[f] = 0;
        return true;
    });
    // c2 <= 6 c1 + 3 over a common denominator.
    rep.c2_within = rep.c2.value() <= 6 * rep.c1.value() + 3;
    rep.kappa_host = estimate(ctx, IsoKind::Kappa, search_cap);
    rep.iota_dual = estimate(dctx, IsoKind::Iota, search_cap);
    return rep;
}

} // namespace isolab
