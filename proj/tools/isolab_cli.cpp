#include "isolab/acceptance.hpp"
#include "isolab/curvature.hpp"
#include "isolab/decomposition.hpp"
#include "isolab/error.hpp"
#include "isolab/generators.hpp"
#include "isolab/hyperbolicity.hpp"
#include "isolab/isoperimetry.hpp"
#include "isolab/map_io.hpp"
#include "isolab/planar_map.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

using namespace isolab;
using json = nlohmann::json;

namespace {

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") std::cout << text;
    else write_file(path, text);
}

std::string join(const std::vector<int>& v, char sep = ' ')
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

std::pair<int, int> parse_range(const std::string& s)
{
    auto pos = s.find("..");
    if (pos == std::string::npos) throw Error(Errc::BadFlags, "range must look like lo..hi: " + s);
    try {
        return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
    } catch (const std::exception&) {
        throw Error(Errc::BadFlags, "bad range " + s);
    }
}

// Host regenerated from its embedded family spec with a different size.
PlanarMap resize_host(const PlanarMap& host, int size)
{
    if (host.provenance().empty()) throw Error(Errc::BadFlags, "host has no family spec; sweeps need a generated host");
    json spec = json::parse(host.provenance());
    const std::string fam = spec.at("family");
    if (fam == "square_lattice") {
        spec["width"] = size;
        spec["height"] = size;
    } else if (fam == "g2_multiedge_lattice" && spec.contains("block")) {
        spec["block"] = size;
    } else if (spec.contains("radius")) {
        spec["radius"] = size;
    } else {
        throw Error(Errc::BadFlags, "family " + fam + " has no size parameter");
    }
    return generate_family(spec.dump());
}

int host_size(const PlanarMap& host)
{
    if (host.provenance().empty()) return -1;
    json spec = json::parse(host.provenance());
    if (spec.contains("radius") && spec["radius"].get<int>() > 0) return spec["radius"];
    if (spec.contains("block")) return spec["block"];
    if (spec.contains("width")) return spec["width"];
    return -1;
}

struct GenerateArgs {
    std::string family, spec, out, n_range;
    std::optional<int> k, radius, layers, fill_degree, attach_layer, spacing, width, height, block;
    std::vector<int> schedule, multiplicities;
    std::vector<long long> ell;
    bool auto_rule = false;
};

int cmd_generate(const GenerateArgs& a)
{
    json spec;
    if (!a.spec.empty()) {
        try {
            spec = json::parse(a.spec);
        } catch (const json::exception& e) {
            throw Error(Errc::BadFlags, std::string("--spec: ") + e.what());
        }
    } else {
        if (a.family.empty()) throw Error(Errc::BadFlags, "give --family or --spec");
        spec["family"] = a.family;
        auto put = [&](const char* key, const std::optional<int>& v) {
            if (v) spec[key] = *v;
        };
        put("k", a.k);
        put("radius", a.radius);
        put("layers", a.layers);
        put("fill_degree", a.fill_degree);
        put("attach_layer", a.attach_layer);
        put("spacing", a.spacing);
        put("width", a.width);
        put("height", a.height);
        put("block", a.block);
        if (!a.n_range.empty()) {
            auto [lo, hi] = parse_range(a.n_range);
            spec["lo"] = lo;
            spec["hi"] = hi;
        }
        if (!a.schedule.empty()) spec["schedule"] = a.schedule;
        if (!a.multiplicities.empty()) spec["multiplicities"] = a.multiplicities;
        if (!a.ell.empty()) spec["ell"] = a.ell;
        if (a.auto_rule) spec["auto_rule"] = true;
    }
    PlanarMap m = generate_family(spec.dump());
    emit(map_to_json(m) + "\n", a.out);
    return 0;
}

int cmd_classify(const std::string& host_path)
{
    PlanarMap m = load_map(host_path);
    Classification c = classify(m);
    int interior = 0;
    for (char x : m.interior_mask()) interior += x != 0;
    json j{{"vertices", m.num_vertices()},
           {"edges", m.num_edges()},
           {"faces", m.num_faces()},
           {"interior_vertices", interior},
           {"simple", c.simple},
           {"dual_simple", c.dual_simple},
           {"proper", c.proper},
           {"normal", c.normal},
           {"min_vertex_degree", c.min_vertex_degree},
           {"min_face_degree", c.min_face_degree},
           {"max_face_degree", c.max_face_degree},
           {"standing_assumption", satisfies_standing_assumption(c)}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

struct CurvatureArgs {
    std::string host, kind = "psi", format = "csv", out;
    std::vector<int> radii;
    int center = -1;
    bool allow_violation = false;
};

int cmd_curvature(const CurvatureArgs& a)
{
    PlanarMap m = load_map(a.host);
    Curvature c(m, a.allow_violation);
    CurvatureKind kind = parse_curvature_kind(a.kind);
    std::ostringstream os;
    if (!a.radii.empty()) {
        auto rows = upper_average_estimate(c, kind, a.radii, a.center);
        json j = json::array();
        if (a.format == "csv") os << "radius,support,mean\n";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (a.format == "csv") os << a.radii[i] << "," << rows[i].support_size << "," << to_string(rows[i].mean) << "\n";
            else j.push_back({{"radius", a.radii[i]}, {"support", rows[i].support_size}, {"mean", to_string(rows[i].mean)}});
        }
        if (a.format != "csv") os << j.dump(2) << "\n";
        emit(os.str(), a.out);
        return 0;
    }
    struct Row {
        int id;
        std::string label;
        Rational value;
    };
    std::vector<Row> rows;
    auto label = [&](int v) { return m.labels().empty() ? std::string() : m.labels()[v]; };
    switch (kind) {
    case CurvatureKind::Psi:
        for (int v = 0; v < m.num_vertices(); ++v)
            if (m.is_interior(v)) rows.push_back({v, label(v), c.psi(v)});
        break;
    case CurvatureKind::Phi:
        for (int e = 0; e < m.num_edges(); ++e)
            if (c.edge_interior(e)) rows.push_back({e, "", c.phi(e)});
        break;
    case CurvatureKind::Chi:
    case CurvatureKind::Chi1:
        for (int f = 0; f < m.num_faces(); ++f)
            if (c.face_interior(f)) rows.push_back({f, "", c.chi(f)});
        break;
    }
    if (a.format == "csv") {
        os << "id,label,value\n";
        for (const auto& r : rows) os << r.id << "," << r.label << "," << to_string(r.value) << "\n";
    } else if (a.format == "json") {
        json j = json::array();
        for (const auto& r : rows) j.push_back({{"id", r.id}, {"label", r.label}, {"value", to_string(r.value)}});
        os << j.dump(2) << "\n";
    } else {
        throw Error(Errc::BadFlags, "format must be csv or json");
    }
    emit(os.str(), a.out);
    return 0;
}

struct IsoArgs {
    std::string host, kind = "j", family = "connected", out;
    int cap = 8;
    std::vector<int> sweep;
};

int cmd_iso(const IsoArgs& a)
{
    PlanarMap base = load_map(a.host);
    IsoKind kind = parse_iso_kind(a.kind);
    EstimateOptions opts;
    if (a.family == "connected") opts.family = SearchFamily::Connected;
    else if (a.family == "simply-connected") opts.family = SearchFamily::SimplyConnected;
    else throw Error(Errc::BadFlags, "family must be connected or simply-connected");
    std::ostringstream os;
    os << "radius,cap,value_num,value_den,witness\n";
    auto row = [&](const PlanarMap& m, int radius) {
        SubgraphContext ctx(m);
        opts.host_radius = radius;
        IsoEstimate e = estimate(ctx, kind, a.cap, opts);
        if (!e.found) throw Error(Errc::EmptySet, "no subgraph to search");
        Rational v = e.value.value();
        os << radius << "," << a.cap << "," << numerator(v) << "," << denominator(v) << "," << join(e.witness) << "\n";
    };
    if (a.sweep.empty()) row(base, host_size(base));
    for (int r : a.sweep) row(resize_host(base, r), r);
    emit(os.str(), a.out);
    return 0;
}

json part_json(const Part& p)
{
    return json{{"kind", part_kind_name(p.kind)},
                {"vertices", p.vertices},
                {"edges", p.edges},
                {"faces", p.faces},
                {"attachment", p.attachment},
                {"shared", p.shared}};
}

int cmd_partition(const std::string& host, const std::string& sub, const std::string& out)
{
    PlanarMap m = load_map(host);
    SubgraphContext ctx(m);
    SubgraphView s = make_view(ctx, load_subgraph(sub));
    Partition p = partition(ctx, s);
    json j;
    for (const auto& part : p.parts) j["parts"].push_back(part_json(part));
    j["tau"] = to_string(p.tau);
    j["vertex_boundary"] = p.vertex_boundary;
    j["conditions"] = {{"induced_prefixes", p.induced_prefixes},
                       {"single_vertex_meets", p.single_vertex_meets},
                       {"count_bound", p.count_bound},
                       {"union_matches", p.union_matches},
                       {"prefix_inequality", p.prefix_inequality},
                       {"pieces_shaped", p.pieces_shaped},
                       {"tree_paths_bound", p.tree.paths_bound_ok},
                       {"tree_leaves_bound", p.tree.leaves_bound_ok},
                       {"certified", p.certified()}};
    j["prefix_boundary"] = p.prefix_boundary;
    j["part_boundary"] = p.part_boundary;
    j["tree"] = {{"nodes", p.tree.nodes.size()},
                 {"edges", p.tree.edges.size()},
                 {"is_tree", p.tree.is_tree},
                 {"degree_one", p.tree.degree_one.size()},
                 {"branching", p.tree.branching.size()},
                 {"paths", p.tree.paths.size()}};
    emit(j.dump(2) + "\n", out);
    return 0;
}

struct HyperArgs {
    std::string host, mode = "thinness", j, out;
    std::vector<int> sweep;
    int cap = kDefaultThinnessCap;
    int center = -1;
    int sampled = 0;
};

int cmd_hyperbolicity(const HyperArgs& a, uint64_t seed)
{
    PlanarMap base = load_map(a.host);
    std::ostringstream os;
    if (a.mode == "thinness") {
        os << "radius,delta,a,b,c,x\n";
        auto row = [&](const PlanarMap& m, int r) {
            ThinnessReport t = a.sampled > 0 ? thinness_sampled(graph_of(m), a.sampled, seed) : thinness_all(m, a.cap);
            os << r << "," << t.delta << "," << t.a << "," << t.b << "," << t.c << "," << t.x << "\n";
        };
        if (a.sweep.empty()) row(base, host_size(base));
        for (int r : a.sweep) row(resize_host(base, r), r);
    } else if (a.mode == "detour") {
        if (a.sweep.empty()) throw Error(Errc::BadFlags, "detour mode needs --sweep t1,t2,...");
        int center = a.center >= 0 ? a.center : default_center(base);
        std::vector<DetourProbe> probes = detour_growth(base, center, a.sweep);
        std::optional<Rational> j;
        if (!a.j.empty()) j = parse_rational(a.j);
        os << "t,detour,bound,margin\n";
        for (const auto& p : probes) {
            os << p.t << "," << p.detour << ",";
            if (j && p.t >= 12) {
                GrowthReport g = growth_bound_check(base, *j, {p});
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6g,%.6g", g.checks[0].bound, g.checks[0].margin);
                os << buf;
            } else {
                os << ",";
            }
            os << "\n";
        }
    } else {
        throw Error(Errc::BadFlags, "mode must be thinness or detour");
    }
    emit(os.str(), a.out);
    return 0;
}

int cmd_dual(const std::string& host, const std::string& out)
{
    PlanarMap m = load_map(host);
    emit(map_to_json(dual(m).map) + "\n", out);
    return 0;
}

int cmd_export(const std::string& host, const std::string& format, const std::string& out)
{
    PlanarMap m = load_map(host);
    if (format == "svg") emit(to_svg(m), out);
    else if (format == "dot") emit(to_dot(m), out);
    else if (format == "json") emit(map_to_json(m) + "\n", out);
    else throw Error(Errc::BadFlags, "format must be svg, dot or json");
    return 0;
}

int cmd_verify(const std::string& suite, const std::vector<int>& only, const std::string& report, uint64_t seed)
{
    if (suite != "paper") throw Error(Errc::BadFlags, "unknown suite " + suite);
    SuiteOptions opts;
    opts.seed = seed;
    opts.only = only;
    opts.on_result = [](const CriterionResult& r) {
        std::fprintf(stderr, "[%2d] %s %.2fs\n", r.id, r.pass ? "pass" : "FAIL", r.seconds);
    };
    SuiteReport rep = run_acceptance(opts);
    std::cout << report_table(rep);
    if (!report.empty()) write_file(report, report_json(rep) + "\n");
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Isoperimetry and curvature experiments on planar graphs"};
    app.require_subcommand(1);
    uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for sampled searches")->capture_default_str();

    GenerateArgs gen;
    auto* g = app.add_subcommand("generate", "Generate a host family");
    g->add_option("--family", gen.family, "triangulation_deg_k, lambda_attachment, nonnormal_chain, g1_multiedge, "
                                          "square_lattice, g2_multiedge_lattice, lambda_gadget");
    g->add_option("--spec", gen.spec, "Family spec as JSON");
    g->add_option("--k", gen.k);
    g->add_option("--radius", gen.radius);
    g->add_option("--n-range", gen.n_range, "lo..hi for nonnormal_chain");
    g->add_option("--layers", gen.layers);
    g->add_option("--fill-degree", gen.fill_degree);
    g->add_option("--attach-layer", gen.attach_layer);
    g->add_option("--schedule", gen.schedule)->delimiter(',');
    g->add_option("--multiplicities", gen.multiplicities)->delimiter(',');
    g->add_option("--spacing", gen.spacing);
    g->add_option("--width", gen.width);
    g->add_option("--height", gen.height);
    g->add_option("--block", gen.block);
    g->add_option("--ell", gen.ell)->delimiter(',');
    g->add_flag("--auto-rule", gen.auto_rule);
    g->add_option("--out", gen.out, "Output file (stdout by default)");

    std::string host, out, format = "svg", subgraph;
    auto* cl = app.add_subcommand("classify", "Simple / proper / normal flags and degree ranges");
    cl->add_option("--host", host)->required();

    CurvatureArgs cur;
    auto* cu = app.add_subcommand("curvature", "Exact curvature per carrier");
    cu->add_option("--host", cur.host)->required();
    cu->add_option("--kind", cur.kind, "phi, psi, chi, chi1")->capture_default_str();
    cu->add_option("--format", cur.format, "csv or json")->capture_default_str();
    cu->add_option("--radii", cur.radii, "Ball means at these radii")->delimiter(',');
    cu->add_option("--center", cur.center);
    cu->add_flag("--allow-violation", cur.allow_violation);
    cu->add_option("--out", cur.out);

    IsoArgs iso;
    auto* is = app.add_subcommand("iso", "Isoperimetric estimates by enumeration");
    is->add_option("--host", iso.host)->required();
    is->add_option("--kind", iso.kind, "iota, j, kappa, jtilde")->capture_default_str();
    is->add_option("--cap", iso.cap)->capture_default_str();
    is->add_option("--family", iso.family, "connected or simply-connected")->capture_default_str();
    is->add_option("--radius-sweep", iso.sweep)->delimiter(',');
    is->add_option("--out", iso.out);

    auto* pa = app.add_subcommand("partition", "Partition a simply connected subgraph");
    pa->add_option("--host", host)->required();
    pa->add_option("--subgraph", subgraph)->required();
    pa->add_option("--emit", out);

    HyperArgs hy;
    auto* hp = app.add_subcommand("hyperbolicity", "Thinness or detour growth");
    hp->add_option("--host", hy.host)->required();
    hp->add_option("--mode", hy.mode, "thinness or detour")->capture_default_str();
    hp->add_option("--sweep", hy.sweep, "Radii (thinness) or t values (detour)")->delimiter(',');
    hp->add_option("--cap", hy.cap)->capture_default_str();
    hp->add_option("--center", hy.center);
    hp->add_option("--j", hy.j, "Isoperimetric lower value p/q for the growth bound");
    hp->add_option("--sampled", hy.sampled, "Random triangles on this many vertices");
    hp->add_option("--out", hy.out);

    auto* du = app.add_subcommand("dual", "Dual map");
    du->add_option("--host", host)->required();
    du->add_option("--out", out);

    auto* ex = app.add_subcommand("export", "Render or re-serialize a map");
    ex->add_option("--host", host)->required();
    ex->add_option("--format", format, "svg, dot, json")->capture_default_str();
    ex->add_option("--out", out);

    std::string suite = "paper", report;
    std::vector<int> only;
    auto* ve = app.add_subcommand("verify", "Run the acceptance suite");
    ve->add_option("--suite", suite)->capture_default_str();
    ve->add_option("--only", only, "Criterion ids")->delimiter(',');
    ve->add_option("--report", report, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (*g) return cmd_generate(gen);
        if (*cl) return cmd_classify(host);
        if (*cu) return cmd_curvature(cur);
        if (*is) return cmd_iso(iso);
        if (*pa) return cmd_partition(host, subgraph, out);
        if (*hp) return cmd_hyperbolicity(hy, seed);
        if (*du) return cmd_dual(host, out);
        if (*ex) return cmd_export(host, format, out);
        if (*ve) return cmd_verify(suite, only, report, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
