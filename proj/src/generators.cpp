#include "isolab/generators.hpp"

#include "isolab/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace isolab {

using nlohmann::json;

namespace {

// Disk grown layer by layer. walk is the outer boundary walk, counterclockwise,
// disk on the left. At a corner x_i the exterior wedge of x_i starts right after
// x_{i-1} in its rotation, so new neighbors are inserted there.
struct LayeredDisk {
    EmbeddingBuilder b;
    std::vector<int> layer;
    std::vector<int> target; // 0 = use the default target
    std::vector<int> walk;

    int add(int lay)
    {
        int v = b.add_vertex();
        layer.push_back(lay);
        target.push_back(0);
        return v;
    }

    void start_wheel(int k)
    {
        int c = add(0);
        for (int j = 0; j < k; ++j) walk.push_back(add(1));
        b.rotation(c) = walk;
        for (int j = 0; j < k; ++j) b.rotation(walk[j]) = {walk[(j + 1) % k], c, walk[(j + k - 1) % k]};
    }

    void grow(int default_target)
    {
        const int m = static_cast<int>(walk.size());
        const int lay = 1 + *std::max_element(layer.begin(), layer.end());
        // Split each vertex's missing degree across its corners.
        std::vector<int> corners_of(b.num_vertices(), 0), r(m);
        for (int x : walk) ++corners_of[x];
        std::vector<int> seen(b.num_vertices(), 0);
        for (int i = 0; i < m; ++i) {
            int x = walk[i];
            int t = target[x] ? target[x] : default_target;
            int need = t - static_cast<int>(b.rotation(x).size());
            int c = corners_of[x];
            int k = seen[x]++;
            r[i] = need / c + (k < need % c ? 1 : 0);
            if (r[i] < 1) throw Error(Errc::BadInput, "vertex " + std::to_string(x) + " cannot reach its target degree");
        }
        if (r[m - 1] == 1 && std::any_of(r.begin(), r.end(), [](int v) { return v > 1; })) {
            // Rotate so that the last corner opens a fresh vertex.
            int shift = 0;
            while (r[(m - 1 + shift) % m] == 1) ++shift;
            std::rotate(walk.begin(), walk.begin() + shift, walk.end());
            std::rotate(r.begin(), r.begin() + shift, r.end());
        }
        std::vector<std::vector<int>> outs(m);
        int s0 = add(lay);
        std::vector<int> ring{s0};
        int first = s0;
        for (int i = 0; i < m; ++i) {
            outs[i].push_back(first);
            for (int t = 1; t < r[i]; ++t) {
                int y = (i == m - 1 && t == r[i] - 1) ? s0 : add(lay);
                outs[i].push_back(y);
                if (y != s0) ring.push_back(y);
            }
            first = outs[i].back();
        }
        if (first != s0) throw Error(Errc::BadInput, "layer does not close");
        const int k = static_cast<int>(ring.size());
        if (k < 3) throw Error(Errc::BadInput, "layer too short");

        // Down-neighbors of each new vertex, by corner order around the walk.
        std::vector<std::vector<int>> head_down(b.num_vertices()), tail_down(b.num_vertices());
        bool wrapped = false;
        for (int i = 0; i < m; ++i) {
            for (int y : outs[i]) {
                if (y == s0 && wrapped) tail_down[y].push_back(walk[i]);
                else head_down[y].push_back(walk[i]);
            }
            if (outs[i].size() > 1 || outs[i].back() != s0) wrapped = true;
        }
        for (int i = 0; i < m; ++i) {
            int x = walk[i], prev = walk[(i + m - 1) % m];
            auto& rot = b.rotation(x);
            auto it = std::find(rot.begin(), rot.end(), prev);
            if (it == rot.end()) throw Error(Errc::BadInput, "walk step is not an edge");
            rot.insert(it + 1, outs[i].begin(), outs[i].end());
        }
        for (int j = 0; j < k; ++j) {
            int y = ring[j];
            std::vector<int> down = tail_down[y];
            down.insert(down.end(), head_down[y].begin(), head_down[y].end());
            auto& rot = b.rotation(y);
            rot.push_back(ring[(j + 1) % k]);
            rot.insert(rot.end(), down.rbegin(), down.rend());
            rot.push_back(ring[(j + k - 1) % k]);
        }
        walk = ring;
    }

    PlanarMap finish() const { return b.build(walk[1], walk[0]); }
};

LayeredDisk grow_triangulation(int k, int radius, int attach_layer = -1, const std::vector<int>& schedule = {},
                               std::vector<int>* specials = nullptr)
{
    if (k < 3) throw Error(Errc::BadInput, "k must be >= 3");
    if (radius < 1) throw Error(Errc::BadInput, "radius must be >= 1");
    LayeredDisk d;
    d.start_wheel(k);
    for (int r = 1; r < radius; ++r) {
        if (r == attach_layer && specials) {
            const int m = static_cast<int>(d.walk.size());
            const int cnt = static_cast<int>(schedule.size());
            if (cnt * 3 > m) throw Error(Errc::ScheduleTooLargeForRadius, "too many attachment vertices for the layer");
            for (int j = 0; j < cnt; ++j) {
                int v = d.walk[static_cast<size_t>(j) * m / cnt];
                if (schedule[j] < static_cast<int>(d.b.rotation(v).size()) + 2)
                    throw Error(Errc::BadInput, "n_k too small for its layer");
                d.target[v] = schedule[j];
                specials->push_back(v);
            }
        }
        d.grow(k);
    }
    return d;
}

std::string label_n(const char* prefix, int n) { return std::string(prefix) + std::to_string(n); }

} // namespace

PlanarMap triangulation_deg_k(int k, int radius)
{
    LayeredDisk d = grow_triangulation(k, radius);
    PlanarMap map = d.finish();
    std::vector<char> mask(map.num_vertices());
    for (int v = 0; v < map.num_vertices(); ++v) mask[v] = d.layer[v] < radius;
    map.set_interior_mask(std::move(mask));
    map.labels()[0] = "center";
    map.set_provenance(json{{"family", "triangulation_deg_k"}, {"k", k}, {"radius", radius}}.dump());
    return map;
}

namespace {

// Gadget rotations in counterclockwise order, indices a=0, v1..v4 = 1..4.
// Drawn with a=(0,1), v1=(-1,-1), v2=(1,-1), v3=(0,0.3), v4=(0,-0.4).
const std::vector<std::vector<int>> kGadget = {
    {1, 3, 2},    // a
    {2, 4, 3, 0}, // v1
    {0, 3, 4, 1}, // v2
    {0, 1, 4, 2}, // v3
    {3, 1, 2},    // v4
};

} // namespace

PlanarMap lambda_gadget()
{
    EmbeddingBuilder b;
    for (int i = 0; i < 5; ++i) b.add_vertex();
    for (int i = 0; i < 5; ++i) b.rotation(i) = kGadget[i];
    // Outer face: a -> v2 -> v1 traversed with the outside on the left.
    PlanarMap map = b.build(0, 2);
    if (map.face_degree(map.outer_face()) != 3) throw Error(Errc::AssumptionViolated, "gadget outer face");
    map.labels() = {"a", "v1", "v2", "v3", "v4"};
    return map;
}

PlanarMap lambda_attachment(const LambdaParams& p)
{
    if (p.attach_layer < 1 || p.attach_layer + 2 > p.radius)
        throw Error(Errc::ScheduleTooLargeForRadius, "attachment layer must satisfy 1 <= layer <= radius-2");
    std::vector<int> specials;
    LayeredDisk d = grow_triangulation(p.k, p.radius, p.attach_layer, p.schedule, &specials);
    const int base = d.b.num_vertices();
    std::map<std::string, std::vector<int>> groups;
    for (size_t s = 0; s < specials.size(); ++s) {
        int v = specials[s];
        auto& group = groups["S_" + std::to_string(s + 1)];
        group.push_back(v);
        std::vector<int> old = d.b.rotation(v), fresh;
        for (size_t i = 0; i < old.size(); ++i) {
            fresh.push_back(old[i]);
            int ids[5] = {v, 0, 0, 0, 0};
            for (int j = 1; j < 5; ++j) {
                ids[j] = d.add(d.layer[v]);
                group.push_back(ids[j]);
            }
            for (int j = 1; j < 5; ++j)
                for (int w : kGadget[j]) d.b.rotation(ids[j]).push_back(ids[w]);
            for (int w : kGadget[0]) fresh.push_back(ids[w]);
        }
        d.b.rotation(v) = fresh;
    }
    PlanarMap map = d.finish();
    std::vector<char> mask(map.num_vertices());
    for (int v = 0; v < map.num_vertices(); ++v) mask[v] = d.layer[v] < p.radius;
    map.set_interior_mask(std::move(mask));
    for (size_t s = 0; s < specials.size(); ++s) map.labels()[specials[s]] = "v_" + std::to_string(s + 1);
    for (int v = base; v < map.num_vertices(); ++v) map.labels()[v] = "lambda";
    map.groups() = std::move(groups);
    map.set_provenance(json{{"family", "lambda_attachment"},
                            {"k", p.k},
                            {"radius", p.radius},
                            {"attach_layer", p.attach_layer},
                            {"schedule", p.schedule}}
                           .dump());
    return map;
}

int chain_hub_degree(int n) { return 14 * std::abs(n) + 14; }

PlanarMap nonnormal_chain(const ChainParams& p)
{
    if (p.lo > p.hi) throw Error(Errc::BadInput, "empty n range");
    if (p.layers < 1) throw Error(Errc::BadInput, "need at least one completion layer");
    const int first = p.lo - 1, last = p.hi + 1; // blocks
    LayeredDisk d;
    std::map<int, int> o;
    for (int n = first; n <= last + 1; ++n) {
        o[n] = d.add(0);
        d.target[o[n]] = chain_hub_degree(n);
    }
    struct Block {
        int top, bottom;
        std::vector<int> mid; // v_1 (top) .. v_{2|n|} (bottom)
    };
    std::map<int, Block> blocks;
    std::map<std::string, std::vector<int>> groups;
    std::vector<std::string> labels(o.size());
    for (int n = first; n <= last + 1; ++n) labels[o[n]] = label_n("o_", n);
    for (int n = first; n <= last; ++n) {
        Block bl;
        bl.top = d.add(0);
        for (int k = 0; k < 2 * std::abs(n); ++k) bl.mid.push_back(d.add(0));
        bl.bottom = d.add(0);
        labels.resize(d.b.num_vertices());
        labels[bl.top] = "b_2^" + std::to_string(n);
        labels[bl.bottom] = "b_1^" + std::to_string(n);
        for (size_t k = 0; k < bl.mid.size(); ++k)
            labels[bl.mid[k]] = "v_" + std::to_string(k + 1) + "^" + std::to_string(n);
        int a = o[n], c = o[n + 1];
        d.b.rotation(bl.top) = {c, a};
        d.b.rotation(bl.bottom) = {c, a};
        for (size_t k = 0; k < bl.mid.size(); k += 2) {
            d.b.rotation(bl.mid[k]) = {c, a, bl.mid[k + 1]};
            d.b.rotation(bl.mid[k + 1]) = {c, bl.mid[k], a};
        }
        auto& g = groups["S_" + std::to_string(n)];
        g = {a, c, bl.top, bl.bottom};
        g.insert(g.end(), bl.mid.begin(), bl.mid.end());
        blocks[n] = std::move(bl);
    }
    // Hub rotation: east block bottom-to-top, then west block top-to-bottom.
    for (int n = first; n <= last + 1; ++n) {
        auto& rot = d.b.rotation(o[n]);
        if (blocks.count(n)) {
            const Block& e = blocks[n];
            rot.push_back(e.bottom);
            rot.insert(rot.end(), e.mid.rbegin(), e.mid.rend());
            rot.push_back(e.top);
        }
        if (blocks.count(n - 1)) {
            const Block& w = blocks[n - 1];
            rot.push_back(w.top);
            rot.insert(rot.end(), w.mid.begin(), w.mid.end());
            rot.push_back(w.bottom);
        }
    }
    // Outer walk: east along the bottom, west along the top.
    for (int n = first; n <= last; ++n) {
        d.walk.push_back(o[n]);
        d.walk.push_back(blocks[n].bottom);
    }
    d.walk.push_back(o[last + 1]);
    for (int n = last; n >= first; --n) {
        d.walk.push_back(blocks[n].top);
        if (n > first) d.walk.push_back(o[n]);
    }
    for (int l = 0; l < p.layers; ++l) d.grow(p.fill_degree);

    PlanarMap map = d.finish();
    std::vector<char> mask(map.num_vertices());
    for (int v = 0; v < map.num_vertices(); ++v) mask[v] = d.layer[v] < p.layers;
    mask[o[first]] = 0;
    mask[o[last + 1]] = 0;
    map.set_interior_mask(std::move(mask));
    for (size_t v = 0; v < labels.size(); ++v) map.labels()[v] = labels[v];
    map.groups() = std::move(groups);
    map.set_provenance(json{{"family", "nonnormal_chain"}, {"lo", p.lo}, {"hi", p.hi}, {"layers", p.layers},
                            {"fill_degree", p.fill_degree}}
                           .dump());
    return map;
}

PlanarMap g1_multiedge(const G1Params& p)
{
    if (p.radius < 3) throw Error(Errc::BadInput, "radius must be >= 3");
    LayeredDisk d = grow_triangulation(7, p.radius);
    const int base = d.b.num_vertices();
    // Graph distances in the base triangulation, for spacing.
    auto bfs = [&](int s) {
        std::vector<int> dist(base, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : d.b.rotation(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
        }
        return dist;
    };
    struct Pick {
        int a, b, c, dd;
    };
    std::vector<Pick> picks;
    std::vector<std::vector<int>> picked_dist;
    std::vector<char> used(base, 0);
    // Outermost usable layer first, so the picks spread around the ball.
    std::vector<int> order(base);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d.layer[x] > d.layer[y]; });
    for (int a : order) {
        if (picks.size() == p.multiplicities.size()) break;
        if (d.layer[a] > p.radius - 2) continue;
        for (int b : d.b.rotation(a)) {
            if (b < a || d.layer[b] > p.radius - 2) continue;
            bool ok = true;
            for (const auto& dist : picked_dist) ok = ok && dist[a] >= p.spacing && dist[b] >= p.spacing;
            if (!ok) continue;
            const auto& ra = d.b.rotation(a);
            size_t ib = std::find(ra.begin(), ra.end(), b) - ra.begin();
            int c = ra[(ib + 1) % ra.size()], dd = ra[(ib + ra.size() - 1) % ra.size()];
            if (used[a] || used[b] || used[c] || used[dd]) continue;
            picks.push_back({a, b, c, dd});
            picked_dist.push_back(bfs(a));
            used[a] = used[b] = used[c] = used[dd] = 1;
            break;
        }
    }
    if (picks.size() < p.multiplicities.size())
        throw Error(Errc::SpacingViolated, "cannot place " + std::to_string(p.multiplicities.size()) +
                                               " edges with spacing " + std::to_string(p.spacing));

    std::map<std::string, std::vector<int>> groups;
    std::vector<std::pair<int, std::string>> names;
    for (size_t i = 0; i < picks.size(); ++i) {
        const int n = p.multiplicities[i];
        if (n < 1) throw Error(Errc::BadInput, "multiplicity must be >= 1");
        auto [a, b, c, dd] = picks[i];
        std::vector<int> m;
        for (int j = 0; j < n; ++j) m.push_back(d.add(d.layer[a]));
        // a: d, m_n..m_1, c ;  b: c, m_1..m_n, d
        auto replace = [&](int x, int old, const std::vector<int>& with) {
            auto& rot = d.b.rotation(x);
            auto it = std::find(rot.begin(), rot.end(), old);
            it = rot.erase(it);
            rot.insert(it, with.begin(), with.end());
        };
        replace(a, b, std::vector<int>(m.rbegin(), m.rend()));
        replace(b, a, m);
        auto insert_after = [&](int x, int after, int v) {
            auto& rot = d.b.rotation(x);
            rot.insert(std::find(rot.begin(), rot.end(), after) + 1, v);
        };
        insert_after(c, a, m.front());
        insert_after(dd, b, m.back());
        for (int j = 0; j < n; ++j) {
            int up = j == 0 ? c : m[j - 1];
            int down = j == n - 1 ? dd : m[j + 1];
            d.b.rotation(m[j]) = {b, up, a, down};
        }
        std::string s = std::to_string(i + 1);
        auto& g = groups["S_" + s];
        g = {a, b, c, dd};
        g.insert(g.end(), m.begin(), m.end());
        names.push_back({a, "a_" + s});
        names.push_back({b, "b_" + s});
        names.push_back({c, "c_" + s});
        names.push_back({dd, "d_" + s});
        for (int j = 0; j < n; ++j) names.push_back({m[j], "m_" + std::to_string(j + 1) + "^" + s});
    }
    PlanarMap map = d.finish();
    std::vector<char> mask(map.num_vertices());
    for (int v = 0; v < map.num_vertices(); ++v) mask[v] = d.layer[v] < p.radius;
    map.set_interior_mask(std::move(mask));
    for (auto& [v, s] : names) map.labels()[v] = s;
    map.groups() = std::move(groups);
    map.set_provenance(json{{"family", "g1_multiedge"},
                            {"radius", p.radius},
                            {"multiplicities", p.multiplicities},
                            {"spacing", p.spacing}}
                           .dump());
    return map;
}

PlanarMap generate_family(const std::string& spec_json)
{
    json j;
    try {
        j = json::parse(spec_json);
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("family spec: ") + e.what());
    }
    try {
        const std::string fam = j.at("family").get<std::string>();
        if (fam == "triangulation_deg_k") return triangulation_deg_k(j.value("k", 7), j.value("radius", 3));
        if (fam == "lambda_attachment") {
            LambdaParams p;
            p.k = j.value("k", p.k);
            p.radius = j.value("radius", p.radius);
            p.attach_layer = j.value("attach_layer", p.attach_layer);
            p.schedule = j.value("schedule", p.schedule);
            return lambda_attachment(p);
        }
        if (fam == "nonnormal_chain") {
            ChainParams p;
            p.lo = j.value("lo", p.lo);
            p.hi = j.value("hi", p.hi);
            p.layers = j.value("layers", p.layers);
            p.fill_degree = j.value("fill_degree", p.fill_degree);
            return nonnormal_chain(p);
        }
        if (fam == "g1_multiedge") {
            G1Params p;
            p.radius = j.value("radius", p.radius);
            p.multiplicities = j.value("multiplicities", p.multiplicities);
            p.spacing = j.value("spacing", p.spacing);
            return g1_multiedge(p);
        }
        if (fam == "square_lattice") {
            PlanarMap m = square_lattice(j.value("width", 6), j.value("height", 6));
            return m;
        }
        if (fam == "g2_multiedge_lattice") {
            G2Params p;
            p.radius = j.value("radius", 0);
            p.block = j.value("block", 0);
            p.ell = j.value("ell", std::vector<long long>{});
            p.auto_rule = j.value("auto_rule", false);
            return g2_multiedge_lattice(p);
        }
        if (fam == "lambda_gadget") return lambda_gadget();
        throw Error(Errc::BadInput, "unknown family " + fam);
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("family spec: ") + e.what());
    }
}

} // namespace isolab
