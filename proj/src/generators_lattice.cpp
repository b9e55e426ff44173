#include "isolab/generators.hpp"

#include "isolab/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

namespace isolab {

using nlohmann::json;

PlanarMap map_from_drawing(const std::vector<std::pair<double, double>>& points,
                           const std::vector<std::pair<int, int>>& edges)
{
    if (edges.empty()) throw Error(Errc::BadInput, "drawing without edges");
    EmbeddingBuilder b;
    for (size_t i = 0; i < points.size(); ++i) b.add_vertex();
    for (auto [u, v] : edges) {
        b.rotation(u).push_back(v);
        b.rotation(v).push_back(u);
    }
    for (int v = 0; v < b.num_vertices(); ++v) {
        auto angle = [&](int w) {
            return std::atan2(points[w].second - points[v].second, points[w].first - points[v].first);
        };
        std::sort(b.rotation(v).begin(), b.rotation(v).end(), [&](int x, int y) { return angle(x) < angle(y); });
    }
    // Bounded faces trace clockwise; the outer walk is the one of largest area.
    PlanarMap probe = b.build(edges[0].first, edges[0].second);
    int outer = -1;
    double best = 0;
    for (int f = 0; f < probe.num_faces(); ++f) {
        const auto& vs = probe.faces().vertices[f];
        double area = 0;
        for (size_t i = 0; i < vs.size(); ++i) {
            auto [x1, y1] = points[vs[i]];
            auto [x2, y2] = points[vs[(i + 1) % vs.size()]];
            area += x1 * y2 - x2 * y1;
        }
        if (outer < 0 || area > best) {
            outer = f;
            best = area;
        }
    }
    int d = probe.faces().darts[outer][0];
    return b.build(probe.origin(d), probe.head(d));
}

PlanarMap square_lattice(int width, int height)
{
    if (width < 1 || height < 1) throw Error(Errc::BadInput, "lattice needs at least one square");
    std::vector<std::pair<double, double>> pts;
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int x, int y) { return y * (width + 1) + x; };
    for (int y = 0; y <= height; ++y)
        for (int x = 0; x <= width; ++x) {
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
            if (x < width) edges.push_back({id(x, y), id(x + 1, y)});
            if (y < height) edges.push_back({id(x, y), id(x, y + 1)});
        }
    PlanarMap map = map_from_drawing(pts, edges);
    map.set_provenance(json{{"family", "square_lattice"}, {"width", width}, {"height", height}}.dump());
    return map;
}

long long g2_region_count(int n, const std::vector<long long>& ell)
{
    long long nn = n;
    long long c = 2 * nn * nn + 2 * nn + 1 + 2 * nn * (nn + 1);
    for (int j = 1; j <= n; ++j) c += 4LL * (2 * j - 1) * ell.at(j - 1);
    return c;
}

PlanarMap g2_multiedge_lattice(const G2Params& p, G2Certificate* cert)
{
    if ((p.radius > 0) == (p.block > 0)) throw Error(Errc::BadInput, "give exactly one of radius or block");
    // Included unit squares, by lower-left corner.
    std::set<std::pair<int, int>> squares;
    int max_l1 = 0;
    if (p.radius > 0) {
        const int n = p.radius;
        for (int m = -n; m < n; ++m)
            for (int k = -n; k < n; ++k) {
                int worst = std::max(std::abs(m), std::abs(m + 1)) + std::max(std::abs(k), std::abs(k + 1));
                if (worst <= n) squares.insert({m, k});
            }
        max_l1 = n;
    } else {
        const int lo = -(p.block / 2);
        for (int m = lo; m < lo + p.block; ++m)
            for (int k = lo; k < lo + p.block; ++k) squares.insert({m, k});
        max_l1 = 2 * (p.block - p.block / 2);
    }
    if (squares.empty()) throw Error(Errc::BadInput, "empty G2 region");

    std::vector<long long> ell;
    if (p.auto_rule) {
        ell.push_back(p.ell.empty() ? 1 : p.ell.front());
        while (static_cast<int>(ell.size()) < max_l1)
            ell.push_back(g2_region_count(static_cast<int>(ell.size()), ell));
    } else {
        if (p.ell.empty()) throw Error(Errc::BadInput, "ell list required without auto rule");
        for (int n = 1; n <= max_l1; ++n) ell.push_back(p.ell[std::min<size_t>(n - 1, p.ell.size() - 1)]);
    }
    for (long long l : ell)
        if (l < 1 || l > 100000) throw Error(Errc::BadInput, "ell out of range");

    std::vector<std::pair<double, double>> pts;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto l1 = [](int x, int y) { return std::abs(x) + std::abs(y); };
    std::map<std::pair<int, int>, int> lattice, centers;
    auto lattice_id = [&](int x, int y) {
        auto [it, fresh] = lattice.emplace(std::make_pair(x, y), static_cast<int>(pts.size()));
        if (fresh) {
            pts.push_back({static_cast<double>(x), static_cast<double>(y)});
            labels.push_back("p_" + std::to_string(l1(x, y)));
        }
        return it->second;
    };
    for (auto [m, k] : squares) {
        for (int dx = 0; dx < 2; ++dx)
            for (int dy = 0; dy < 2; ++dy) lattice_id(m + dx, k + dy);
        centers[{m, k}] = static_cast<int>(pts.size());
        pts.push_back({m + 0.5, k + 0.5});
        labels.push_back("c_" + std::to_string(std::abs(2 * m + 1) / 2 + std::abs(2 * k + 1) / 2 + 1));
    }
    // Lattice edges keyed by lower/left endpoint and direction (0 = horizontal).
    std::set<std::tuple<int, int, int>> lattice_edges;
    for (auto [m, k] : squares) {
        lattice_edges.insert({m, k, 0});
        lattice_edges.insert({m, k + 1, 0});
        lattice_edges.insert({m, k, 1});
        lattice_edges.insert({m + 1, k, 1});
    }
    for (auto [x, y, dir] : lattice_edges) {
        int x2 = x + (dir == 0), y2 = y + (dir == 1);
        int n = std::max(l1(x, y), l1(x2, y2));
        long long count = ell[n - 1];
        int pa = lattice.at({x, y}), pb = lattice.at({x2, y2});
        std::vector<int> mids;
        for (long long j = 0; j < count; ++j) {
            double off = -0.3 + 0.6 * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
            mids.push_back(static_cast<int>(pts.size()));
            if (dir == 0) pts.push_back({x + 0.5, y + off});
            else pts.push_back({x + off, y + 0.5});
            labels.push_back("m_" + std::to_string(n));
            edges.push_back({pa, mids.back()});
            edges.push_back({mids.back(), pb});
            if (j > 0) edges.push_back({mids[j - 1], mids[j]});
        }
        // Square on the low side (below / left) meets the first strand.
        std::pair<int, int> low = dir == 0 ? std::make_pair(x, y - 1) : std::make_pair(x - 1, y);
        std::pair<int, int> high = {x, y};
        if (auto it = centers.find(low); it != centers.end()) edges.push_back({it->second, mids.front()});
        if (auto it = centers.find(high); it != centers.end()) edges.push_back({it->second, mids.back()});
    }
    PlanarMap map = map_from_drawing(pts, edges);
    for (int v = 0; v < map.num_vertices(); ++v) map.labels()[v] = labels[v];

    if (cert) {
        *cert = G2Certificate{};
        cert->ell = ell;
        for (int n = 1; n + 1 <= static_cast<int>(ell.size()); ++n) {
            long long c = g2_region_count(n, ell);
            cert->c_formula.push_back(c);
            if (ell[n] < c) cert->rule_holds = false;
            long long counted = -1;
            if (p.radius > 0 && n + 1 <= p.radius) {
                counted = 0;
                for (const auto& [x, y] : pts)
                    if (std::abs(x) + std::abs(y) < n + 0.1) ++counted;
                if (counted != c) cert->counts_match = false;
            }
            cert->c_counted.push_back(counted);
        }
        for (int f = 0; f < map.num_faces(); ++f)
            if (map.is_bounded(f)) cert->max_face_degree = std::max(cert->max_face_degree, map.face_degree(f));
    }
    json spec{{"family", "g2_multiedge_lattice"}, {"auto_rule", p.auto_rule}, {"ell", p.ell}};
    if (p.radius > 0) spec["radius"] = p.radius;
    else spec["block"] = p.block;
    map.set_provenance(spec.dump());
    return map;
}

} // namespace isolab
