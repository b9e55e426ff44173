#include "isolab/map_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace isolab {

std::vector<std::pair<double, double>> tutte_layout(const PlanarMap& map, int iterations)
{
    const int n = map.num_vertices();
    std::vector<std::pair<double, double>> pos(n, {0.0, 0.0});
    std::vector<char> pinned(n, 0);
    std::vector<int> ring;
    for (int v : map.faces().vertices[map.outer_face()]) {
        if (!pinned[v]) {
            pinned[v] = 1;
            ring.push_back(v);
        }
    }
    const double k = static_cast<double>(ring.size());
    for (size_t i = 0; i < ring.size(); ++i) {
        // Outer walk runs clockwise, so place it clockwise.
        double a = -2.0 * std::numbers::pi * static_cast<double>(i) / k;
        pos[ring[i]] = {std::cos(a), std::sin(a)};
    }
    for (int it = 0; it < iterations; ++it) {
        double moved = 0.0;
        for (int v = 0; v < n; ++v) {
            if (pinned[v] || map.neighbors(v).empty()) continue;
            double x = 0, y = 0;
            for (int w : map.neighbors(v)) {
                x += pos[w].first;
                y += pos[w].second;
            }
            double deg = static_cast<double>(map.neighbors(v).size());
            x /= deg;
            y /= deg;
            moved = std::max(moved, std::abs(x - pos[v].first) + std::abs(y - pos[v].second));
            pos[v] = {x, y};
        }
        if (moved < 1e-12) break;
    }
    return pos;
}

std::string to_dot(const PlanarMap& map)
{
    auto pos = tutte_layout(map);
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle, width=0.1, label=\"\"];\n";
    char buf[96];
    for (int v = 0; v < map.num_vertices(); ++v) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f!", 10.0 * pos[v].first, 10.0 * pos[v].second);
        out << "  " << v << " [pos=\"" << buf << "\"";
        if (!map.labels()[v].empty()) out << ", xlabel=\"" << map.labels()[v] << "\"";
        if (!map.is_interior(v)) out << ", style=dashed";
        out << "];\n";
    }
    for (int e = 0; e < map.num_edges(); ++e) {
        int d = map.edge_dart(e);
        out << "  " << map.origin(d) << " -- " << map.head(d) << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const PlanarMap& map, double size)
{
    auto pos = tutte_layout(map);
    const double margin = 10.0;
    const double scale = (size - 2 * margin) / 2.0;
    auto sx = [&](double x) { return margin + (x + 1.0) * scale; };
    auto sy = [&](double y) { return margin + (1.0 - y) * scale; };
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  size, size, size, size);
    out << buf;
    out << "<g fill=\"#dde6f0\" fill-opacity=\"0.5\" stroke=\"none\">\n";
    for (int f = 0; f < map.num_faces(); ++f) {
        if (!map.is_bounded(f)) continue;
        out << "<path d=\"";
        bool first = true;
        for (int v : map.faces().vertices[f]) {
            std::snprintf(buf, sizeof buf, "%c%.2f %.2f ", first ? 'M' : 'L', sx(pos[v].first), sy(pos[v].second));
            out << buf;
            first = false;
        }
        out << "Z\"/>\n";
    }
    out << "</g>\n<g stroke=\"#223\" stroke-width=\"0.8\">\n";
    for (int e = 0; e < map.num_edges(); ++e) {
        int d = map.edge_dart(e);
        auto a = pos[map.origin(d)], b = pos[map.head(d)];
        std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n", sx(a.first),
                      sy(a.second), sx(b.first), sy(b.second));
        out << buf;
    }
    out << "</g>\n<g>\n";
    for (int v = 0; v < map.num_vertices(); ++v) {
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"%s\"/>\n", sx(pos[v].first),
                      sy(pos[v].second), map.is_interior(v) ? "#c22" : "#888");
        out << buf;
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace isolab
