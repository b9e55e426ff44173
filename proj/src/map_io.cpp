#include "isolab/map_io.hpp"

#include "isolab/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace isolab {

using nlohmann::json;

std::string map_to_json(const PlanarMap& map)
{
    json j;
    json verts = json::array();
    for (int v = 0; v < map.num_vertices(); ++v) verts.push_back({{"id", v}, {"rotation", map.rotation(v)}});
    j["vertices"] = std::move(verts);
    json twins = json::array();
    for (int d = 0; d < map.num_darts(); ++d)
        if (d < map.twin(d)) twins.push_back({d, map.twin(d)});
    j["twins"] = std::move(twins);
    j["outer_face_dart"] = map.outer_face_dart();
    std::vector<int> interior;
    for (int v = 0; v < map.num_vertices(); ++v)
        if (map.is_interior(v)) interior.push_back(v);
    j["interior"] = interior;
    json labels = json::object();
    for (int v = 0; v < map.num_vertices(); ++v)
        if (!map.labels()[v].empty()) labels[std::to_string(v)] = map.labels()[v];
    if (!labels.empty()) j["labels"] = std::move(labels);
    if (!map.groups().empty()) j["groups"] = map.groups();
    if (!map.provenance().empty()) j["family"] = json::parse(map.provenance());
    return j.dump(1);
}

PlanarMap map_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("JSON parse: ") + e.what());
    }
    try {
        const auto& verts = j.at("vertices");
        std::vector<std::vector<int>> rotations(verts.size());
        for (const auto& v : verts) {
            int id = v.at("id").get<int>();
            if (id < 0 || id >= static_cast<int>(verts.size())) throw Error(Errc::BadInput, "vertex ids must be 0..n-1");
            rotations[id] = v.at("rotation").get<std::vector<int>>();
        }
        int nd = 0;
        for (const auto& r : rotations) nd += static_cast<int>(r.size());
        std::vector<int> twin(nd, -1);
        for (const auto& pair : j.at("twins")) {
            int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
            if (a < 0 || b < 0 || a >= nd || b >= nd) throw Error(Errc::NonInvolutiveTwin, "twin pair out of range");
            if (twin[a] != -1 || twin[b] != -1) throw Error(Errc::NonInvolutiveTwin, "dart paired twice");
            twin[a] = b;
            twin[b] = a;
        }
        for (int d = 0; d < nd; ++d)
            if (twin[d] == -1) throw Error(Errc::NonInvolutiveTwin, "dart " + std::to_string(d) + " has no twin");
        PlanarMap map = PlanarMap::build(std::move(rotations), std::move(twin), j.at("outer_face_dart").get<int>());
        if (j.contains("interior")) map.set_interior(j["interior"].get<std::vector<int>>());
        if (j.contains("labels"))
            for (auto& [key, value] : j["labels"].items()) {
                int v = std::stoi(key);
                if (v < 0 || v >= map.num_vertices()) throw Error(Errc::BadInput, "label vertex out of range");
                map.labels()[v] = value.get<std::string>();
            }
        if (j.contains("groups"))
            for (auto& [key, value] : j["groups"].items()) map.groups()[key] = value.get<std::vector<int>>();
        if (j.contains("family")) map.set_provenance(j["family"].dump());
        return map;
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("map JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::FileIO, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::FileIO, "cannot write " + path);
    out << contents;
    if (!out) throw Error(Errc::FileIO, "write failed for " + path);
}

PlanarMap load_map(const std::string& path) { return map_from_json(read_file(path)); }

void save_map(const PlanarMap& map, const std::string& path) { write_file(path, map_to_json(map) + "\n"); }

std::vector<int> subgraph_from_json(const std::string& text)
{
    try {
        return json::parse(text).at("vertices").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw Error(Errc::BadInput, std::string("subgraph JSON: ") + e.what());
    }
}

std::vector<int> load_subgraph(const std::string& path) { return subgraph_from_json(read_file(path)); }

} // namespace isolab
