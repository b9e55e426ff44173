#pragma once

#include "isolab/planar_map.hpp"

#include <string>
#include <utility>
#include <vector>

namespace isolab {

// JSON interchange:
// {"vertices":[{"id":0,"rotation":[...]}], "twins":[[d1,d2],...], "outer_face_dart":d,
//  "interior":[...], "labels":{"<id>":"tag"}, "groups":{"name":[ids]}, "family":{...}}
std::string map_to_json(const PlanarMap& map);
PlanarMap map_from_json(const std::string& text);

PlanarMap load_map(const std::string& path);
void save_map(const PlanarMap& map, const std::string& path);

// {"vertices":[ids]} relative to a host file.
std::vector<int> subgraph_from_json(const std::string& text);
std::vector<int> load_subgraph(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Straight-line layout: outer boundary pinned to a circle, every other vertex
// at the average of its neighbors. Rendering only.
std::vector<std::pair<double, double>> tutte_layout(const PlanarMap& map, int iterations = 2000);

std::string to_dot(const PlanarMap& map);
std::string to_svg(const PlanarMap& map, double size = 800.0);

} // namespace isolab
