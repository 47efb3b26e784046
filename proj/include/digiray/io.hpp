#pragma once

#include <string>
#include <vector>

#include "digiray/mapping.hpp"
#include "digiray/metrics.hpp"
#include "digiray/tree.hpp"

namespace digiray {

// {"n": N, "dim": d, "parents": [axis per vertex in canonical order],
//  "meta": {...}}. Round-trips bit-exactly.
std::string tree_to_json(const RayTree& tree);
RayTree tree_from_json(const std::string& text);

void save_tree(const std::string& path, const RayTree& tree);
RayTree load_tree(const std::string& path);

// color,x_num,x_den,y_num,y_den (exact) or color,x,y (float, 17 significant
// digits), with a header line.
std::string pointset_to_csv(const BicoloredPointSet& ps);
BicoloredPointSet pointset_from_csv(const std::string& text);

void save_pointset(const std::string& path, const BicoloredPointSet& ps);
BicoloredPointSet load_pointset(const std::string& path);

std::string frontier_to_csv(const std::vector<FrontierRecord>& records);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace digiray
