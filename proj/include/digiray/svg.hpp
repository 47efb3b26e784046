#pragma once

#include <string>

#include "digiray/mapping.hpp"
#include "digiray/tree.hpp"

namespace digiray {

// Deterministic SVG 1.1 output: fixed number formatting, no timestamps.
std::string render_tree_svg(const RayTree& tree, int size_px = 640);

std::string render_pointset_svg(const BicoloredPointSet& ps, int size_px = 640);

// D_{R,B} sampled on a grid x grid lattice, brightness encoding [-1,1].
std::string render_heatmap_svg(const BicoloredPointSet& ps, int size_px = 640, int grid = 64);

}  // namespace digiray
