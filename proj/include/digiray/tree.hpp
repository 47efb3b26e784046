#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "digiray/grid.hpp"

namespace digiray {

// Rooted spanning tree of G+_N encoded by one parent direction per
// non-origin vertex: parent(v) = v - e_{parent_axis[v]}. The encoding makes
// the paths coordinate-monotone with unit L1 steps, so axioms (S1), (S3)
// and (S5) hold structurally; the verifier re-checks them anyway to catch
// corrupted inputs.
struct RayTree {
    int n = 0;
    int dim = 2;
    std::shared_ptr<const VertexTable> verts;
    std::vector<int8_t> parent_axis;  // indexed by vertex id; -1 at the origin
    std::map<std::string, std::string> meta;

    int size() const { return verts->size(); }
    const GridPoint& point(int id) const { return verts->point(id); }

    // id of parent(v); -1 for the origin.
    int parent_of(int id) const;

    // child ids in canonical order (ascending axis of the step).
    std::vector<std::vector<int>> children() const;
};

enum class VerifyMode { proper, weak };

struct AxiomReport {
    VerifyMode mode = VerifyMode::weak;
    bool s1_ok = false;  // unit grid steps
    bool s2_ok = false;  // symmetry; trivial for ray systems
    bool s3_ok = false;  // subsegment containment / rootedness
    bool s5_ok = false;  // coordinate monotonicity
    std::vector<GridPoint> s4_violators;  // inner leaves
    int vertex_count = 0;
    int inner_leaf_count = 0;

    bool passed() const {
        bool base = s1_ok && s2_ok && s3_ok && s5_ok;
        if (mode == VerifyMode::proper) return base && s4_violators.empty();
        return base;
    }
};

struct VertexCensus {
    std::vector<GridPoint> split_vertices;   // degree-3 interior vertices plus the origin (2D)
    std::vector<GridPoint> inner_leaves;     // leaves below L_N
    std::vector<GridPoint> boundary_leaves;  // all of L_N
    int degree_two_count = 0;
    // 2D only: per-layer tallies for n = 0..N-1
    std::vector<int> splits_per_layer;
    std::vector<int> inner_per_layer;
    bool has_layer_tallies = false;
};

RayTree build_tree(int n_max, int dim, const std::vector<std::pair<GridPoint, int>>& parent_axis);

// Internal form used by the generators: axis per canonical vertex id
// (value at the origin is ignored).
RayTree build_tree_raw(int n_max, int dim, std::vector<int8_t> axes);

AxiomReport verify_axioms(const RayTree& tree, VerifyMode mode);

VertexCensus census(const RayTree& tree);

std::vector<GridPoint> path_to(const RayTree& tree, const GridPoint& p);

// 2D tree over the vertices whose coordinates vanish outside {axis_i, axis_j};
// parent links are preserved, they cannot leave the subspace.
RayTree restrict_to_plane(const RayTree& tree, int axis_i, int axis_j);

RayTree random_weak_cdr(int n_max, uint64_t seed, double leaf_rate = 0.5);

RayTree random_proper_cdr(int n_max, int dim, uint64_t seed);

}  // namespace digiray
