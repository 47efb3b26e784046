#pragma once

#include <map>
#include <optional>
#include <vector>

#include "digiray/tree.hpp"

namespace digiray {

// The two proper CDRs on G+_2 differ only in the parent of (1,1); both have
// the same error, so either works as the innermost slice.
enum class SeedCdr { parent_right, parent_up };

struct GreedyConfig {
    int n_max = 0;  // power of two, >= 2
    SeedCdr seed_cdr = SeedCdr::parent_right;
};

// The per-layer points of the greedy digital path from p to 2p: for each
// layer j in [|p|, 2|p|] the point of L_j closest in L-infinity to the
// segment p-2p, ties resolved toward smaller y. Requires |p| = 2^{i-1} for
// some i >= 2.
std::vector<GridPoint> greedy_path(const GridPoint& p);

RayTree greedy_weak_cdr(const GreedyConfig& cfg);

// GREEDY on G+_{ceil(N/c)} (rounded up to a power of two), scaled by c, with
// uncovered refined vertices attached left when x >= y and down otherwise.
RayTree tradeoff_weak_cdr(int n_max, int c);

// Baseline proper CDR: dig(o,p) consumes coordinates in axis order.
RayTree axis_order_cdr(int n_max, int dim);

struct PrunedTree {
    RayTree base;                    // the input tree
    std::vector<char> kept;          // per vertex id
    std::map<int, int> snap;         // dropped vertex id -> nearest kept id
    int kept_count = 0;

    bool is_kept(int id) const { return kept[static_cast<size_t>(id)] != 0; }
    int snap_distance(int dropped_id) const;  // L-infinity
};

// Iteratively removes inner leaves until every remaining vertex extends to
// L_N. For GREEDY input every dropped vertex has a kept vertex within
// L-infinity distance one.
PrunedTree prune_inner_branches(const RayTree& tree);

}  // namespace digiray
