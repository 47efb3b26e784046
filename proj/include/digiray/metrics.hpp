#pragma once

#include <string>
#include <vector>

#include "digiray/rational.hpp"
#include "digiray/tree.hpp"

namespace digiray {

struct ErrorResult {
    Rat value;
    GridPoint witness_ray;
    std::string witness_location;  // tree vertex or segment parameter
};

enum class ErrorScope { all, boundary };

// Exact L-infinity Hausdorff distance between the vertex set of dig(o,p) and
// the Euclidean segment o-p. 2D only.
Rat hausdorff_ray(const RayTree& tree, const GridPoint& p);

// Maximum of hausdorff_ray over all vertices of G+_N (or L_N only).
ErrorResult hausdorff_tree(const RayTree& tree, ErrorScope scope = ErrorScope::all);

// |x' - x*n/N| where (x',y') is the unique point of dig(o,p) on L_n; a lower
// bound for hausdorff_ray(tree, p).
Rat witness_bound(const RayTree& tree, const GridPoint& p, int n);

struct FrontierRecord {
    std::string construction;
    int n = 0;
    Rat error;
    long kappa1 = 0;  // all inner leaves
    long kappa2 = 0;  // inner leaves with ceil(N/2) <= layer < N
    Rat bound_value;  // N*log2(N)/(N+kappa2)
};

std::vector<FrontierRecord> frontier(const std::vector<RayTree>& trees);

// kappa2 of a 2D tree: inner leaves between the lines x+y=ceil(N/2) and x+y=N.
long kappa2_of(const RayTree& tree);

}  // namespace digiray
