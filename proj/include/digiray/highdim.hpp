#pragma once

#include <optional>

#include "digiray/rational.hpp"
#include "digiray/tree.hpp"

namespace digiray {

// Witness of the packing argument: a plane vertex v on L_{N/2-1} whose
// subtree reaches a boundary leaf u that climbs at least
// (kappa2/N)^{1/(d-2)} - 1 along some axis j >= 3.
struct PackingWitness {
    GridPoint v;
    GridPoint u;
    int j = -1;
    long u_j = 0;
    long kappa2 = 0;
    double threshold = 0.0;  // (kappa2/N)^{1/(d-2)} - 1
};

// kappa2 of the (x1,x2)-restriction and the maximizing witness; nullopt when
// the restriction has no inner leaves between L_{ceil(N/2)} and L_N.
std::optional<PackingWitness> packing_witness(const RayTree& tree);

// Exact integer comparison u_j >= (kappa2/N)^{1/(d-2)} - 1, i.e.
// N*(u_j+1)^{d-2} >= kappa2.
bool meets_threshold(long u_j, long kappa2, int n, int dim);

// |B_N|: boundary vertices below the threshold box; strictly less than
// kappa2 whenever kappa2 > 0.
long boundary_box_census(int n, int dim, long kappa2);

// u'_j where u' is the crossing of segment o-u with the plane of L_{N/2-1};
// at least u_j/3 for N >= 6.
Rat crossing_plane_error(const RayTree& tree, const PackingWitness& witness);

}  // namespace digiray
