#include "digiray/highdim.hpp"

#include <cmath>
#include <functional>
#include <tuple>
#include <vector>

#include "digiray/errors.hpp"
#include "digiray/metrics.hpp"

namespace digiray {

bool meets_threshold(long u_j, long kappa2, int n, int dim) {
    // u_j >= (kappa2/n)^{1/(dim-2)} - 1  <=>  n*(u_j+1)^{dim-2} >= kappa2
    long long pow = 1;
    for (int k = 0; k < dim - 2; ++k) pow *= (u_j + 1);
    return static_cast<long long>(n) * pow >= kappa2;
}

long boundary_box_census(int n, int dim, long kappa2) {
    // x in L_N with x1+x2 < N and every x_i (i >= 3) strictly below the
    // threshold; enumerate the tail coordinates, x1 then runs freely
    long count = 0;
    std::vector<int> tail(static_cast<size_t>(dim - 2), 0);
    std::function<void(int, int)> rec = [&](int pos, int sum) {
        if (sum > n) return;
        if (pos == dim - 2) {
            if (sum >= 1) count += n - sum + 1;  // choices of x1, x2 fixed by the layer
            return;
        }
        for (int v = 0;; ++v) {
            if (sum + v > n) break;
            // strict version of the threshold comparison
            long long pow = 1;
            for (int k = 0; k < dim - 2; ++k) pow *= (v + 1);
            if (static_cast<long long>(n) * pow >= kappa2) break;
            tail[static_cast<size_t>(pos)] = v;
            rec(pos + 1, sum + v);
        }
    };
    rec(0, 0);
    return count;
}

std::optional<PackingWitness> packing_witness(const RayTree& tree) {
    if (tree.dim < 3) throw OutOfDomain("the packing witness requires dim >= 3");
    if (tree.n % 2 != 0) throw OddN("the packing witness requires even N");

    RayTree plane = restrict_to_plane(tree, 0, 1);
    long kappa2 = kappa2_of(plane);
    if (kappa2 == 0) return std::nullopt;

    auto ch = tree.children();
    PackingWitness best;
    best.kappa2 = kappa2;
    best.threshold =
        std::pow(static_cast<double>(kappa2) / tree.n, 1.0 / (tree.dim - 2)) - 1.0;
    bool found = false;

    int half_layer = tree.n / 2 - 1;
    for (int a = 0; a <= half_layer; ++a) {
        GridPoint v(std::vector<int>(static_cast<size_t>(tree.dim), 0));
        v[0] = a;
        v[1] = half_layer - a;
        int vid = tree.verts->id_of(v);

        // boundary leaves of the full subtree below v
        std::vector<int> stack{vid};
        while (!stack.empty()) {
            int id = stack.back();
            stack.pop_back();
            if (tree.verts->layer(id) == tree.n) {
                const GridPoint& u = tree.point(id);
                for (int j = 2; j < tree.dim; ++j) {
                    if (!meets_threshold(u[j], kappa2, tree.n, tree.dim)) continue;
                    bool better = !found || u[j] > best.u_j;
                    if (!better && u[j] == best.u_j) {
                        // deterministic argmax: lexicographic (v, u, j)
                        auto cur = std::make_tuple(best.v.coords, best.u.coords, best.j);
                        auto cand = std::make_tuple(v.coords, u.coords, j);
                        better = cand < cur;
                    }
                    if (better) {
                        best.v = v;
                        best.u = u;
                        best.j = j;
                        best.u_j = u[j];
                        found = true;
                    }
                }
                continue;
            }
            for (int c : ch[static_cast<size_t>(id)]) stack.push_back(c);
        }
    }
    if (!found) return std::nullopt;
    return best;
}

Rat crossing_plane_error(const RayTree& tree, const PackingWitness& witness) {
    if (tree.n < 6) throw OutOfDomain("crossing-plane error needs N >= 6");
    // the segment o-u crosses the affine plane of L_{N/2-1} at u*(N/2-1)/N
    Rat v = rat(witness.u_j, 1) * rat(tree.n / 2 - 1, tree.n);
    v.canonicalize();
    return v;
}

}  // namespace digiray
