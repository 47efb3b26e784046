#include "digiray/construct.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

#include "digiray/errors.hpp"

namespace digiray {

namespace {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

int next_power_of_two(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

std::vector<GridPoint> greedy_path(const GridPoint& p) {
    if (p.dim() != 2) throw OutOfDomain("greedy paths are two dimensional");
    long px = p[0], py = p[1];
    long len = px + py;
    if (!is_power_of_two(static_cast<int>(len)) || len < 2)
        throw OutOfDomain("greedy path seed must lie on a layer 2^{i-1}, i >= 2");

    std::vector<GridPoint> path;
    path.reserve(static_cast<size_t>(len) + 1);
    for (long j = len; j <= 2 * len; ++j) {
        // The point of L_j nearest to segment p-2p has x = round(j*px/len);
        // rounding half up realizes the smaller-y tie rule.
        long x = (2 * j * px + len) / (2 * len);
        path.emplace_back(static_cast<int>(x), static_cast<int>(j - x));
    }
    return path;
}

RayTree greedy_weak_cdr(const GreedyConfig& cfg) {
    int n = cfg.n_max;
    if (!is_power_of_two(n) || n < 2)
        throw NotPowerOfTwo("GREEDY requires n_max = 2^k with k >= 1, got " + std::to_string(n));

    auto verts = std::make_shared<VertexTable>(n, 2);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    auto assign = [&](const GridPoint& v, int axis) {
        axes[static_cast<size_t>(verts->id_of(v))] = static_cast<int8_t>(axis);
    };

    // slice S_1 = G+_2: one of the two proper seed CDRs
    assign({1, 0}, 0);
    assign({0, 1}, 1);
    assign({2, 0}, 0);
    assign({0, 2}, 1);
    assign({1, 1}, cfg.seed_cdr == SeedCdr::parent_right ? 1 : 0);

    // slices S_i: greedy paths from every point of L_{2^{i-1}} to its double
    for (int half = 2; half < n; half *= 2) {
        for (int x = 0; x <= half; ++x) {
            auto path = greedy_path(GridPoint(x, half - x));
            for (size_t k = 1; k < path.size(); ++k) {
                const GridPoint& a = path[k - 1];
                const GridPoint& b = path[k];
                assign(b, b[0] == a[0] + 1 ? 0 : 1);
            }
        }
    }

    // remaining vertices connect left when x >= y, down otherwise
    for (int id = 1; id < verts->size(); ++id) {
        if (axes[static_cast<size_t>(id)] >= 0) continue;
        const GridPoint& v = verts->point(id);
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(v[0] >= v[1] ? 0 : 1);
    }

    RayTree t = build_tree_raw(n, 2, std::move(axes));
    t.meta["construction"] = "greedy";
    t.meta["n"] = std::to_string(n);
    int slices = 0;
    while ((1 << slices) < n) ++slices;
    t.meta["slices"] = std::to_string(slices);
    t.meta["seed_cdr"] = cfg.seed_cdr == SeedCdr::parent_right ? "right" : "up";
    return t;
}

RayTree tradeoff_weak_cdr(int n_max, int c) {
    if (c < 1 || c > n_max) throw BadScale("need 1 <= c <= N");
    int coarse = next_power_of_two((n_max + c - 1) / c);
    coarse = std::max(coarse, 2);
    RayTree g = greedy_weak_cdr({coarse, SeedCdr::parent_right});

    auto verts = std::make_shared<VertexTable>(n_max, 2);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);

    // scale every coarse edge into a run of c unit edges, truncated to G+_N
    for (int gid = 1; gid < g.size(); ++gid) {
        const GridPoint& v = g.point(gid);
        int axis = g.parent_axis[static_cast<size_t>(gid)];
        for (int step = 0; step < c; ++step) {
            GridPoint w(v[0] * c, v[1] * c);
            w[axis] -= step;
            int id = verts->id_of(w);
            if (id > 0) axes[static_cast<size_t>(id)] = static_cast<int8_t>(axis);
        }
    }

    // refined vertices not on the scaled tree branch left or down
    for (int id = 1; id < verts->size(); ++id) {
        if (axes[static_cast<size_t>(id)] >= 0) continue;
        const GridPoint& v = verts->point(id);
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(v[0] >= v[1] ? 0 : 1);
    }

    RayTree t = build_tree_raw(n_max, 2, std::move(axes));
    t.meta["construction"] = "tradeoff";
    t.meta["n"] = std::to_string(n_max);
    t.meta["c"] = std::to_string(c);
    t.meta["coarse_n"] = std::to_string(coarse);
    return t;
}

RayTree axis_order_cdr(int n_max, int dim) {
    if (dim < 2) throw OutOfDomain("axis_order_cdr requires dim >= 2");
    auto verts = std::make_shared<VertexTable>(n_max, dim);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    for (int id = 1; id < verts->size(); ++id) {
        const GridPoint& v = verts->point(id);
        int last = dim - 1;
        while (v[last] == 0) --last;
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(last);
    }
    RayTree t = build_tree_raw(n_max, dim, std::move(axes));
    t.meta["construction"] = "axis-order";
    t.meta["n"] = std::to_string(n_max);
    t.meta["dim"] = std::to_string(dim);
    return t;
}

int PrunedTree::snap_distance(int dropped_id) const {
    auto it = snap.find(dropped_id);
    if (it == snap.end()) return 0;
    const GridPoint& a = base.point(dropped_id);
    const GridPoint& b = base.point(it->second);
    int d = 0;
    for (int k = 0; k < a.dim(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
    return d;
}

PrunedTree prune_inner_branches(const RayTree& tree) {
    if (tree.dim != 2) throw OutOfDomain("pruning is defined for 2D trees");
    PrunedTree out;
    out.base = tree;
    out.kept.assign(static_cast<size_t>(tree.size()), 1);

    auto ch = tree.children();
    std::vector<int> child_count(static_cast<size_t>(tree.size()), 0);
    for (int id = 0; id < tree.size(); ++id)
        child_count[static_cast<size_t>(id)] = static_cast<int>(ch[static_cast<size_t>(id)].size());

    std::deque<int> queue;
    for (int id = 0; id < tree.size(); ++id)
        if (tree.verts->layer(id) < tree.n && child_count[static_cast<size_t>(id)] == 0)
            queue.push_back(id);

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        out.kept[static_cast<size_t>(id)] = 0;
        int par = tree.parent_of(id);
        if (par >= 0) {
            child_count[static_cast<size_t>(par)] -= 1;
            if (child_count[static_cast<size_t>(par)] == 0 && tree.verts->layer(par) < tree.n)
                queue.push_back(par);
        }
    }

    // nearest kept vertex per dropped vertex, found by growing L-infinity balls
    for (int id = 0; id < tree.size(); ++id) {
        if (out.kept[static_cast<size_t>(id)]) {
            out.kept_count += 1;
            continue;
        }
        const GridPoint& p = tree.point(id);
        int found = -1;
        for (int r = 1; found < 0 && r <= 2 * tree.n; ++r) {
            for (int dx = -r; dx <= r && found < 0; ++dx) {
                for (int dy = -r; dy <= r; ++dy) {
                    if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
                    GridPoint q(p[0] + dx, p[1] + dy);
                    int qid = tree.verts->id_of(q);
                    if (qid >= 0 && out.kept[static_cast<size_t>(qid)]) {
                        found = qid;
                        break;
                    }
                }
            }
        }
        out.snap[id] = found;
    }
    return out;
}

}  // namespace digiray
