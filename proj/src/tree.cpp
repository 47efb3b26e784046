#include "digiray/tree.hpp"

#include <algorithm>
#include <random>

#include "digiray/errors.hpp"

namespace digiray {

int RayTree::parent_of(int id) const {
    int axis = parent_axis[static_cast<size_t>(id)];
    if (axis < 0) return -1;
    GridPoint p = verts->point(id);
    p[axis] -= 1;
    return verts->id_of(p);
}

std::vector<std::vector<int>> RayTree::children() const {
    std::vector<std::vector<int>> ch(static_cast<size_t>(size()));
    for (int id = 0; id < size(); ++id) {
        int par = parent_of(id);
        if (par >= 0) ch[static_cast<size_t>(par)].push_back(id);
    }
    // canonical per-parent order: ascending axis of the connecting step
    for (auto& c : ch)
        std::sort(c.begin(), c.end(), [this](int a, int b) {
            return parent_axis[static_cast<size_t>(a)] < parent_axis[static_cast<size_t>(b)];
        });
    return ch;
}

RayTree build_tree_raw(int n_max, int dim, std::vector<int8_t> axes) {
    RayTree t;
    t.n = n_max;
    t.dim = dim;
    t.verts = std::make_shared<VertexTable>(n_max, dim);
    if (static_cast<int>(axes.size()) != t.size())
        throw MissingParent("axis assignment does not cover every vertex of G+_N");
    t.parent_axis = std::move(axes);
    t.parent_axis[0] = -1;

    for (int id = 1; id < t.size(); ++id) {
        int axis = t.parent_axis[static_cast<size_t>(id)];
        const GridPoint& p = t.verts->point(id);
        if (axis < 0 || axis >= dim)
            throw InvalidAxis("axis " + std::to_string(axis) + " out of range at " + p.str());
        if (p[axis] < 1)
            throw InvalidAxis("vertex " + p.str() + " has zero coordinate on axis " +
                              std::to_string(axis));
    }

    // Decrement encoding cannot create cycles, but confirm every vertex
    // reaches the origin through valid ids.
    for (int id = 1; id < t.size(); ++id)
        if (t.parent_of(id) < 0) throw NotATree("broken parent link at " + t.point(id).str());
    return t;
}

RayTree build_tree(int n_max, int dim,
                   const std::vector<std::pair<GridPoint, int>>& parent_axis) {
    auto verts = std::make_shared<VertexTable>(n_max, dim);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    for (const auto& [p, axis] : parent_axis) {
        int id = verts->id_of(p);
        if (id < 0) throw OutOfDomain("assignment names " + p.str() + " outside G+_N");
        if (id == 0) throw InvalidAxis("the origin has no parent");
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(axis);
    }
    for (int id = 1; id < verts->size(); ++id)
        if (axes[static_cast<size_t>(id)] < 0)
            throw MissingParent("no parent assigned to " + verts->point(id).str());
    return build_tree_raw(n_max, dim, std::move(axes));
}

AxiomReport verify_axioms(const RayTree& tree, VerifyMode mode) {
    AxiomReport rep;
    rep.mode = mode;
    rep.vertex_count = tree.size();

    // S1 + S5: each parent step decrements exactly one coordinate by one and
    // never leaves the orthant.
    bool s1 = true;
    for (int id = 1; id < tree.size() && s1; ++id) {
        int axis = tree.parent_axis[static_cast<size_t>(id)];
        if (axis < 0 || axis >= tree.dim || tree.point(id)[axis] < 1) s1 = false;
    }
    rep.s1_ok = s1;
    rep.s5_ok = s1;  // zero coordinates stay zero along any monotone path
    rep.s2_ok = true;

    // S3: every vertex reaches the origin along strictly decreasing layers.
    bool s3 = s1;
    if (s3) {
        for (int id = 1; id < tree.size(); ++id) {
            int par = tree.parent_of(id);
            if (par < 0 || tree.verts->layer(par) != tree.verts->layer(id) - 1) {
                s3 = false;
                break;
            }
        }
    }
    rep.s3_ok = s3;

    // S4: a vertex below L_N with no child cannot be prolonged.
    auto ch = tree.children();
    for (int id = 0; id < tree.size(); ++id) {
        if (tree.verts->layer(id) < tree.n && ch[static_cast<size_t>(id)].empty())
            rep.s4_violators.push_back(tree.point(id));
    }
    rep.inner_leaf_count = static_cast<int>(rep.s4_violators.size());
    return rep;
}

VertexCensus census(const RayTree& tree) {
    VertexCensus c;
    auto ch = tree.children();
    bool two_d = tree.dim == 2;
    c.has_layer_tallies = two_d;
    if (two_d) {
        c.splits_per_layer.assign(static_cast<size_t>(tree.n), 0);
        c.inner_per_layer.assign(static_cast<size_t>(tree.n), 0);
    }
    for (int id = 0; id < tree.size(); ++id) {
        int layer = tree.verts->layer(id);
        size_t kids = ch[static_cast<size_t>(id)].size();
        if (layer == tree.n) {
            c.boundary_leaves.push_back(tree.point(id));
            continue;
        }
        if (kids == 0) {
            c.inner_leaves.push_back(tree.point(id));
            if (two_d) c.inner_per_layer[static_cast<size_t>(layer)] += 1;
        } else if (two_d && (id == 0 || kids == 2)) {
            c.split_vertices.push_back(tree.point(id));
            c.splits_per_layer[static_cast<size_t>(layer)] += 1;
        } else {
            c.degree_two_count += 1;
        }
    }
    return c;
}

std::vector<GridPoint> path_to(const RayTree& tree, const GridPoint& p) {
    int id = tree.verts->id_of(p);
    if (id < 0) throw OutOfDomain(p.str() + " is not in G+_N");
    std::vector<GridPoint> path;
    while (id >= 0) {
        path.push_back(tree.point(id));
        id = tree.parent_of(id);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

RayTree restrict_to_plane(const RayTree& tree, int axis_i, int axis_j) {
    if (tree.dim < 3) throw OutOfDomain("restriction requires dim >= 3");
    if (axis_i == axis_j || axis_i < 0 || axis_j < 0 || axis_i >= tree.dim || axis_j >= tree.dim)
        throw OutOfDomain("invalid plane axes");

    auto verts2 = std::make_shared<VertexTable>(tree.n, 2);
    std::vector<int8_t> axes(static_cast<size_t>(verts2->size()), -1);
    for (int id2 = 1; id2 < verts2->size(); ++id2) {
        const GridPoint& q = verts2->point(id2);
        GridPoint full(std::vector<int>(static_cast<size_t>(tree.dim), 0));
        full[axis_i] = q[0];
        full[axis_j] = q[1];
        int id = tree.verts->id_of(full);
        int axis = tree.parent_axis[static_cast<size_t>(id)];
        // monotone parents of in-plane vertices stay in the plane
        axes[static_cast<size_t>(id2)] = static_cast<int8_t>(axis == axis_i ? 0 : 1);
    }
    RayTree out = build_tree_raw(tree.n, 2, std::move(axes));
    out.meta = tree.meta;
    out.meta["restricted_axes"] = std::to_string(axis_i) + "," + std::to_string(axis_j);
    return out;
}

RayTree random_weak_cdr(int n_max, uint64_t seed, double leaf_rate) {
    if (leaf_rate < 0.0 || leaf_rate > 1.0) throw OutOfDomain("leaf_rate must be in [0,1]");
    auto verts = std::make_shared<VertexTable>(n_max, 2);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int n = 1; n <= n_max; ++n) {
        for (int id : verts->layer_ids(n)) {
            const GridPoint& p = verts->point(id);
            if (p[0] == 0) {
                axes[static_cast<size_t>(id)] = 1;
            } else if (p[1] == 0) {
                axes[static_cast<size_t>(id)] = 0;
            } else {
                // leaf_rate only biases this tie; S4 violations emerge when a
                // vertex ends up chosen by no child
                axes[static_cast<size_t>(id)] = unif(rng) < leaf_rate ? 0 : 1;
            }
        }
    }
    RayTree t = build_tree_raw(n_max, 2, std::move(axes));
    t.meta["construction"] = "random-weak";
    t.meta["n"] = std::to_string(n_max);
    t.meta["seed"] = std::to_string(seed);
    return t;
}

RayTree random_proper_cdr(int n_max, int dim, uint64_t seed) {
    if (dim < 2) throw OutOfDomain("random_proper_cdr requires dim >= 2");
    auto verts = std::make_shared<VertexTable>(n_max, dim);
    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    std::mt19937_64 rng(seed);

    // Left-to-right greedy matching per layer: every v in L_n claims the
    // child v + e_{d-1}, which is injective, so each vertex below L_N keeps
    // at least one child and (S4) holds by construction. Remaining vertices
    // of L_{n+1} pick a random parent.
    for (int n = 1; n <= n_max; ++n) {
        for (int id : verts->layer_ids(n)) {
            const GridPoint& p = verts->point(id);
            if (p[dim - 1] >= 1) {
                axes[static_cast<size_t>(id)] = static_cast<int8_t>(dim - 1);
                continue;
            }
            std::vector<int> options;
            for (int k = 0; k < dim; ++k)
                if (p[k] >= 1) options.push_back(k);
            if (options.empty()) throw InfeasibleLayer("unreachable vertex " + p.str());
            size_t pick = static_cast<size_t>(rng() % options.size());
            axes[static_cast<size_t>(id)] = static_cast<int8_t>(options[pick]);
        }
    }
    RayTree t = build_tree_raw(n_max, dim, std::move(axes));
    t.meta["construction"] = "random-proper";
    t.meta["n"] = std::to_string(n_max);
    t.meta["dim"] = std::to_string(dim);
    t.meta["seed"] = std::to_string(seed);
    return t;
}

}  // namespace digiray
