#include <doctest.h>

#include "digiray/construct.hpp"
#include "digiray/errors.hpp"
#include "digiray/io.hpp"
#include "digiray/tree.hpp"

using namespace digiray;

TEST_CASE("vertex enumeration is canonical: layer first, then lexicographic") {
    VertexTable t(3, 2);
    CHECK(t.size() == 10);
    CHECK(t.point(0).coords == std::vector<int>{0, 0});
    CHECK(t.point(1).coords == std::vector<int>{0, 1});
    CHECK(t.point(2).coords == std::vector<int>{1, 0});
    CHECK(t.point(3).coords == std::vector<int>{0, 2});
    CHECK(t.point(4).coords == std::vector<int>{1, 1});
    CHECK(t.point(5).coords == std::vector<int>{2, 0});
    CHECK(t.id_of(GridPoint(2, 1)) == 8);
    CHECK(t.id_of(GridPoint(4, 0)) == -1);
    CHECK(t.id_of(GridPoint(-1, 2)) == -1);

    VertexTable t3(2, 3);
    CHECK(t3.size() == 10);  // 1 + 3 + 6
    CHECK(t3.point(1).coords == std::vector<int>{0, 0, 1});
    CHECK(t3.point(4).coords == std::vector<int>{0, 0, 2});
}

TEST_CASE("build_tree accepts the unique N=1 tree") {
    RayTree t = build_tree(1, 2, {{GridPoint(1, 0), 0}, {GridPoint(0, 1), 1}});
    CHECK(t.size() == 3);
    CHECK(t.parent_of(t.verts->id_of(GridPoint(1, 0))) == 0);
    CHECK(verify_axioms(t, VerifyMode::proper).passed());
}

TEST_CASE("build_tree rejects invalid axes and missing parents") {
    // (1,0) cannot step down in y
    CHECK_THROWS_AS(build_tree(1, 2, {{GridPoint(1, 0), 1}, {GridPoint(0, 1), 1}}), InvalidAxis);
    CHECK_THROWS_AS(build_tree(1, 2, {{GridPoint(1, 0), 0}}), MissingParent);
    CHECK_THROWS_AS(build_tree(1, 2,
                               {{GridPoint(1, 0), 0}, {GridPoint(0, 1), 1},
                                {GridPoint(2, 2), 0}}),
                    OutOfDomain);
}

TEST_CASE("axis-order CDR verifies proper with zero inner leaves") {
    RayTree t = axis_order_cdr(4, 2);
    AxiomReport rep = verify_axioms(t, VerifyMode::proper);
    CHECK(rep.passed());
    CHECK(rep.s4_violators.empty());

    VertexCensus c = census(t);
    CHECK(c.inner_leaves.empty());
    CHECK(c.boundary_leaves.size() == 5);
    REQUIRE(c.split_vertices.size() == 4);
    // splits are exactly the x-axis vertices below L_N
    for (const auto& s : c.split_vertices) CHECK(s[1] == 0);
}

TEST_CASE("GREEDY N=8 fails proper verification but passes weak") {
    RayTree t = greedy_weak_cdr({8, SeedCdr::parent_right});
    AxiomReport proper = verify_axioms(t, VerifyMode::proper);
    CHECK_FALSE(proper.passed());
    CHECK(proper.s4_violators.size() >= 1);
    AxiomReport weak = verify_axioms(t, VerifyMode::weak);
    CHECK(weak.passed());
}

TEST_CASE("proper 2D trees have exactly one split and no inner leaf per layer") {
    for (const RayTree& t : {axis_order_cdr(12, 2), random_proper_cdr(12, 2, 3)}) {
        VertexCensus c = census(t);
        REQUIRE(c.has_layer_tallies);
        for (int n = 0; n < t.n; ++n) {
            CHECK(c.splits_per_layer[static_cast<size_t>(n)] == 1);
            CHECK(c.inner_per_layer[static_cast<size_t>(n)] == 0);
        }
    }
}

TEST_CASE("census balance: splits minus inner leaves is one per layer") {
    for (uint64_t seed : {0u, 1u, 7u}) {
        RayTree t = random_weak_cdr(16, seed);
        VertexCensus c = census(t);
        REQUIRE(c.has_layer_tallies);
        for (int n = 0; n < t.n; ++n)
            CHECK(c.splits_per_layer[static_cast<size_t>(n)] -
                      c.inner_per_layer[static_cast<size_t>(n)] ==
                  1);
    }
}

TEST_CASE("splits and inner leaves alternate along each layer") {
    RayTree t = random_weak_cdr(24, 42);
    auto ch = t.children();
    for (int n = 0; n < t.n; ++n) {
        std::vector<int> kinds;  // +1 split, -1 inner leaf, walking x ascending
        for (int id : t.verts->layer_ids(n)) {
            size_t kids = ch[static_cast<size_t>(id)].size();
            if (id == 0 || kids == 2)
                kinds.push_back(+1);
            else if (kids == 0)
                kinds.push_back(-1);
        }
        REQUIRE(!kinds.empty());
        CHECK(kinds.front() == 1);
        CHECK(kinds.back() == 1);
        for (size_t k = 0; k + 1 < kinds.size(); ++k) CHECK(kinds[k] != kinds[k + 1]);
    }
}

TEST_CASE("path_to follows the tree and is layer-monotone") {
    RayTree t = axis_order_cdr(4, 2);
    auto path = path_to(t, GridPoint(2, 1));
    REQUIRE(path.size() == 4);
    CHECK(path[0] == GridPoint(0, 0));
    CHECK(path[1] == GridPoint(1, 0));
    CHECK(path[2] == GridPoint(2, 0));
    CHECK(path[3] == GridPoint(2, 1));

    CHECK(path_to(t, GridPoint(0, 0)).size() == 1);
    CHECK_THROWS_AS(path_to(t, GridPoint(9, 9)), OutOfDomain);

    for (int id = 0; id < t.size(); ++id) {
        auto p = path_to(t, t.point(id));
        CHECK(static_cast<int>(p.size()) == t.verts->layer(id) + 1);
        for (size_t k = 1; k < p.size(); ++k) {
            int diff = 0;
            for (int c = 0; c < 2; ++c) diff += std::abs(p[k][c] - p[k - 1][c]);
            CHECK(diff == 1);
        }
    }
}

TEST_CASE("random weak CDRs are deterministic under seed and weak-valid") {
    RayTree a = random_weak_cdr(8, 0, 0.3);
    RayTree b = random_weak_cdr(8, 0, 0.3);
    CHECK(a.parent_axis == b.parent_axis);

    RayTree c = random_weak_cdr(1, 99);
    CHECK(c.size() == 3);  // the unique tree on G+_1

    for (uint64_t seed = 0; seed < 50; ++seed) {
        RayTree t = random_weak_cdr(static_cast<int>(seed % 32) + 1, seed);
        CHECK(verify_axioms(t, VerifyMode::weak).passed());
    }
}

TEST_CASE("random proper CDRs verify proper in 2 and 3 dimensions") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        RayTree t2 = random_proper_cdr(4, 2, seed);
        CHECK(verify_axioms(t2, VerifyMode::proper).passed());
        CHECK(census(t2).inner_leaves.empty());

        RayTree t3 = random_proper_cdr(8, 3, seed);
        CHECK(verify_axioms(t3, VerifyMode::proper).passed());
    }
}

TEST_CASE("census above two dimensions reports leaf classes only") {
    RayTree t = random_proper_cdr(6, 3, 1);
    VertexCensus c = census(t);
    CHECK_FALSE(c.has_layer_tallies);
    CHECK(c.split_vertices.empty());
    CHECK(c.boundary_leaves.size() == static_cast<size_t>(t.verts->layer_ids(6).size()));
    CHECK(c.inner_leaves.empty());  // proper construction
}

TEST_CASE("restriction of axis-order 3D equals axis-order 2D") {
    RayTree t3 = axis_order_cdr(4, 3);
    RayTree flat = restrict_to_plane(t3, 0, 1);
    RayTree t2 = axis_order_cdr(4, 2);
    CHECK(flat.parent_axis == t2.parent_axis);
    CHECK(verify_axioms(flat, VerifyMode::weak).passed());
    CHECK(census(flat).inner_leaves.empty());
}

TEST_CASE("restrictions of random proper 3D CDRs pass weak verification") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        RayTree t = random_proper_cdr(12, 3, seed);
        RayTree flat = restrict_to_plane(t, 0, 1);
        CHECK(verify_axioms(flat, VerifyMode::weak).passed());
    }
}

TEST_CASE("serialize/deserialize is the identity on trees") {
    RayTree t = greedy_weak_cdr({16, SeedCdr::parent_right});
    std::string json = tree_to_json(t);
    RayTree back = tree_from_json(json);
    CHECK(back.n == t.n);
    CHECK(back.dim == t.dim);
    CHECK(back.parent_axis == t.parent_axis);
    CHECK(back.meta == t.meta);
    CHECK(tree_to_json(back) == json);  // bit-exact round trip
}
