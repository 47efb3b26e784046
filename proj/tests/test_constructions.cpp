#include <doctest.h>

#include <cmath>
#include <set>

#include "digiray/construct.hpp"
#include "digiray/errors.hpp"
#include "digiray/metrics.hpp"
#include "digiray/tree.hpp"

using namespace digiray;

TEST_CASE("greedy path base examples") {
    auto p = greedy_path(GridPoint(1, 1));
    REQUIRE(p.size() == 3);
    CHECK(p[0] == GridPoint(1, 1));
    CHECK(p[1] == GridPoint(2, 1));  // tie at (1,2)/(2,1) resolved toward smaller y
    CHECK(p[2] == GridPoint(2, 2));

    auto ax = greedy_path(GridPoint(2, 0));
    CHECK(ax == std::vector<GridPoint>{GridPoint(2, 0), GridPoint(3, 0), GridPoint(4, 0)});
    auto ay = greedy_path(GridPoint(0, 2));
    CHECK(ay == std::vector<GridPoint>{GridPoint(0, 2), GridPoint(0, 3), GridPoint(0, 4)});
}

TEST_CASE("greedy paths are 4-neighbor connected, monotone, near the segment") {
    for (int half : {2, 4, 8, 16, 32}) {
        for (int x = 0; x <= half; ++x) {
            GridPoint p(x, half - x);
            auto path = greedy_path(p);
            REQUIRE(static_cast<int>(path.size()) == half + 1);
            for (size_t k = 1; k < path.size(); ++k) {
                int dx = path[k][0] - path[k - 1][0];
                int dy = path[k][1] - path[k - 1][1];
                CHECK(dx >= 0);
                CHECK(dy >= 0);
                CHECK(dx + dy == 1);
            }
            // every path vertex within L-infinity 1/2 of segment p-2p:
            // at layer j the segment crosses at x = j*px/(px+py)
            for (size_t k = 0; k < path.size(); ++k) {
                long j = half + static_cast<long>(k);
                long lhs = std::llabs(2 * path[k][0] * half - 2 * j * x);
                CHECK(lhs <= 2L * half / 2);  // |vx - j*px/L| <= 1/2
            }
        }
    }
}

TEST_CASE("greedy paths within one slice are disjoint") {
    for (int half : {4, 8, 16}) {
        std::set<std::pair<int, int>> seen;
        for (int x = 0; x <= half; ++x) {
            auto path = greedy_path(GridPoint(x, half - x));
            // interior of the slice: layers strictly between half and 2*half
            for (size_t k = 1; k + 1 < path.size(); ++k) {
                auto key = std::make_pair(path[k][0], path[k][1]);
                CHECK(seen.insert(key).second);
            }
        }
    }
}

TEST_CASE("GREEDY requires a power of two") {
    CHECK_THROWS_AS(greedy_weak_cdr({31, SeedCdr::parent_right}), NotPowerOfTwo);
    CHECK_THROWS_AS(greedy_weak_cdr({0, SeedCdr::parent_right}), NotPowerOfTwo);
}

TEST_CASE("GREEDY partitions the grid into log2(N) slices") {
    CHECK(greedy_weak_cdr({32, SeedCdr::parent_right}).meta.at("slices") == "5");
    CHECK(greedy_weak_cdr({4, SeedCdr::parent_right}).meta.at("slices") == "2");
}

TEST_CASE("GREEDY seed choice fixes the parent of (1,1)") {
    RayTree right = greedy_weak_cdr({2, SeedCdr::parent_right});
    CHECK(right.parent_of(right.verts->id_of(GridPoint(1, 1))) ==
          right.verts->id_of(GridPoint(1, 0)));
    RayTree up = greedy_weak_cdr({2, SeedCdr::parent_up});
    CHECK(up.parent_of(up.verts->id_of(GridPoint(1, 1))) == up.verts->id_of(GridPoint(0, 1)));
}

TEST_CASE("GREEDY inner-leaf count follows the per-slice formula at small N") {
    // per slice i the bound is 2^{i-2}(2^{i-2}-1), which vanishes for i = 2
    RayTree g4 = greedy_weak_cdr({4, SeedCdr::parent_right});
    CHECK(census(g4).inner_leaves.empty());

    RayTree g8 = greedy_weak_cdr({8, SeedCdr::parent_right});
    auto c8 = census(g8);
    CHECK(c8.inner_leaves.size() <= 2);  // slice 3 allows 2^1*(2^1-1) = 2

    for (int n : {16, 32, 64}) {
        RayTree g = greedy_weak_cdr({n, SeedCdr::parent_right});
        long bound = 0;
        for (int i = 2; (1 << i) <= n; ++i)
            bound += (1L << (i - 2)) * ((1L << (i - 2)) - 1);
        auto c = census(g);
        CHECK(static_cast<long>(c.inner_leaves.size()) <= bound);
        CHECK(static_cast<long>(c.inner_leaves.size()) < n * n / 12);
    }
}

TEST_CASE("the ray to (2,2) threads the seed slice through (1,0)") {
    RayTree g = greedy_weak_cdr({4, SeedCdr::parent_right});
    auto path = path_to(g, GridPoint(2, 2));
    std::vector<GridPoint> want{GridPoint(0, 0), GridPoint(1, 0), GridPoint(1, 1),
                                GridPoint(2, 1), GridPoint(2, 2)};
    CHECK(path == want);

    RayTree up = greedy_weak_cdr({4, SeedCdr::parent_up});
    auto path2 = path_to(up, GridPoint(2, 2));
    CHECK(path2[1] == GridPoint(0, 1));  // the other seed choice
}

TEST_CASE("digital rays of GREEDY pass the halved intermediate points") {
    // dig(o,p) goes through (floor(px/2), ceil(py/2)) when px >= py, else the
    // mirrored rounding
    for (int n : {8, 16, 32}) {
        RayTree g = greedy_weak_cdr({static_cast<int>(n), SeedCdr::parent_right});
        for (int half = 4; half <= n / 2; half *= 2) {
            for (int x = 0; x <= half; ++x) {
                GridPoint p(x, half - x);
                GridPoint q = x >= half - x
                                  ? GridPoint(x / 2, (half - x + 1) / 2)
                                  : GridPoint((x + 1) / 2, (half - x) / 2);
                auto path = path_to(g, p);
                bool found = false;
                for (const auto& v : path)
                    if (v == q) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("every greedy-path vertex extends to the boundary") {
    RayTree g = greedy_weak_cdr({16, SeedCdr::parent_right});
    auto ch = g.children();
    std::set<int> on_greedy;
    for (int half = 2; half < 16; half *= 2)
        for (int x = 0; x <= half; ++x)
            for (const auto& v : greedy_path(GridPoint(x, half - x)))
                on_greedy.insert(g.verts->id_of(v));
    // walk up from each greedy vertex: some chain of children reaches L_N
    for (int id : on_greedy) {
        int layer = g.verts->layer(id);
        if (layer == g.n) continue;
        // greedy vertices always retain a child (no inner leaves on paths)
        CHECK(!ch[static_cast<size_t>(id)].empty());
    }
}

TEST_CASE("axis-order properties") {
    RayTree t = axis_order_cdr(6, 2);
    CHECK(verify_axioms(t, VerifyMode::proper).passed());
    CHECK(census(t).inner_leaves.empty());

    RayTree t3 = axis_order_cdr(4, 3);
    CHECK(verify_axioms(t3, VerifyMode::proper).passed());
}

TEST_CASE("trade-off construction validates and respects the scale bound") {
    CHECK_THROWS_AS(tradeoff_weak_cdr(8, 9), BadScale);
    CHECK_THROWS_AS(tradeoff_weak_cdr(8, 0), BadScale);

    RayTree t = tradeoff_weak_cdr(24, 3);
    CHECK(t.n == 24);
    CHECK(verify_axioms(t, VerifyMode::weak).passed());
    CHECK(t.meta.at("coarse_n") == "8");

    // scale 1 on a power of two reproduces GREEDY
    RayTree base = greedy_weak_cdr({16, SeedCdr::parent_right});
    RayTree same = tradeoff_weak_cdr(16, 1);
    CHECK(same.parent_axis == base.parent_axis);
}

TEST_CASE("trade-off frontier: error grows with c while leaves shrink") {
    std::vector<long> leaves;
    std::vector<double> errors;
    for (int c : {2, 4, 8}) {
        RayTree t = tradeoff_weak_cdr(64, c);
        auto rep = verify_axioms(t, VerifyMode::weak);
        REQUIRE(rep.passed());
        leaves.push_back(rep.inner_leaf_count);
        errors.push_back(rat_double(hausdorff_tree(t).value));
    }
    CHECK(leaves[0] > leaves[1]);
    CHECK(leaves[1] > leaves[2]);
    CHECK(errors[0] <= errors[1] + 1e-9);
    CHECK(errors[1] <= errors[2] + 1e-9);
    // linear-in-c envelope, measured constant comfortably below 5/2 * c
    for (size_t k = 0; k < errors.size(); ++k)
        CHECK(errors[k] <= 2.5 * std::pow(2.0, static_cast<double>(k + 1)));
}

TEST_CASE("pruning a proper CDR is the identity") {
    RayTree t = axis_order_cdr(8, 2);
    PrunedTree pt = prune_inner_branches(t);
    CHECK(pt.kept_count == t.size());
    CHECK(pt.snap.empty());
}

TEST_CASE("pruned GREEDY snaps within distance one and stays extendable") {
    for (int n : {8, 16, 32}) {
        RayTree g = greedy_weak_cdr({n, SeedCdr::parent_right});
        PrunedTree pt = prune_inner_branches(g);
        for (const auto& [dropped, kept] : pt.snap) {
            CHECK(kept >= 0);
            CHECK(pt.snap_distance(dropped) <= 1);
        }
        // S4 restricted to the kept set: every kept vertex below L_N has a
        // kept child
        auto ch = g.children();
        for (int id = 0; id < g.size(); ++id) {
            if (!pt.is_kept(id) || g.verts->layer(id) >= g.n) continue;
            bool has_kept_child = false;
            for (int c : ch[static_cast<size_t>(id)])
                if (pt.is_kept(c)) has_kept_child = true;
            CHECK(has_kept_child);
        }
    }
}
