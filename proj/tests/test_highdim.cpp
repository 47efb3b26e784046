#include <doctest.h>

#include "digiray/construct.hpp"
#include "digiray/errors.hpp"
#include "digiray/highdim.hpp"
#include "digiray/metrics.hpp"
#include "digiray/tree.hpp"

using namespace digiray;

namespace {

// Hand-built 3D proper CDR on G+_4 where two xy-plane vertices only extend
// through z, so the plane restriction has inner leaves.
RayTree plane_leaf_tree() {
    VertexTable verts(4, 3);
    std::vector<int8_t> axes(static_cast<size_t>(verts.size()), -1);
    // start from axis-order (strip the last nonzero axis), which is proper
    for (int id = 1; id < verts.size(); ++id) {
        const GridPoint& v = verts.point(id);
        int last = 2;
        while (v[last] == 0) --last;
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(last);
    }
    auto set_axis = [&](GridPoint p, int axis) {
        axes[static_cast<size_t>(verts.id_of(p))] = static_cast<int8_t>(axis);
    };
    // strip the only in-plane children of (1,1,0) and (2,1,0); both still
    // extend through their z-children, so the 3D tree stays proper
    set_axis(GridPoint(1, 2, 0), 0);  // parent (0,2,0) instead of (1,1,0)
    set_axis(GridPoint(2, 2, 0), 0);  // parent (1,2,0) instead of (2,1,0)
    return build_tree_raw(4, 3, std::move(axes));
}

}  // namespace

TEST_CASE("threshold comparison is exact in integers") {
    // u_j >= (kappa2/N)^{1/(d-2)} - 1 with d=3: N*(u_j+1) >= kappa2
    CHECK(meets_threshold(2, 48, 16, 3));        // 16*3 = 48 >= 48
    CHECK_FALSE(meets_threshold(1, 48, 16, 3));  // 32 < 48
    // d=4: N*(u_j+1)^2 >= kappa2
    CHECK(meets_threshold(1, 64, 16, 4));
    CHECK_FALSE(meets_threshold(0, 17, 16, 4));
}

TEST_CASE("axis-order 3D has no inner leaves in the plane, hence no witness") {
    RayTree t = axis_order_cdr(8, 3);
    CHECK(!packing_witness(t).has_value());
}

TEST_CASE("packing witness requires dim >= 3 and even N") {
    CHECK_THROWS_AS(packing_witness(axis_order_cdr(8, 2)), OutOfDomain);
    CHECK_THROWS_AS(packing_witness(axis_order_cdr(7, 3)), OddN);
}

TEST_CASE("hand-built plane-starved tree yields kappa2 > 0 and a witness") {
    RayTree t = plane_leaf_tree();
    REQUIRE(verify_axioms(t, VerifyMode::proper).passed());
    RayTree flat = restrict_to_plane(t, 0, 1);
    CHECK(verify_axioms(flat, VerifyMode::weak).passed());
    long k2 = kappa2_of(flat);
    CHECK(k2 >= 1);
    auto w = packing_witness(t);
    REQUIRE(w.has_value());
    CHECK(w->kappa2 == k2);
    CHECK(w->j >= 2);
    CHECK(w->u_j >= 1);
    CHECK(meets_threshold(w->u_j, w->kappa2, t.n, t.dim));
    // v sits on the plane's middle layer with the boundary leaf in its subtree
    CHECK(w->v.layer() == t.n / 2 - 1);
    CHECK(w->v[2] == 0);
    CHECK(w->u.layer() == t.n);
}

TEST_CASE("random proper 3D CDRs: witness exists whenever kappa2 > 0") {
    int with_leaves = 0;
    for (uint64_t seed = 0; seed < 25; ++seed) {
        RayTree t = random_proper_cdr(16, 3, seed);
        RayTree flat = restrict_to_plane(t, 0, 1);
        long k2 = kappa2_of(flat);
        auto w = packing_witness(t);
        if (k2 == 0) {
            CHECK(!w.has_value());
            continue;
        }
        ++with_leaves;
        REQUIRE(w.has_value());
        CHECK(w->kappa2 == k2);
        CHECK(meets_threshold(w->u_j, k2, t.n, t.dim));
        // counting identity from the packing argument
        CHECK(boundary_box_census(t.n, t.dim, k2) < k2);
    }
    CHECK(with_leaves > 0);  // the generator does produce the interesting case
}

TEST_CASE("crossing-plane deviation formula and bound") {
    RayTree t = random_proper_cdr(16, 3, 1);
    auto w = packing_witness(t);
    REQUIRE(w.has_value());
    Rat dev = crossing_plane_error(t, *w);
    CHECK(dev == rat(w->u_j * (t.n / 2 - 1), t.n));
    // u'_j >= u_j / 3 for N >= 6
    CHECK(dev >= rat(w->u_j, 3));
    CHECK(rat_double(dev) >= w->threshold / 3.0 - 1.0);
}

TEST_CASE("crossing-plane error rejects tiny grids") {
    RayTree t = plane_leaf_tree();  // N = 4
    auto w = packing_witness(t);
    REQUIRE(w.has_value());
    CHECK_THROWS_AS(crossing_plane_error(t, *w), OutOfDomain);
}

TEST_CASE("boundary box census counts the small-coordinate boundary region") {
    // d=3, N=4: x3 needs 4*(x3+1) < kappa2 and x3 >= 1 (else x1+x2 = N)
    CHECK(boundary_box_census(4, 3, 8) == 0);        // no x3 >= 1 qualifies
    CHECK(boundary_box_census(4, 3, 9) == 4);        // x3 = 1 only, 4 choices of x1
    CHECK(boundary_box_census(4, 3, 20) == 4 + 3 + 2);  // x3 in {1,2,3}
}
