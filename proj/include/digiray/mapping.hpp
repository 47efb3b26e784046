#pragma once

#include <string>
#include <utility>
#include <vector>

#include "digiray/rational.hpp"
#include "digiray/tree.hpp"

namespace digiray {

// Auxiliary labels that linearize a 2D weak CDR. M maps vertices into [0,1],
// sorted along each layer; gamma is the preferred-subtree walk.
struct AuxAssignment {
    std::vector<Rat> m_value;             // per vertex id
    std::vector<int> gamma;               // per vertex id -> leaf vertex id
    std::vector<int> preferred_child;     // split vertex id -> child id, else -1
    std::vector<std::pair<Rat, Rat>> subtree_minmax;  // over leaves below
    std::vector<int> depth;
    std::vector<char> is_split;
    std::vector<char> is_inner_leaf;
};

struct BicoloredPointSet {
    enum class Kind { exact, floating };
    Kind kind = Kind::exact;
    std::vector<std::pair<Rat, Rat>> blue, red;              // kind == exact
    std::vector<std::pair<double, double>> fblue, fred;      // kind == floating

    size_t blue_count() const {
        return kind == Kind::exact ? blue.size() : fblue.size();
    }
    size_t red_count() const {
        return kind == Kind::exact ? red.size() : fred.size();
    }
};

struct MappingReport {
    bool sorted_ok = false;        // layer sortedness of subtree min/max
    bool bijection_ok = false;     // split <-> leaf pairing, (N,0) excluded
    bool rows_ok = false;          // row alternation and cumulative counts
    bool empty_rect_ok = false;    // one blue point per split rectangle
    bool column_claim_ok = false;  // per-column prefix difference in {0,1}
    bool interp_ok = false;        // the two-sided count sandwich
    std::string counterexample;

    bool all_ok() const {
        return sorted_ok && bijection_ok && rows_ok && empty_rect_ok && column_claim_ok &&
               interp_ok;
    }
};

AuxAssignment compute_aux(const RayTree& tree);

// Blue points from split vertices, red points from inner leaves; boundary
// leaves are not transformed.
BicoloredPointSet transform_pi(const RayTree& tree);

MappingReport validate_mapping(const RayTree& tree);

// One staircase of alternating blue/red points, x ascending, y descending.
template <typename T>
struct StaircaseT {
    int index = 0;  // level-curve band the stair approximates
    std::vector<std::pair<T, T>> points;
    std::vector<char> is_blue;
};

using StaircaseR = StaircaseT<Rat>;
using StaircaseF = StaircaseT<double>;

// Decomposes a pi image into staircases along the level sets of the prefix
// count B[x,y]-R[x,y], lower level preferred at shared corners.
std::vector<StaircaseR> staircase_decompose(const BicoloredPointSet& points);

}  // namespace digiray
