#pragma once

#include <utility>
#include <vector>

#include "digiray/mapping.hpp"

namespace digiray {

enum class FloatPrecision { double53, extended64 };

// Largest k such that the k-th greedy step between the level curves C_{i-1}
// and C_i stays inside the unit square: 0 for i = 1, otherwise
// floor(log(sqrt(m/(i-1))) / log(i/(i-1))). Computed from a float estimate
// and then pinned down by exact integer comparisons, so boundary cases like
// m = 4, i = 2 cannot fall to rounding.
long k_star(long m, long i);

// The m staircases approximating the curves C_{i-0.5}, mirrored across
// y = x with the diagonal point shared. Stair i carries 2k*(i)+1 blue and
// 2k*(i) red points.
std::vector<StaircaseF> symmetric_staircase_curves(
    long m, FloatPrecision prec = FloatPrecision::extended64);

BicoloredPointSet symmetric_staircases(long m,
                                       FloatPrecision prec = FloatPrecision::extended64);

BicoloredPointSet flatten_stairs(const std::vector<StaircaseF>& stairs);

// (|B|, |R|) of the symmetric construction; |B| - |R| = m.
std::pair<long, long> point_counts(long m);

// Minimal greedy stair between C_{i-xi} and C_{i+xi-1}; empty when i <= xi.
StaircaseF greedy_stair_between(long m, long i, long xi,
                                FloatPrecision prec = FloatPrecision::extended64);

// True when the capped curve of the stair passes weakly below-left of (x,y).
bool stair_dominated(const StaircaseF& st, double x, double y, bool x_strict = false,
                     bool y_strict = false);

// Stairs ordered SW to NE without crossing (touching allowed).
bool stairs_nested(const std::vector<StaircaseF>& stairs);

// Exact sup of |D| for a nested union of staircases, evaluated at the corner
// candidates of the level regions. Linear in the point count up to logs, so
// it scales to the m = 512 construction where the generic cell sweep cannot.
double staircase_discrepancy(const std::vector<StaircaseF>& stairs);

}  // namespace digiray
