#pragma once

#include <utility>
#include <vector>

#include "digiray/mapping.hpp"
#include "digiray/rational.hpp"

namespace digiray {

// Counting mode per axis. left_limit evaluates the count just below the
// coordinate while the continuous term keeps the coordinate value, which
// realizes the supremum over the closed square.
enum class Closure { inclusive, left_limit };

template <typename T>
struct DiscrepancyResult {
    T value{};   // |D| at the witness
    T wx{}, wy{};
    Closure cx = Closure::inclusive;
    Closure cy = Closure::inclusive;
    int sign = 0;  // sign of D at the witness
};

long prefix_count(const std::vector<std::pair<Rat, Rat>>& pts, const Rat& x, const Rat& y,
                  Closure cx = Closure::inclusive, Closure cy = Closure::inclusive);
long prefix_count(const std::vector<std::pair<double, double>>& pts, double x, double y,
                  Closure cx = Closure::inclusive, Closure cy = Closure::inclusive);

// D_{R,B}(x,y) = (b-r)xy - (B[x,y]-R[x,y]) with inclusive counting.
Rat discrepancy_at(const BicoloredPointSet& ps, const Rat& x, const Rat& y);

// Exact supremum of |D| over the closed unit square via cell decomposition:
// within each half-open cell the counts are constant and the continuous term
// is monotone, so the extrema sit at corner limits.
DiscrepancyResult<Rat> discrepancy_star(const BicoloredPointSet& ps);
DiscrepancyResult<double> discrepancy_star_float(const BicoloredPointSet& ps);

// Grid prober: a lower bound within m/resolution of the true value.
double discrepancy_star_bruteforce(const BicoloredPointSet& ps, int resolution);

// Point counts in [0,1] x [1/2, 1], inclusive.
std::pair<long, long> upper_half_stats(const BicoloredPointSet& ps);

}  // namespace digiray
