#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace digiray {

// Exact arbitrary-precision rational. Auxiliary-function values halve
// repeatedly through inner-leaf averaging, so denominators outgrow any
// fixed-width integer.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace digiray
