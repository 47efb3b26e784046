#include "digiray/staircase.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>

#include "digiray/errors.hpp"

namespace digiray {

namespace {

// i^{2k} * (i-1) <= m * (i-1)^{2k}, the squared form of
// (i/(i-1))^k <= sqrt(m/(i-1)).
bool k_pred_symmetric(long m, long i, long k) {
    if (k < 0) return true;
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(2 * k));
    lhs *= (i - 1);
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(i - 1),
                  static_cast<unsigned long>(2 * k));
    rhs *= m;
    return lhs <= rhs;
}

// (i+xi-1)^k * (i-xi) <= m * (i-xi)^k, i.e. ((i+xi-1)/(i-xi))^k <= m/(i-xi).
bool k_pred_band(long m, long i, long xi, long k) {
    if (k < 0) return true;
    mpz_class lhs, rhs;
    mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(i + xi - 1),
                  static_cast<unsigned long>(k));
    lhs *= (i - xi);
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(i - xi),
                  static_cast<unsigned long>(k));
    rhs *= m;
    return lhs <= rhs;
}

template <typename Pred>
long largest_k(long estimate, Pred pred) {
    long k = std::max(0L, estimate);
    while (!pred(k) && k > 0) --k;
    while (pred(k + 1)) ++k;
    return pred(k) ? k : 0;
}

double stair_exp(long double arg, FloatPrecision prec) {
    if (prec == FloatPrecision::double53)
        return std::exp(static_cast<double>(arg));
    return static_cast<double>(expl(arg));
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

long k_star(long m, long i) {
    if (m < 1 || i < 1 || i > m) throw OutOfDomain("k_star needs 1 <= i <= m");
    if (i == 1) return 0;
    double est = std::floor(0.5 * std::log(static_cast<double>(m) / (i - 1)) /
                            std::log(static_cast<double>(i) / (i - 1)));
    return largest_k(static_cast<long>(est), [&](long k) { return k_pred_symmetric(m, i, k); });
}

std::vector<StaircaseF> symmetric_staircase_curves(long m, FloatPrecision prec) {
    if (m < 1) throw OutOfDomain("need m >= 1");
    std::vector<StaircaseF> stairs;
    stairs.reserve(static_cast<size_t>(m));
    for (long i = 1; i <= m; ++i) {
        StaircaseF st;
        st.index = static_cast<int>(i);
        if (i == 1) {
            st.points.emplace_back(0.0, 0.0);
            st.is_blue.push_back(1);
            stairs.push_back(std::move(st));
            continue;
        }
        long ks = k_star(m, i);
        long double li = logl(static_cast<long double>(i));
        long double lj = logl(static_cast<long double>(i - 1));
        long double lm = logl(static_cast<long double>(m));
        auto blue_at = [&](long k) {
            double x = stair_exp(k * li + (0.5L - k) * lj - 0.5L * lm, prec);
            double y = stair_exp((k + 0.5L) * lj - k * li - 0.5L * lm, prec);
            return std::pair<double, double>(clamp01(x), clamp01(y));
        };
        auto red_at = [&](long k) {
            double x = stair_exp((k + 1) * li - (k + 0.5L) * lj - 0.5L * lm, prec);
            double y = stair_exp((k + 0.5L) * lj - k * li - 0.5L * lm, prec);
            return std::pair<double, double>(clamp01(x), clamp01(y));
        };
        for (long k = -ks; k <= ks; ++k) {
            auto b = blue_at(k);
            st.points.push_back(b);
            st.is_blue.push_back(1);
            if (k < ks) {
                auto r = red_at(k);
                st.points.push_back(r);
                st.is_blue.push_back(0);
            }
        }
        stairs.push_back(std::move(st));
    }
    return stairs;
}

BicoloredPointSet flatten_stairs(const std::vector<StaircaseF>& stairs) {
    BicoloredPointSet ps;
    ps.kind = BicoloredPointSet::Kind::floating;
    for (const auto& st : stairs) {
        for (size_t k = 0; k < st.points.size(); ++k) {
            if (st.is_blue[k])
                ps.fblue.push_back(st.points[k]);
            else
                ps.fred.push_back(st.points[k]);
        }
    }
    return ps;
}

BicoloredPointSet symmetric_staircases(long m, FloatPrecision prec) {
    return flatten_stairs(symmetric_staircase_curves(m, prec));
}

std::pair<long, long> point_counts(long m) {
    if (m < 1) throw OutOfDomain("need m >= 1");
    long blues = 0, reds = 0;
    for (long i = 1; i <= m; ++i) {
        long ks = k_star(m, i);
        blues += 2 * ks + 1;
        reds += 2 * ks;
    }
    return {blues, reds};
}

StaircaseF greedy_stair_between(long m, long i, long xi, FloatPrecision prec) {
    if (xi < 1 || i < 1 || m < 1) throw OutOfDomain("need m, i >= 1 and xi >= 1");
    StaircaseF st;
    st.index = static_cast<int>(i);
    if (i <= xi) return st;  // degenerate band: zero points by the formula

    double est = std::floor(std::log(static_cast<double>(m) / (i - xi)) /
                            std::log(static_cast<double>(i + xi - 1) / (i - xi)));
    long ks =
        largest_k(static_cast<long>(est), [&](long k) { return k_pred_band(m, i, xi, k); });

    long double la = logl(static_cast<long double>(i + xi - 1));
    long double lb = logl(static_cast<long double>(i - xi));
    long double lm = logl(static_cast<long double>(m));
    for (long k = 1; k <= ks; ++k) {
        double bx = stair_exp(k * la - (k - 1) * lb - lm, prec);
        double by = stair_exp(k * lb - k * la, prec);
        st.points.emplace_back(clamp01(bx), clamp01(by));
        st.is_blue.push_back(1);
        if (k < ks) {
            double rx = stair_exp((k + 1) * la - k * lb - lm, prec);
            st.points.emplace_back(clamp01(rx), clamp01(by));
            st.is_blue.push_back(0);
        }
    }
    return st;
}

bool stair_dominated(const StaircaseF& st, double x, double y, bool x_strict, bool y_strict) {
    if (st.points.empty()) return false;
    // last index with px <= x (or < x): points are x-ascending
    auto xcmp = [&](const std::pair<double, double>& p) {
        return x_strict ? p.first < x : p.first <= x;
    };
    size_t lo = 0, hi = st.points.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (xcmp(st.points[mid]))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == 0) return false;
    size_t t = lo - 1;

    // first index with py <= y (or < y): points are y-descending
    auto ycmp = [&](const std::pair<double, double>& p) {
        return y_strict ? p.second < y : p.second <= y;
    };
    lo = 0;
    hi = st.points.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (ycmp(st.points[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo == st.points.size()) return false;
    return lo <= t;
}

bool stairs_nested(const std::vector<StaircaseF>& stairs) {
    for (size_t s = 0; s + 1 < stairs.size(); ++s) {
        for (const auto& [x, y] : stairs[s + 1].points)
            if (!stair_dominated(stairs[s], x, y)) return false;
    }
    return true;
}

double staircase_discrepancy(const std::vector<StaircaseF>& stairs) {
    long m = static_cast<long>(stairs.size());
    if (m < 1) return 0.0;

    // nested curves: the number dominated at (x,y) is the largest prefix of
    // dominated stairs
    auto count_at = [&](double x, double y, bool xs, bool ys) {
        size_t lo = 0, hi = stairs.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (stair_dominated(stairs[mid], x, y, xs, ys))
                lo = mid + 1;
            else
                hi = mid;
        }
        return static_cast<long>(lo);
    };

    double best = 0.0;
    auto consider = [&](double x, double y) {
        if (x < 0.0 || y < 0.0 || x > 1.0 || y > 1.0) return;
        for (bool xs : {false, true}) {
            for (bool ys : {false, true}) {
                double d = std::fabs(static_cast<double>(m) * x * y -
                                     static_cast<double>(count_at(x, y, xs, ys)));
                best = std::max(best, d);
            }
        }
    };

    consider(1.0, 1.0);
    consider(0.0, 0.0);
    for (const auto& st : stairs) {
        for (const auto& [x, y] : st.points) {
            consider(x, y);
            consider(x, 1.0);
            consider(1.0, y);
        }
    }
    return best;
}

}  // namespace digiray
