#include "digiray/discrepancy.hpp"

#include <algorithm>
#include <cmath>

#include "digiray/errors.hpp"

namespace digiray {

namespace {

template <typename T>
long prefix_count_impl(const std::vector<std::pair<T, T>>& pts, const T& x, const T& y,
                       Closure cx, Closure cy) {
    long c = 0;
    for (const auto& [px, py] : pts) {
        bool xin = cx == Closure::inclusive ? px <= x : px < x;
        bool yin = cy == Closure::inclusive ? py <= y : py < y;
        if (xin && yin) ++c;
    }
    return c;
}

template <typename T>
struct Pt {
    T x, y;
    int w;  // +1 blue, -1 red
};

// Fenwick over y-ranks.
class Fen {
public:
    explicit Fen(size_t n) : t_(n + 1, 0) {}
    void add(size_t i, long w) {
        for (++i; i < t_.size(); i += i & (~i + 1)) t_[i] += w;
    }
    long sum(size_t count) const {  // first `count` ranks
        long s = 0;
        for (size_t i = count; i > 0; i -= i & (~i + 1)) s += t_[i];
        return s;
    }

private:
    std::vector<long> t_;
};

template <typename T>
DiscrepancyResult<T> star_impl(std::vector<Pt<T>> pts, long m) {
    std::vector<T> xs, ys;
    xs.reserve(pts.size() + 1);
    ys.reserve(pts.size() + 1);
    for (const auto& p : pts) {
        xs.push_back(p.x);
        ys.push_back(p.y);
    }
    xs.push_back(T(1));
    ys.push_back(T(1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::vector<T> yof;  // point y values only, for ranks
    yof.reserve(pts.size());
    for (const auto& p : pts) yof.push_back(p.y);
    std::sort(yof.begin(), yof.end());
    yof.erase(std::unique(yof.begin(), yof.end()), yof.end());
    auto rank_le = [&yof](const T& v) {
        return static_cast<size_t>(std::upper_bound(yof.begin(), yof.end(), v) - yof.begin());
    };
    auto rank_lt = [&yof](const T& v) {
        return static_cast<size_t>(std::lower_bound(yof.begin(), yof.end(), v) - yof.begin());
    };

    std::sort(pts.begin(), pts.end(), [](const Pt<T>& a, const Pt<T>& b) { return a.x < b.x; });

    DiscrepancyResult<T> best;
    best.value = T(0);
    best.wx = T(1);
    best.wy = T(1);
    bool first = true;

    Fen fen(yof.size());
    size_t next = 0;
    auto consider = [&](const T& xv, const T& yv, Closure cx, Closure cy, long count) {
        T d = T(m) * xv * yv - T(count);
        int sign = d < T(0) ? -1 : (T(0) < d ? 1 : 0);
        T mag = sign < 0 ? T(-d) : d;
        if (first || best.value < mag) {
            best = {mag, xv, yv, cx, cy, sign};
            first = false;
        }
    };

    for (const T& xv : xs) {
        // Fenwick holds points with px < xv until the batch below is added
        for (const T& yv : ys) {
            consider(xv, yv, Closure::left_limit, Closure::inclusive, fen.sum(rank_le(yv)));
            consider(xv, yv, Closure::left_limit, Closure::left_limit, fen.sum(rank_lt(yv)));
        }
        while (next < pts.size() && !(xv < pts[next].x)) {
            fen.add(rank_lt(pts[next].y), pts[next].w);
            ++next;
        }
        for (const T& yv : ys) {
            consider(xv, yv, Closure::inclusive, Closure::inclusive, fen.sum(rank_le(yv)));
            consider(xv, yv, Closure::inclusive, Closure::left_limit, fen.sum(rank_lt(yv)));
        }
    }
    return best;
}

template <typename T>
std::vector<Pt<T>> merge_points(const std::vector<std::pair<T, T>>& blue,
                                const std::vector<std::pair<T, T>>& red) {
    std::vector<Pt<T>> pts;
    pts.reserve(blue.size() + red.size());
    for (const auto& [x, y] : blue) pts.push_back({x, y, +1});
    for (const auto& [x, y] : red) pts.push_back({x, y, -1});
    return pts;
}

long signed_m(const BicoloredPointSet& ps) {
    long m = static_cast<long>(ps.blue_count()) - static_cast<long>(ps.red_count());
    if (m <= 0) throw NonPositiveM("need more blue than red points, m = " + std::to_string(m));
    return m;
}

}  // namespace

long prefix_count(const std::vector<std::pair<Rat, Rat>>& pts, const Rat& x, const Rat& y,
                  Closure cx, Closure cy) {
    return prefix_count_impl(pts, x, y, cx, cy);
}

long prefix_count(const std::vector<std::pair<double, double>>& pts, double x, double y,
                  Closure cx, Closure cy) {
    return prefix_count_impl(pts, x, y, cx, cy);
}

Rat discrepancy_at(const BicoloredPointSet& ps, const Rat& x, const Rat& y) {
    if (ps.kind != BicoloredPointSet::Kind::exact)
        throw OutOfDomain("discrepancy_at expects exact coordinates");
    long m = signed_m(ps);
    long count = prefix_count(ps.blue, x, y) - prefix_count(ps.red, x, y);
    Rat d = Rat(m) * x * y - Rat(count);
    d.canonicalize();
    return d;
}

DiscrepancyResult<Rat> discrepancy_star(const BicoloredPointSet& ps) {
    if (ps.kind != BicoloredPointSet::Kind::exact)
        throw OutOfDomain("discrepancy_star expects exact coordinates");
    long m = signed_m(ps);
    auto res = star_impl<Rat>(merge_points(ps.blue, ps.red), m);
    res.value.canonicalize();
    return res;
}

DiscrepancyResult<double> discrepancy_star_float(const BicoloredPointSet& ps) {
    long m = signed_m(ps);
    if (ps.kind == BicoloredPointSet::Kind::floating)
        return star_impl<double>(merge_points(ps.fblue, ps.fred), m);
    std::vector<Pt<double>> pts;
    for (const auto& [x, y] : ps.blue) pts.push_back({rat_double(x), rat_double(y), +1});
    for (const auto& [x, y] : ps.red) pts.push_back({rat_double(x), rat_double(y), -1});
    return star_impl<double>(std::move(pts), m);
}

double discrepancy_star_bruteforce(const BicoloredPointSet& ps, int resolution) {
    if (resolution < 2) throw OutOfDomain("resolution must be at least 2");
    long m = signed_m(ps);

    std::vector<std::pair<double, double>> blue, red;
    if (ps.kind == BicoloredPointSet::Kind::floating) {
        blue = ps.fblue;
        red = ps.fred;
    } else {
        for (const auto& [x, y] : ps.blue) blue.emplace_back(rat_double(x), rat_double(y));
        for (const auto& [x, y] : ps.red) red.emplace_back(rat_double(x), rat_double(y));
    }

    auto axis_samples = [&](bool is_x) {
        std::vector<double> v;
        v.reserve(static_cast<size_t>(resolution) + 2 * (blue.size() + red.size()) + 1);
        for (int k = 0; k <= resolution; ++k)
            v.push_back(static_cast<double>(k) / resolution);
        for (const auto& [x, y] : blue) {
            double c = is_x ? x : y;
            v.push_back(c);
            v.push_back(std::nextafter(c, 0.0));
        }
        for (const auto& [x, y] : red) {
            double c = is_x ? x : y;
            v.push_back(c);
            v.push_back(std::nextafter(c, 0.0));
        }
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        while (!v.empty() && v.front() < 0.0) v.erase(v.begin());
        return v;
    };
    std::vector<double> sx = axis_samples(true), sy = axis_samples(false);

    // direct counting keeps the prober independent of the exact engine
    double best = 0.0;
    for (double x : sx) {
        for (double y : sy) {
            long c = 0;
            for (const auto& [px, py] : blue)
                if (px <= x && py <= y) ++c;
            for (const auto& [px, py] : red)
                if (px <= x && py <= y) --c;
            double d = std::fabs(static_cast<double>(m) * x * y - static_cast<double>(c));
            best = std::max(best, d);
        }
    }
    return best;
}

std::pair<long, long> upper_half_stats(const BicoloredPointSet& ps) {
    long b2 = 0, r2 = 0;
    if (ps.kind == BicoloredPointSet::Kind::exact) {
        Rat half = rat(1, 2);
        for (const auto& [x, y] : ps.blue)
            if (y >= half) ++b2;
        for (const auto& [x, y] : ps.red)
            if (y >= half) ++r2;
    } else {
        for (const auto& [x, y] : ps.fblue)
            if (y >= 0.5) ++b2;
        for (const auto& [x, y] : ps.fred)
            if (y >= 0.5) ++r2;
    }
    return {b2, r2};
}

}  // namespace digiray
