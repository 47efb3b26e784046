#include "digiray/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "digiray/errors.hpp"

namespace digiray {

namespace {

// Reduced fraction with small operands. All quantities in the 2D Hausdorff
// computation are ratios of integers bounded by a few times N^2, so 64-bit
// numerators with 128-bit cross-multiplied comparisons are exact.
struct Frac {
    long long n = 0;
    long long d = 1;
};

Frac frac(long long n, long long d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

int cmp(const Frac& a, const Frac& b) {
    __int128 lhs = static_cast<__int128>(a.n) * b.d;
    __int128 rhs = static_cast<__int128>(b.n) * a.d;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool operator<(const Frac& a, const Frac& b) { return cmp(a, b) < 0; }
bool operator==(const Frac& a, const Frac& b) { return cmp(a, b) == 0; }

Frac fadd(const Frac& a, const Frac& b) {
    return frac(a.n * b.d + b.n * a.d, a.d * b.d);
}

Frac fmax(const Frac& a, const Frac& b) { return cmp(a, b) >= 0 ? a : b; }

Rat to_rat(const Frac& f) { return rat(f.n, f.d); }

// Signed linear form a - b*t.
struct Line {
    long long a = 0;
    long long b = 0;
};

Frac line_at(const Line& l, const Frac& t) {
    return frac(l.a * t.d - l.b * t.n, t.d);
}

// g_v(t) = max(|vx - t*px|, |vy - t*py|) as the max of four signed forms.
struct VertexFn {
    Line f[4];
};

VertexFn vertex_fn(int vx, int vy, int px, int py) {
    VertexFn g;
    g.f[0] = {vx, px};
    g.f[1] = {-vx, -px};
    g.f[2] = {vy, py};
    g.f[3] = {-vy, -py};
    return g;
}

Frac eval_vertex(const VertexFn& g, const Frac& t) {
    Frac best = line_at(g.f[0], t);
    for (int k = 1; k < 4; ++k) best = fmax(best, line_at(g.f[k], t));
    return best;
}

struct Path2 {
    std::vector<std::pair<int, int>> pts;  // one vertex per layer, index = layer
    int px = 0, py = 0;
};

// Exact min over t in [0,1] of max(|vx - t*px|, |vy - t*py|). The function is
// convex piecewise linear; its breakpoints are pairwise crossings of the four
// signed forms.
Frac point_segment_dist(int vx, int vy, int px, int py) {
    VertexFn g = vertex_fn(vx, vy, px, py);
    Frac cands[6];
    int nc = 0;
    cands[nc++] = frac(0, 1);
    cands[nc++] = frac(1, 1);
    if (px > 0) cands[nc++] = frac(vx, px);
    if (py > 0) cands[nc++] = frac(vy, py);
    if (px != py) cands[nc++] = frac(vx - vy, px - py);
    if (px + py > 0) cands[nc++] = frac(vx + vy, px + py);

    Frac best{0, 1};
    bool first = true;
    for (int k = 0; k < nc; ++k) {
        Frac t = cands[k];
        if (t.n < 0) t = frac(0, 1);
        if (cmp(t, frac(1, 1)) > 0) t = frac(1, 1);
        Frac v = eval_vertex(g, t);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

// Envelope value min_j g_j(t) over the layer window |j - t*L| <= 2*zub + 1;
// vertices outside the window are provably farther than zub >= E(t).
Frac envelope_at(const Path2& path, const std::vector<VertexFn>& fns, const Frac& t,
                 const Frac& zub) {
    long long L = path.px + path.py;
    // window bounds: floor(t*L - 2*zub) .. ceil(t*L + 2*zub)
    __int128 lo_num = static_cast<__int128>(t.n) * L * zub.d - 2 * static_cast<__int128>(zub.n) * t.d;
    __int128 hi_num = static_cast<__int128>(t.n) * L * zub.d + 2 * static_cast<__int128>(zub.n) * t.d;
    __int128 den = static_cast<__int128>(t.d) * zub.d;
    long long jlo = static_cast<long long>(lo_num >= 0 ? lo_num / den : -((-lo_num + den - 1) / den));
    long long jhi = static_cast<long long>(hi_num >= 0 ? (hi_num + den - 1) / den : -((-hi_num) / den));
    jlo = std::max(jlo, 0LL);
    jhi = std::min(jhi, L);
    Frac best{0, 1};
    bool first = true;
    for (long long j = jlo; j <= jhi; ++j) {
        Frac v = eval_vertex(fns[static_cast<size_t>(j)], t);
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    assert(!first);
    return best;
}

// Exact max over the segment of the distance to the path's vertex set,
// ignoring peaks at or below prune_below (used when scanning a whole tree
// against an incumbent).
Frac seg_to_path(const Path2& path, const Frac& prune_below, Frac* witness_t) {
    long long L = path.px + path.py;
    long long px = path.px, py = path.py;

    std::vector<VertexFn> fns;
    fns.reserve(static_cast<size_t>(L) + 1);
    Frac diag_max{0, 1};
    for (long long j = 0; j <= L; ++j) {
        auto [vx, vy] = path.pts[static_cast<size_t>(j)];
        fns.push_back(vertex_fn(vx, vy, static_cast<int>(px), static_cast<int>(py)));
        // distance at the layer crossing: |vx - j*px/L|
        diag_max = fmax(diag_max, frac(std::llabs(vx * L - j * px), L));
    }
    Frac zub = fadd(diag_max, frac(1, 2));

    std::vector<Frac> cands;
    cands.reserve(4 * static_cast<size_t>(L) + 8);
    cands.push_back(frac(0, 1));
    cands.push_back(frac(1, 1));
    auto push_cand = [&](long long n, long long d) {
        if (d == 0) return;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n <= 0 || n >= d) return;  // endpoints already present
        cands.push_back(frac(n, d));
    };
    for (long long j = 0; j <= L; ++j) {
        auto [vx, vy] = path.pts[static_cast<size_t>(j)];
        push_cand(vx, px);
        push_cand(vy, py);
        push_cand(vx - vy, px - py);
        push_cand(vx + vy, px + py);
    }
    std::sort(cands.begin(), cands.end(), [](const Frac& a, const Frac& b) { return a < b; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const Frac& a, const Frac& b) { return a == b; }),
                cands.end());

    Frac best{-1, 1};
    Frac wit{0, 1};
    for (const Frac& t : cands) {
        Frac v = envelope_at(path, fns, t, zub);
        if (best < v) {
            best = v;
            wit = t;
        }
    }

    // Between consecutive kinks every g_j is one linear form; an interior
    // peak of the lower envelope is a crossing of two of those forms.
    std::vector<Line> lines;
    for (size_t c = 0; c + 1 < cands.size(); ++c) {
        const Frac& a = cands[c];
        const Frac& b = cands[c + 1];
        Frac cut = fmax(best, prune_below);

        __int128 lo_num = static_cast<__int128>(a.n) * L * zub.d - 2 * static_cast<__int128>(zub.n) * a.d;
        __int128 lo_den = static_cast<__int128>(a.d) * zub.d;
        __int128 hi_num = static_cast<__int128>(b.n) * L * zub.d + 2 * static_cast<__int128>(zub.n) * b.d;
        __int128 hi_den = static_cast<__int128>(b.d) * zub.d;
        long long jlo = static_cast<long long>(lo_num >= 0 ? lo_num / lo_den : -((-lo_num + lo_den - 1) / lo_den));
        long long jhi = static_cast<long long>(hi_num >= 0 ? (hi_num + hi_den - 1) / hi_den : 0);
        jlo = std::max(jlo, 0LL);
        jhi = std::min(jhi, L);

        Frac mid = frac(a.n * b.d + b.n * a.d, 2 * a.d * b.d);
        lines.clear();
        Frac q{-1, 1};
        bool qfirst = true;
        for (long long j = jlo; j <= jhi; ++j) {
            const VertexFn& g = fns[static_cast<size_t>(j)];
            int arg = 0;
            Frac v = line_at(g.f[0], mid);
            for (int k = 1; k < 4; ++k) {
                Frac v2 = line_at(g.f[k], mid);
                if (v < v2) {
                    v = v2;
                    arg = k;
                }
            }
            lines.push_back(g.f[arg]);
            Frac ends = fmax(line_at(g.f[arg], a), line_at(g.f[arg], b));
            if (qfirst || ends < q) {
                q = ends;
                qfirst = false;
            }
        }
        if (!(cmp(cut, q) < 0)) continue;  // interval cannot beat the incumbent

        for (size_t s = 0; s < lines.size(); ++s) {
            for (size_t r = s + 1; r < lines.size(); ++r) {
                if (lines[s].b == lines[r].b) continue;  // parallel
                Frac tx = frac(lines[s].a - lines[r].a, lines[s].b - lines[r].b);
                if (!(a < tx) || !(tx < b)) continue;
                Frac z = line_at(lines[s], tx);
                cut = fmax(best, prune_below);
                if (!(cmp(cut, z) < 0)) continue;
                Frac v = envelope_at(path, fns, tx, zub);
                if (best < v) {
                    best = v;
                    wit = tx;
                }
            }
        }
    }
    if (witness_t) *witness_t = wit;
    return best;
}

std::vector<int> parents_vector(const RayTree& tree) {
    std::vector<int> par(static_cast<size_t>(tree.size()), -1);
    for (int id = 1; id < tree.size(); ++id) par[static_cast<size_t>(id)] = tree.parent_of(id);
    return par;
}

Path2 extract_path(const RayTree& tree, const std::vector<int>& par, int target_id) {
    Path2 p;
    const GridPoint& g = tree.point(target_id);
    p.px = g[0];
    p.py = g[1];
    int L = p.px + p.py;
    p.pts.assign(static_cast<size_t>(L) + 1, {0, 0});
    int id = target_id;
    for (int j = L; j >= 0; --j) {
        const GridPoint& q = tree.point(id);
        p.pts[static_cast<size_t>(j)] = {q[0], q[1]};
        id = par[static_cast<size_t>(id)];
    }
    return p;
}

Frac path_to_seg(const Path2& path, long long* witness_layer) {
    Frac best{0, 1};
    long long arg = 0;
    for (size_t j = 0; j < path.pts.size(); ++j) {
        Frac d = point_segment_dist(path.pts[j].first, path.pts[j].second, path.px, path.py);
        if (best < d) {
            best = d;
            arg = static_cast<long long>(j);
        }
    }
    if (witness_layer) *witness_layer = arg;
    return best;
}

Frac diag_bound(const Path2& path) {
    long long L = path.px + path.py;
    Frac best{0, 1};
    for (long long j = 0; j <= L; ++j)
        best = fmax(best, frac(std::llabs(path.pts[static_cast<size_t>(j)].first * L -
                                          j * path.px),
                               L));
    return best;
}

void require_2d(const RayTree& tree) {
    if (tree.dim != 2) throw OutOfDomain("Hausdorff metrics are two dimensional");
    if (tree.n > 60000) throw OutOfDomain("n_max too large for exact 64-bit fractions");
}

}  // namespace

Rat hausdorff_ray(const RayTree& tree, const GridPoint& p) {
    require_2d(tree);
    int id = tree.verts->id_of(p);
    if (id < 0) throw OutOfDomain(p.str() + " is not in G+_N");
    if (id == 0) return rat(0);
    Path2 path = extract_path(tree, parents_vector(tree), id);
    Frac a = path_to_seg(path, nullptr);
    Frac b = seg_to_path(path, frac(0, 1), nullptr);
    return to_rat(fmax(a, b));
}

ErrorResult hausdorff_tree(const RayTree& tree, ErrorScope scope) {
    require_2d(tree);
    std::vector<int> targets;
    if (scope == ErrorScope::boundary) {
        targets = tree.verts->layer_ids(tree.n);
    } else {
        targets.resize(static_cast<size_t>(tree.size() - 1));
        std::iota(targets.begin(), targets.end(), 1);
    }

    std::vector<int> par = parents_vector(tree);

    // Pass 1: the vertex-to-segment side is cheap and exact; the
    // segment-to-vertex side is bounded above by the diagonal crossings
    // plus one half.
    Frac best{0, 1};
    int best_id = targets.empty() ? 0 : targets.front();
    std::string best_loc = "vertex (0,0)";
    std::vector<std::pair<Frac, int>> ub_order;
    ub_order.reserve(targets.size());
    for (int id : targets) {
        Path2 path = extract_path(tree, par, id);
        long long wl = 0;
        Frac a = path_to_seg(path, &wl);
        if (best < a) {
            best = a;
            best_id = id;
            auto [vx, vy] = path.pts[static_cast<size_t>(wl)];
            best_loc = "vertex (" + std::to_string(vx) + "," + std::to_string(vy) + ")";
        }
        Frac ub = fadd(diag_bound(path), frac(1, 2));
        ub_order.emplace_back(ub, id);
    }

    // Pass 2: exact segment-side maxima, strongest upper bounds first,
    // pruned against the incumbent.
    std::sort(ub_order.begin(), ub_order.end(),
              [](const auto& x, const auto& y) { return y.first < x.first; });
    for (const auto& [ub, id] : ub_order) {
        if (!(best < ub)) break;
        Path2 path = extract_path(tree, par, id);
        Frac wt{0, 1};
        Frac v = seg_to_path(path, best, &wt);
        if (best < v) {
            best = v;
            best_id = id;
            best_loc = "segment t=" + std::to_string(wt.n) + "/" + std::to_string(wt.d);
        }
    }

    ErrorResult res;
    res.value = to_rat(best);
    res.witness_ray = tree.point(best_id);
    res.witness_location = best_loc;
    return res;
}

Rat witness_bound(const RayTree& tree, const GridPoint& p, int n) {
    require_2d(tree);
    int id = tree.verts->id_of(p);
    if (id < 0 || p.layer() != tree.n) throw OutOfDomain("witness point must lie on L_N");
    if (n < 0 || n >= tree.n) throw OutOfDomain("need 0 <= n < N");
    int cur = id;
    while (tree.verts->layer(cur) != n) cur = tree.parent_of(cur);
    long long xp = tree.point(cur)[0];
    return to_rat(frac(std::llabs(xp * tree.n - static_cast<long long>(p[0]) * n), tree.n));
}

long kappa2_of(const RayTree& tree) {
    if (tree.dim != 2) throw OutOfDomain("kappa2 is defined for 2D trees");
    auto ch = tree.children();
    int half = (tree.n + 1) / 2;
    long k2 = 0;
    for (int id = 0; id < tree.size(); ++id) {
        int layer = tree.verts->layer(id);
        if (layer >= half && layer < tree.n && ch[static_cast<size_t>(id)].empty()) ++k2;
    }
    return k2;
}

std::vector<FrontierRecord> frontier(const std::vector<RayTree>& trees) {
    std::vector<FrontierRecord> out;
    out.reserve(trees.size());
    for (const RayTree& t : trees) {
        FrontierRecord rec;
        auto it = t.meta.find("construction");
        rec.construction = it == t.meta.end() ? "unknown" : it->second;
        rec.n = t.n;
        rec.error = hausdorff_tree(t, ErrorScope::all).value;
        auto rep = verify_axioms(t, VerifyMode::weak);
        rec.kappa1 = static_cast<long>(rep.s4_violators.size());
        rec.kappa2 = kappa2_of(t);

        // N*log2(N)/(N+kappa2); log2 exact for powers of two, else a close
        // rational stand-in
        Rat log2n;
        if ((t.n & (t.n - 1)) == 0) {
            int k = 0;
            while ((1 << k) < t.n) ++k;
            log2n = rat(k);
        } else {
            log2n = Rat(std::lround(std::log2(static_cast<double>(t.n)) * 1e9), 1000000000L);
            log2n.canonicalize();
        }
        rec.bound_value = Rat(t.n) * log2n / Rat(t.n + rec.kappa2);
        rec.bound_value.canonicalize();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace digiray
