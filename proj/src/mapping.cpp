#include "digiray/mapping.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "digiray/errors.hpp"

namespace digiray {

namespace {

void require_2d(const RayTree& tree) {
    if (tree.dim != 2) throw OutOfDomain("the pointset mapping is two dimensional");
    if (tree.n < 1) throw OutOfDomain("the pointset mapping needs N >= 1");
}

}  // namespace

AuxAssignment compute_aux(const RayTree& tree) {
    require_2d(tree);
    const int size = tree.size();
    const int N = tree.n;
    auto ch = tree.children();

    AuxAssignment aux;
    aux.m_value.assign(static_cast<size_t>(size), Rat(0));
    aux.gamma.assign(static_cast<size_t>(size), -1);
    aux.preferred_child.assign(static_cast<size_t>(size), -1);
    aux.subtree_minmax.assign(static_cast<size_t>(size), {Rat(0), Rat(0)});
    aux.depth.assign(static_cast<size_t>(size), 0);
    aux.is_split.assign(static_cast<size_t>(size), 0);
    aux.is_inner_leaf.assign(static_cast<size_t>(size), 0);

    // single bottom-up pass, layers N..0
    for (int n = N; n >= 0; --n) {
        for (int id : tree.verts->layer_ids(n)) {
            const GridPoint& p = tree.point(id);
            const auto& kids = ch[static_cast<size_t>(id)];

            if (n == N) {
                Rat m = rat(p[0], N);
                aux.m_value[static_cast<size_t>(id)] = m;
                aux.subtree_minmax[static_cast<size_t>(id)] = {m, m};
                aux.gamma[static_cast<size_t>(id)] = id;
                continue;
            }

            if (kids.empty()) {
                // inner leaf: average the leaves above and to the right;
                // both neighbor subtrees exist because this vertex cannot
                // be the parent of either neighbor
                aux.is_inner_leaf[static_cast<size_t>(id)] = 1;
                int up = tree.verts->id_of(GridPoint(p[0], p[1] + 1));
                int right = tree.verts->id_of(GridPoint(p[0] + 1, p[1]));
                Rat m = (aux.subtree_minmax[static_cast<size_t>(up)].second +
                         aux.subtree_minmax[static_cast<size_t>(right)].first) /
                        2;
                m.canonicalize();
                aux.m_value[static_cast<size_t>(id)] = m;
                aux.subtree_minmax[static_cast<size_t>(id)] = {m, m};
                aux.gamma[static_cast<size_t>(id)] = id;
                continue;
            }

            Rat lo = aux.subtree_minmax[static_cast<size_t>(kids[0])].first;
            Rat hi = aux.subtree_minmax[static_cast<size_t>(kids[0])].second;
            int dep = 0;
            for (int k : kids) {
                lo = std::min(lo, aux.subtree_minmax[static_cast<size_t>(k)].first);
                hi = std::max(hi, aux.subtree_minmax[static_cast<size_t>(k)].second);
                dep = std::max(dep, aux.depth[static_cast<size_t>(k)] + 1);
            }
            aux.subtree_minmax[static_cast<size_t>(id)] = {lo, hi};
            aux.depth[static_cast<size_t>(id)] = dep;

            bool split = (id == 0) || kids.size() == 2;
            if (!split) {
                int c = kids[0];
                aux.gamma[static_cast<size_t>(id)] = aux.gamma[static_cast<size_t>(c)];
                aux.m_value[static_cast<size_t>(id)] =
                    aux.m_value[static_cast<size_t>(aux.gamma[static_cast<size_t>(c)])];
                continue;
            }

            aux.is_split[static_cast<size_t>(id)] = 1;
            // children() orders by step axis, so kids[0] is the right child
            // (x+1,y) and kids[1] the up child when both exist
            int right_kid = -1, up_kid = -1;
            for (int k : kids) {
                if (tree.point(k)[0] == p[0] + 1)
                    right_kid = k;
                else
                    up_kid = k;
            }
            int preferred, other;
            if (kids.size() == 1) {
                // the origin is a split by definition even when N is tiny
                preferred = kids[0];
                other = kids[0];
            } else {
                int dr = aux.depth[static_cast<size_t>(right_kid)];
                int du = aux.depth[static_cast<size_t>(up_kid)];
                // deeper subtree preferred; ties toward (x+1,y)
                preferred = du > dr ? up_kid : right_kid;
                other = preferred == right_kid ? up_kid : right_kid;
            }
            aux.preferred_child[static_cast<size_t>(id)] = preferred;
            aux.gamma[static_cast<size_t>(id)] = aux.gamma[static_cast<size_t>(preferred)];
            aux.m_value[static_cast<size_t>(id)] =
                aux.m_value[static_cast<size_t>(aux.gamma[static_cast<size_t>(other)])];
        }
    }
    return aux;
}

BicoloredPointSet transform_pi(const RayTree& tree) {
    require_2d(tree);
    AuxAssignment aux = compute_aux(tree);
    BicoloredPointSet ps;
    ps.kind = BicoloredPointSet::Kind::exact;
    for (int id = 0; id < tree.size(); ++id) {
        int layer = tree.verts->layer(id);
        Rat y = rat(layer, tree.n);
        if (aux.is_split[static_cast<size_t>(id)])
            ps.blue.emplace_back(aux.m_value[static_cast<size_t>(id)], y);
        else if (aux.is_inner_leaf[static_cast<size_t>(id)])
            ps.red.emplace_back(aux.m_value[static_cast<size_t>(id)], y);
    }
    return ps;
}

namespace {

// Fenwick tree over x-ranks holding +1/-1 point weights.
class PrefixCounter {
public:
    explicit PrefixCounter(std::vector<Rat> xs) : xs_(std::move(xs)) {
        std::sort(xs_.begin(), xs_.end());
        xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
        tree_.assign(xs_.size() + 1, 0);
    }

    void add(const Rat& x, long w) {
        for (size_t i = rank_le(x); i < tree_.size(); i += i & (~i + 1)) tree_[i] += w;
    }

    long query_le(const Rat& x) const {
        long s = 0;
        for (size_t i = rank_le(x); i > 0; i -= i & (~i + 1)) s += tree_[i];
        return s;
    }

private:
    std::vector<Rat> xs_;
    std::vector<long> tree_;

    // 1-based index of the last element <= x
    size_t rank_le(const Rat& x) const {
        return static_cast<size_t>(std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
    }
};

}  // namespace

MappingReport validate_mapping(const RayTree& tree) {
    require_2d(tree);
    MappingReport rep;
    const int N = tree.n;
    AuxAssignment aux = compute_aux(tree);
    BicoloredPointSet ps = transform_pi(tree);

    auto fail = [&rep](const std::string& msg) {
        if (rep.counterexample.empty()) rep.counterexample = msg;
    };

    // (a) layer sortedness: max over T(u) < min over T(v) for consecutive
    // u, v along each layer
    rep.sorted_ok = true;
    for (int n = 0; n <= N && rep.sorted_ok; ++n) {
        const auto& ids = tree.verts->layer_ids(n);
        for (size_t k = 0; k + 1 < ids.size(); ++k) {
            const auto& left = aux.subtree_minmax[static_cast<size_t>(ids[k])];
            const auto& right = aux.subtree_minmax[static_cast<size_t>(ids[k + 1])];
            if (!(left.second < right.first)) {
                rep.sorted_ok = false;
                fail("sortedness fails at layer " + std::to_string(n) + " near " +
                     tree.point(ids[k]).str());
                break;
            }
        }
    }

    // (b) bijection between splits and leaves except (N,0)
    {
        std::vector<Rat> split_ms, leaf_ms;
        for (int id = 0; id < tree.size(); ++id) {
            if (aux.is_split[static_cast<size_t>(id)])
                split_ms.push_back(aux.m_value[static_cast<size_t>(id)]);
            bool leaf = aux.is_inner_leaf[static_cast<size_t>(id)] ||
                        tree.verts->layer(id) == N;
            if (leaf && !(tree.point(id)[0] == N && tree.point(id)[1] == 0))
                leaf_ms.push_back(aux.m_value[static_cast<size_t>(id)]);
        }
        std::sort(split_ms.begin(), split_ms.end());
        std::sort(leaf_ms.begin(), leaf_ms.end());
        bool distinct = std::adjacent_find(split_ms.begin(), split_ms.end()) == split_ms.end();
        rep.bijection_ok = distinct && split_ms == leaf_ms;
        if (!rep.bijection_ok) fail("split/leaf M values do not pair up");
    }

    // (c) rows alternate blue,red,...,blue and cumulative counts are n+1
    {
        rep.rows_ok = true;
        long cum = 0;
        for (int n = 0; n < N && rep.rows_ok; ++n) {
            std::vector<std::pair<Rat, int>> row;  // (x, +1 blue / -1 red)
            for (int id : tree.verts->layer_ids(n)) {
                if (aux.is_split[static_cast<size_t>(id)])
                    row.emplace_back(aux.m_value[static_cast<size_t>(id)], +1);
                else if (aux.is_inner_leaf[static_cast<size_t>(id)])
                    row.emplace_back(aux.m_value[static_cast<size_t>(id)], -1);
            }
            std::sort(row.begin(), row.end());
            if (row.empty() || row.front().second != 1 || row.back().second != 1) {
                rep.rows_ok = false;
            } else {
                for (size_t k = 0; k + 1 < row.size(); ++k)
                    if (row[k].second == row[k + 1].second) rep.rows_ok = false;
            }
            long diff = 0;
            for (const auto& [x, s] : row) diff += s;
            cum += diff;
            if (diff != 1 || cum != n + 1) rep.rows_ok = false;
            if (!rep.rows_ok) fail("row structure fails on line y=" + std::to_string(n) + "/N");
        }
    }

    // (d) the rectangle spanned by M(v) and M(gamma(v)) below layer n holds
    // exactly one blue point (none when v lies on the x-axis)
    {
        rep.empty_rect_ok = true;
        for (int id = 0; id < tree.size() && rep.empty_rect_ok; ++id) {
            if (!aux.is_split[static_cast<size_t>(id)]) continue;
            const GridPoint& v = tree.point(id);
            int n = v.layer();
            Rat mv = aux.m_value[static_cast<size_t>(id)];
            Rat mg = aux.m_value[static_cast<size_t>(aux.gamma[static_cast<size_t>(id)])];
            Rat lo = std::min(mv, mg), hi = std::max(mv, mg);
            Rat ytop = rat(n - 1, N);  // negative for the origin: empty strip
            long blue_in = 0, red_in = 0;
            bool blue_at_mg = false;
            for (const auto& [px, py] : ps.blue)
                if (lo <= px && px <= hi && py <= ytop) {
                    ++blue_in;
                    if (px == mg) blue_at_mg = true;
                }
            for (const auto& [px, py] : ps.red)
                if (lo <= px && px <= hi && py <= ytop) ++red_in;
            bool ok;
            if (v[0] == n)  // v = (n,0)
                ok = blue_in == 0 && red_in == 0;
            else
                ok = blue_in == 1 && red_in == 0 && blue_at_mg;
            if (!ok) {
                rep.empty_rect_ok = false;
                fail("rectangle check fails at split " + v.str());
            }
        }
    }

    // mapped points bucketed by layer for the incremental sweeps below
    std::vector<std::vector<std::pair<Rat, long>>> by_layer(static_cast<size_t>(N) + 1);
    std::vector<Rat> all_xs;
    for (int id = 0; id < tree.size(); ++id) {
        long w = 0;
        if (aux.is_split[static_cast<size_t>(id)]) w = 1;
        if (aux.is_inner_leaf[static_cast<size_t>(id)]) w = -1;
        if (w == 0) continue;
        int layer = tree.verts->layer(id);
        by_layer[static_cast<size_t>(layer)].emplace_back(
            aux.m_value[static_cast<size_t>(id)], w);
        all_xs.push_back(aux.m_value[static_cast<size_t>(id)]);
    }

    // (e) claim: {M(gamma(p)) : p in L_n} equals the x-columns whose
    // blue-minus-red prefix is one, plus x=1; all columns stay in {0,1}
    {
        rep.column_claim_ok = true;
        std::map<Rat, long> col;  // prefix over y <= (n-1)/N, grown layer by layer
        for (int n = 0; n <= N && rep.column_claim_ok; ++n) {
            if (n >= 1)
                for (const auto& [x, w] : by_layer[static_cast<size_t>(n - 1)]) col[x] += w;
            std::set<Rat> rhs;
            rhs.insert(Rat(1));
            for (const auto& [x, d] : col) {
                if (d != 0 && d != 1) {
                    rep.column_claim_ok = false;
                    fail("column difference outside {0,1} at layer " + std::to_string(n));
                }
                if (d == 1) rhs.insert(x);
            }
            std::set<Rat> lhs;
            for (int id : tree.verts->layer_ids(n))
                lhs.insert(
                    aux.m_value[static_cast<size_t>(aux.gamma[static_cast<size_t>(id)])]);
            if (lhs != rhs) {
                rep.column_claim_ok = false;
                fail("gamma image set mismatch at layer " + std::to_string(n));
            }
        }
    }

    // (f) B[pi(v)] - R[pi(v)] - 2 <= v_x <= B[pi(v)] - R[pi(v)] for every vertex
    {
        rep.interp_ok = true;
        PrefixCounter counter(all_xs);
        for (int n = 0; n <= N && rep.interp_ok; ++n) {
            for (const auto& [x, w] : by_layer[static_cast<size_t>(n)]) counter.add(x, w);
            for (int id : tree.verts->layer_ids(n)) {
                const GridPoint& v = tree.point(id);
                long diff = counter.query_le(aux.m_value[static_cast<size_t>(id)]);
                if (!(diff - 2 <= v[0] && v[0] <= diff)) {
                    rep.interp_ok = false;
                    fail("count sandwich fails at " + v.str());
                    break;
                }
            }
        }
    }

    return rep;
}

std::vector<StaircaseR> staircase_decompose(const BicoloredPointSet& points) {
    if (points.kind != BicoloredPointSet::Kind::exact)
        throw OutOfDomain("staircase decomposition expects exact coordinates");

    struct Pt {
        Rat x, y;
        bool blue;
    };
    std::vector<Pt> all;
    for (const auto& [x, y] : points.blue) all.push_back({x, y, true});
    for (const auto& [x, y] : points.red) all.push_back({x, y, false});
    const int n = static_cast<int>(all.size());

    // Each red is matched with the blue immediately to its left in its row
    // and with the blue below it in its column. The components of that
    // matching are monotone paths: alternating, starting and ending blue.
    std::vector<int> right_red(all.size(), -1);   // blue -> adjacent red to its right
    std::vector<int> below_blue(all.size(), -1);  // red -> blue below in its column

    {
        std::map<Rat, std::vector<int>> rows;
        for (int k = 0; k < n; ++k) rows[all[static_cast<size_t>(k)].y].push_back(k);
        for (auto& [y, row] : rows) {
            std::sort(row.begin(), row.end(), [&](int a, int b) {
                return all[static_cast<size_t>(a)].x < all[static_cast<size_t>(b)].x;
            });
            for (size_t k = 0; k < row.size(); ++k) {
                bool blue = all[static_cast<size_t>(row[k])].blue;
                if ((k % 2 == 0) != blue)
                    throw NotDecomposable("row alternation violated");
                if (k % 2 == 1) right_red[static_cast<size_t>(row[k - 1])] = row[k];
            }
            if (row.size() % 2 == 0) throw NotDecomposable("row does not end blue");
        }
    }
    {
        std::map<Rat, std::vector<int>> cols;
        for (int k = 0; k < n; ++k) cols[all[static_cast<size_t>(k)].x].push_back(k);
        for (auto& [x, col] : cols) {
            int blue_id = -1, red_id = -1;
            for (int k : col) {
                if (all[static_cast<size_t>(k)].blue) {
                    if (blue_id >= 0) throw NotDecomposable("two blue points share a column");
                    blue_id = k;
                } else {
                    if (red_id >= 0) throw NotDecomposable("two red points share a column");
                    red_id = k;
                }
            }
            if (red_id >= 0) {
                if (blue_id < 0 ||
                    !(all[static_cast<size_t>(blue_id)].y < all[static_cast<size_t>(red_id)].y))
                    throw NotDecomposable("red point without a blue below it");
                below_blue[static_cast<size_t>(red_id)] = blue_id;
            }
        }
    }

    // path starts: blue points that are nobody's below-partner
    std::vector<char> is_target(all.size(), 0);
    for (int k = 0; k < n; ++k)
        if (below_blue[static_cast<size_t>(k)] >= 0)
            is_target[static_cast<size_t>(below_blue[static_cast<size_t>(k)])] = 1;

    std::vector<int> starts;
    for (int k = 0; k < n; ++k)
        if (all[static_cast<size_t>(k)].blue && !is_target[static_cast<size_t>(k)])
            starts.push_back(k);
    std::sort(starts.begin(), starts.end(), [&](int a, int b) {
        const Pt& pa = all[static_cast<size_t>(a)];
        const Pt& pb = all[static_cast<size_t>(b)];
        if (pa.x != pb.x) return pa.x < pb.x;
        return pb.y < pa.y;
    });

    std::vector<StaircaseR> out;
    size_t consumed = 0;
    for (int start : starts) {
        StaircaseR st;
        long lvl = 0;  // inclusive prefix difference at the first blue
        for (const auto& q : all)
            if (q.x <= all[static_cast<size_t>(start)].x &&
                q.y <= all[static_cast<size_t>(start)].y)
                lvl += q.blue ? 1 : -1;
        st.index = static_cast<int>(lvl);
        int cur = start;
        while (true) {
            st.points.emplace_back(all[static_cast<size_t>(cur)].x,
                                   all[static_cast<size_t>(cur)].y);
            st.is_blue.push_back(all[static_cast<size_t>(cur)].blue ? 1 : 0);
            ++consumed;
            if (all[static_cast<size_t>(cur)].blue) {
                if (right_red[static_cast<size_t>(cur)] < 0) break;
                cur = right_red[static_cast<size_t>(cur)];
            } else {
                cur = below_blue[static_cast<size_t>(cur)];
            }
        }
        out.push_back(std::move(st));
    }
    if (consumed != all.size())
        throw NotDecomposable("points left over after the path decomposition");
    std::sort(out.begin(), out.end(),
              [](const StaircaseR& a, const StaircaseR& b) { return a.index < b.index; });
    return out;
}

}  // namespace digiray
