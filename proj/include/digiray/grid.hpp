#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace digiray {

// A point of the nonnegative orthant. coords[k] >= 0 for all k.
struct GridPoint {
    std::vector<int> coords;

    GridPoint() = default;
    explicit GridPoint(std::vector<int> c) : coords(std::move(c)) {}
    GridPoint(int x, int y) : coords{x, y} {}
    GridPoint(int x, int y, int z) : coords{x, y, z} {}

    int dim() const { return static_cast<int>(coords.size()); }
    int operator[](int k) const { return coords[static_cast<size_t>(k)]; }
    int& operator[](int k) { return coords[static_cast<size_t>(k)]; }

    int layer() const {
        int s = 0;
        for (int c : coords) s += c;
        return s;
    }

    bool operator==(const GridPoint& o) const { return coords == o.coords; }
    bool operator!=(const GridPoint& o) const { return coords != o.coords; }
    bool operator<(const GridPoint& o) const {
        if (layer() != o.layer()) return layer() < o.layer();
        return coords < o.coords;
    }

    std::string str() const;
};

// Enumeration of G+_N in a fixed dimension: all points with coordinate sum
// <= N, ordered by (layer, lexicographic coordinates). This order is the
// canonical one used by the JSON tree format and the seeded generators.
class VertexTable {
public:
    VertexTable(int n_max, int dim);

    int n_max() const { return n_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(points_.size()); }

    const GridPoint& point(int id) const { return points_[static_cast<size_t>(id)]; }
    int layer(int id) const { return points_[static_cast<size_t>(id)].layer(); }

    // -1 when the point is outside G+_N.
    int id_of(const GridPoint& p) const;
    bool contains(const GridPoint& p) const { return id_of(p) >= 0; }

    // ids of the vertices whose coordinate sum is exactly n, in canonical order.
    const std::vector<int>& layer_ids(int n) const { return layers_[static_cast<size_t>(n)]; }

private:
    int n_;
    int dim_;
    std::vector<GridPoint> points_;
    std::vector<std::vector<int>> layers_;
    std::unordered_map<std::string, int> index_;

    static std::string key(const GridPoint& p);
};

}  // namespace digiray
