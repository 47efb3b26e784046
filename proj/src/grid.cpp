#include "digiray/grid.hpp"

#include <algorithm>

#include "digiray/errors.hpp"

namespace digiray {

std::string GridPoint::str() const {
    std::string s = "(";
    for (size_t k = 0; k < coords.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(coords[k]);
    }
    s += ")";
    return s;
}

std::string VertexTable::key(const GridPoint& p) {
    std::string s;
    s.reserve(p.coords.size() * 4);
    for (int c : p.coords) {
        s += std::to_string(c);
        s += ',';
    }
    return s;
}

VertexTable::VertexTable(int n_max, int dim) : n_(n_max), dim_(dim) {
    if (n_max < 0) throw OutOfDomain("n_max must be nonnegative");
    if (dim < 1) throw OutOfDomain("dim must be at least 1");

    layers_.resize(static_cast<size_t>(n_max) + 1);

    // Enumerate one layer at a time so ids are sorted by (layer, lex).
    std::vector<int> cur(static_cast<size_t>(dim), 0);
    for (int n = 0; n <= n_max; ++n) {
        // lexicographically first point of the layer: (0, ..., 0, n)
        std::fill(cur.begin(), cur.end(), 0);
        cur.back() = n;
        while (true) {
            GridPoint p{cur};
            int id = static_cast<int>(points_.size());
            points_.push_back(p);
            layers_[static_cast<size_t>(n)].push_back(id);
            index_.emplace(key(p), id);

            // next point of the layer in lex order
            int k = dim - 2;
            while (k >= 0) {
                int tail = 0;
                for (int j = k + 1; j < dim; ++j) tail += cur[static_cast<size_t>(j)];
                if (tail > 0) {
                    ++cur[static_cast<size_t>(k)];
                    for (int j = k + 1; j < dim; ++j) cur[static_cast<size_t>(j)] = 0;
                    cur.back() = tail - 1;
                    break;
                }
                --k;
            }
            if (k < 0) break;
        }
    }
}

int VertexTable::id_of(const GridPoint& p) const {
    if (p.dim() != dim_) return -1;
    for (int c : p.coords)
        if (c < 0) return -1;
    if (p.layer() > n_) return -1;
    auto it = index_.find(key(p));
    return it == index_.end() ? -1 : it->second;
}

}  // namespace digiray
