#include "digiray/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "digiray/discrepancy.hpp"
#include "digiray/errors.hpp"
#include "digiray/rational.hpp"

namespace digiray {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string svg_open(int w, int h) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    return s.str();
}

}  // namespace

std::string render_tree_svg(const RayTree& tree, int size_px) {
    if (tree.dim != 2) throw OutOfDomain("tree rendering is two dimensional");
    double margin = size_px * 0.05;
    double span = size_px - 2 * margin;
    double step = tree.n > 0 ? span / tree.n : span;
    auto X = [&](int gx) { return margin + gx * step; };
    auto Y = [&](int gy) { return size_px - margin - gy * step; };

    std::ostringstream s;
    s << svg_open(size_px, size_px);
    s << "<rect width=\"" << size_px << "\" height=\"" << size_px << "\" fill=\"white\"/>\n";
    for (int id = 1; id < tree.size(); ++id) {
        const GridPoint& v = tree.point(id);
        int axis = tree.parent_axis[static_cast<size_t>(id)];
        int ux = v[0] - (axis == 0 ? 1 : 0);
        int uy = v[1] - (axis == 1 ? 1 : 0);
        s << "<line x1=\"" << num(X(ux)) << "\" y1=\"" << num(Y(uy)) << "\" x2=\""
          << num(X(v[0])) << "\" y2=\"" << num(Y(v[1])) << "\" stroke=\"#333333\" "
          << "stroke-width=\"1\"/>\n";
    }
    auto ch = tree.children();
    double r = std::max(1.5, step * 0.18);
    for (int id = 0; id < tree.size(); ++id) {
        const GridPoint& v = tree.point(id);
        int layer = v.layer();
        size_t kids = ch[static_cast<size_t>(id)].size();
        const char* fill = "#999999";
        if (layer < tree.n && kids == 0)
            fill = "#cc2222";  // inner leaf
        else if (id == 0 || kids == 2)
            fill = "#2244cc";  // split
        s << "<circle cx=\"" << num(X(v[0])) << "\" cy=\"" << num(Y(v[1])) << "\" r=\""
          << num(r) << "\" fill=\"" << fill << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_pointset_svg(const BicoloredPointSet& ps, int size_px) {
    double margin = size_px * 0.05;
    double span = size_px - 2 * margin;
    auto X = [&](double u) { return margin + u * span; };
    auto Y = [&](double u) { return size_px - margin - u * span; };

    std::ostringstream s;
    s << svg_open(size_px, size_px);
    s << "<rect width=\"" << size_px << "\" height=\"" << size_px << "\" fill=\"white\"/>\n";
    s << "<rect x=\"" << num(margin) << "\" y=\"" << num(margin) << "\" width=\"" << num(span)
      << "\" height=\"" << num(span) << "\" fill=\"none\" stroke=\"#888888\"/>\n";

    auto draw = [&](double x, double y, const char* fill) {
        s << "<circle cx=\"" << num(X(x)) << "\" cy=\"" << num(Y(y)) << "\" r=\"3.00\" fill=\""
          << fill << "\"/>\n";
    };
    if (ps.kind == BicoloredPointSet::Kind::exact) {
        for (const auto& [x, y] : ps.blue) draw(rat_double(x), rat_double(y), "#2244cc");
        for (const auto& [x, y] : ps.red) draw(rat_double(x), rat_double(y), "#cc2222");
    } else {
        for (const auto& [x, y] : ps.fblue) draw(x, y, "#2244cc");
        for (const auto& [x, y] : ps.fred) draw(x, y, "#cc2222");
    }
    s << "</svg>\n";
    return s.str();
}

std::string render_heatmap_svg(const BicoloredPointSet& ps, int size_px, int grid) {
    if (grid < 2) throw OutOfDomain("heatmap grid must be at least 2");
    std::vector<std::pair<double, double>> blue, red;
    if (ps.kind == BicoloredPointSet::Kind::exact) {
        for (const auto& [x, y] : ps.blue) blue.emplace_back(rat_double(x), rat_double(y));
        for (const auto& [x, y] : ps.red) red.emplace_back(rat_double(x), rat_double(y));
    } else {
        blue = ps.fblue;
        red = ps.fred;
    }
    long m = static_cast<long>(blue.size()) - static_cast<long>(red.size());
    if (m <= 0) throw NonPositiveM("heatmap needs more blue than red points");

    double cell = static_cast<double>(size_px) / grid;
    std::ostringstream s;
    s << svg_open(size_px, size_px);
    for (int gy = 0; gy < grid; ++gy) {
        for (int gx = 0; gx < grid; ++gx) {
            double x = (gx + 0.5) / grid;
            double y = (gy + 0.5) / grid;
            long c = 0;
            for (const auto& [px, py] : blue)
                if (px <= x && py <= y) ++c;
            for (const auto& [px, py] : red)
                if (px <= x && py <= y) --c;
            double d = static_cast<double>(m) * x * y - static_cast<double>(c);
            d = std::clamp(d, -1.0, 1.0);
            // brightness of green encodes D in [-1,1]
            int g = static_cast<int>(255.0 * (d + 1.0) / 2.0);
            char color[8];
            std::snprintf(color, sizeof(color), "#00%02x00", g);
            s << "<rect x=\"" << num(gx * cell) << "\" y=\"" << num(size_px - (gy + 1) * cell)
              << "\" width=\"" << num(cell) << "\" height=\"" << num(cell) << "\" fill=\""
              << color << "\"/>\n";
        }
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace digiray
