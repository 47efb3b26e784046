#include "digiray/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "digiray/errors.hpp"

namespace digiray {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << content;
}

std::string tree_to_json(const RayTree& tree) {
    nlohmann::ordered_json j;
    j["n"] = tree.n;
    j["dim"] = tree.dim;
    std::vector<int> parents;
    parents.reserve(static_cast<size_t>(tree.size()) - 1);
    for (int id = 1; id < tree.size(); ++id)
        parents.push_back(tree.parent_axis[static_cast<size_t>(id)]);
    j["parents"] = parents;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : tree.meta) meta[k] = v;  // std::map keeps keys sorted
    j["meta"] = meta;
    return j.dump();
}

RayTree tree_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("dim") || !j.contains("parents"))
        throw SchemaError("tree object needs n, dim and parents");
    if (!j["n"].is_number_integer() || !j["dim"].is_number_integer() ||
        !j["parents"].is_array())
        throw SchemaError("n and dim must be integers, parents an array");

    int n = j["n"].get<int>();
    int dim = j["dim"].get<int>();
    if (n < 1 || dim < 2) throw SchemaError("need n >= 1 and dim >= 2");

    auto verts = std::make_shared<VertexTable>(n, dim);
    if (static_cast<int>(j["parents"].size()) != verts->size() - 1)
        throw SchemaError("parents array must cover every non-origin vertex in canonical order");

    std::vector<int8_t> axes(static_cast<size_t>(verts->size()), -1);
    for (int id = 1; id < verts->size(); ++id) {
        const auto& e = j["parents"][static_cast<size_t>(id - 1)];
        if (!e.is_number_integer()) throw SchemaError("parent axis must be an integer");
        axes[static_cast<size_t>(id)] = static_cast<int8_t>(e.get<int>());
    }

    RayTree t;
    try {
        t = build_tree_raw(n, dim, std::move(axes));
    } catch (const Error& e) {
        throw SchemaError(std::string("invalid tree: ") + e.what());
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) throw SchemaError("meta must be an object of strings");
        for (const auto& [k, v] : j["meta"].items()) {
            if (!v.is_string()) throw SchemaError("meta values must be strings");
            t.meta[k] = v.get<std::string>();
        }
    }
    return t;
}

void save_tree(const std::string& path, const RayTree& tree) {
    write_file(path, tree_to_json(tree) + "\n");
}

RayTree load_tree(const std::string& path) { return tree_from_json(read_file(path)); }

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

std::string pointset_to_csv(const BicoloredPointSet& ps) {
    std::ostringstream out;
    if (ps.kind == BicoloredPointSet::Kind::exact) {
        out << "color,x_num,x_den,y_num,y_den\n";
        auto row = [&out](const char* color, const std::pair<Rat, Rat>& p) {
            out << color << ',' << p.first.get_num().get_str() << ','
                << p.first.get_den().get_str() << ',' << p.second.get_num().get_str() << ','
                << p.second.get_den().get_str() << '\n';
        };
        for (const auto& p : ps.blue) row("blue", p);
        for (const auto& p : ps.red) row("red", p);
    } else {
        out << "color,x,y\n";
        for (const auto& [x, y] : ps.fblue)
            out << "blue," << fmt_double(x) << ',' << fmt_double(y) << '\n';
        for (const auto& [x, y] : ps.fred)
            out << "red," << fmt_double(x) << ',' << fmt_double(y) << '\n';
    }
    return out.str();
}

BicoloredPointSet pointset_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw SchemaError("empty pointset file");
    auto header = split_line(line);
    BicoloredPointSet ps;
    bool exact;
    if (header == std::vector<std::string>{"color", "x_num", "x_den", "y_num", "y_den"}) {
        exact = true;
        ps.kind = BicoloredPointSet::Kind::exact;
    } else if (header == std::vector<std::string>{"color", "x", "y"}) {
        exact = false;
        ps.kind = BicoloredPointSet::Kind::floating;
    } else {
        throw SchemaError("unrecognized pointset header");
    }

    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto parts = split_line(line);
        std::string where = "line " + std::to_string(lineno);
        if (parts.size() != (exact ? 5u : 3u)) throw SchemaError("bad column count at " + where);
        bool blue = parts[0] == "blue";
        if (!blue && parts[0] != "red") throw SchemaError("bad color at " + where);
        try {
            if (exact) {
                mpz_class xd(parts[2]), yd(parts[4]);
                if (xd == 0 || yd == 0) throw SchemaError("zero denominator at " + where);
                Rat x{mpz_class(parts[1]), xd};
                Rat y{mpz_class(parts[3]), yd};
                x.canonicalize();
                y.canonicalize();
                (blue ? ps.blue : ps.red).emplace_back(x, y);
            } else {
                double x = std::stod(parts[1]);
                double y = std::stod(parts[2]);
                (blue ? ps.fblue : ps.fred).emplace_back(x, y);
            }
        } catch (const std::exception&) {
            throw SchemaError("bad coordinate at " + where);
        }
    }
    return ps;
}

void save_pointset(const std::string& path, const BicoloredPointSet& ps) {
    write_file(path, pointset_to_csv(ps));
}

BicoloredPointSet load_pointset(const std::string& path) {
    return pointset_from_csv(read_file(path));
}

std::string frontier_to_csv(const std::vector<FrontierRecord>& records) {
    std::ostringstream out;
    out << "construction,n,error_num,error_den,kappa1,kappa2,bound_num,bound_den\n";
    for (const auto& r : records) {
        out << r.construction << ',' << r.n << ',' << r.error.get_num().get_str() << ','
            << r.error.get_den().get_str() << ',' << r.kappa1 << ',' << r.kappa2 << ','
            << r.bound_value.get_num().get_str() << ',' << r.bound_value.get_den().get_str()
            << '\n';
    }
    return out.str();
}

}  // namespace digiray
