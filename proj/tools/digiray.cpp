// digiray: build, verify, measure and transform consistent digital ray
// systems on integer grids.
//
// Exit codes: 0 success, 1 check failed, 2 usage error, 3 schema error.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "digiray/construct.hpp"
#include "digiray/discrepancy.hpp"
#include "digiray/errors.hpp"
#include "digiray/highdim.hpp"
#include "digiray/io.hpp"
#include "digiray/mapping.hpp"
#include "digiray/metrics.hpp"
#include "digiray/staircase.hpp"
#include "digiray/svg.hpp"
#include "digiray/tree.hpp"

using namespace digiray;

namespace {

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::usage: return 2;
        case ErrorKind::schema: return 3;
        case ErrorKind::check: return 1;
    }
    return 2;
}

FloatPrecision precision_from_env() {
    const char* env = std::getenv("DIGIRAY_PRECISION");
    if (env && std::string(env) == "double") return FloatPrecision::double53;
    return FloatPrecision::extended64;  // 64-bit mantissa long double
}

std::string closure_name(Closure c) {
    return c == Closure::inclusive ? "inclusive" : "left-limit";
}

int cmd_build(const std::string& construction, int n, int dim, int c, uint64_t seed,
              double leaf_rate, const std::string& out) {
    RayTree tree;
    if (construction == "greedy") {
        tree = greedy_weak_cdr({n, SeedCdr::parent_right});
    } else if (construction == "tradeoff") {
        tree = tradeoff_weak_cdr(n, c);
    } else if (construction == "axis-order") {
        tree = axis_order_cdr(n, dim);
    } else if (construction == "random-weak") {
        tree = random_weak_cdr(n, seed, leaf_rate);
    } else if (construction == "random-proper") {
        tree = random_proper_cdr(n, dim, seed);
    } else {
        throw OutOfDomain("unknown construction " + construction);
    }
    save_tree(out, tree);
    std::cout << "wrote " << out << " (" << tree.size() << " vertices)\n";
    return 0;
}

int cmd_verify(const std::string& in, const std::string& mode_name) {
    RayTree tree = load_tree(in);
    VerifyMode mode = mode_name == "proper" ? VerifyMode::proper : VerifyMode::weak;
    AxiomReport rep = verify_axioms(tree, mode);
    std::cout << "vertices: " << rep.vertex_count << "\n";
    std::cout << "s1 grid path: " << (rep.s1_ok ? "ok" : "FAIL") << "\n";
    std::cout << "s2 symmetry: " << (rep.s2_ok ? "ok" : "FAIL") << "\n";
    std::cout << "s3 subsegment: " << (rep.s3_ok ? "ok" : "FAIL") << "\n";
    std::cout << "s5 monotonicity: " << (rep.s5_ok ? "ok" : "FAIL") << "\n";
    std::cout << "s4 inner leaves: " << rep.inner_leaf_count << "\n";
    if (mode == VerifyMode::proper && !rep.s4_violators.empty()) {
        std::cout << "s4 violators:";
        for (const auto& v : rep.s4_violators) std::cout << " " << v.str();
        std::cout << "\n";
    }
    std::cout << (rep.passed() ? "PASS" : "FAIL") << " (" << mode_name << ")\n";
    return rep.passed() ? 0 : 1;
}

int cmd_metrics(const std::string& in, const std::string& scope_name) {
    RayTree tree = load_tree(in);
    ErrorScope scope = scope_name == "boundary" ? ErrorScope::boundary : ErrorScope::all;
    ErrorResult res = hausdorff_tree(tree, scope);
    std::cout << "hausdorff error: " << rat_str(res.value) << " ("
              << rat_double(res.value) << ")\n";
    std::cout << "witness ray: " << res.witness_ray.str() << "\n";
    std::cout << "witness location: " << res.witness_location << "\n";
    return 0;
}

int cmd_map(const std::string& in, const std::string& out, bool as_float) {
    RayTree tree = load_tree(in);
    BicoloredPointSet ps = transform_pi(tree);
    MappingReport rep = validate_mapping(tree);
    if (!rep.all_ok()) {
        std::cerr << "mapping checks failed: " << rep.counterexample << "\n";
        return 1;
    }
    if (as_float) {
        BicoloredPointSet f;
        f.kind = BicoloredPointSet::Kind::floating;
        for (const auto& [x, y] : ps.blue) f.fblue.emplace_back(rat_double(x), rat_double(y));
        for (const auto& [x, y] : ps.red) f.fred.emplace_back(rat_double(x), rat_double(y));
        save_pointset(out, f);
    } else {
        save_pointset(out, ps);
    }
    std::cout << "wrote " << out << " (" << ps.blue.size() << " blue, " << ps.red.size()
              << " red)\n";
    return 0;
}

int cmd_discrepancy(const std::string& in, int brute_resolution) {
    BicoloredPointSet ps = load_pointset(in);
    if (ps.kind == BicoloredPointSet::Kind::exact) {
        auto res = discrepancy_star(ps);
        std::cout << "D* = " << rat_str(res.value) << " (" << rat_double(res.value) << ")\n";
        std::cout << "witness: (" << rat_str(res.wx) << ", " << rat_str(res.wy) << ") "
                  << closure_name(res.cx) << "/" << closure_name(res.cy)
                  << " sign " << res.sign << "\n";
    } else {
        auto res = discrepancy_star_float(ps);
        std::cout << "D* = " << res.value << "\n";
        std::cout << "witness: (" << res.wx << ", " << res.wy << ") " << closure_name(res.cx)
                  << "/" << closure_name(res.cy) << " sign " << res.sign << "\n";
    }
    if (brute_resolution >= 2) {
        std::cout << "brute force (resolution " << brute_resolution
                  << "): " << discrepancy_star_bruteforce(ps, brute_resolution) << "\n";
    }
    auto [b2, r2] = upper_half_stats(ps);
    std::cout << "upper half: " << b2 << " blue, " << r2 << " red\n";
    return 0;
}

int cmd_staircase(long m, long xi, const std::string& out) {
    FloatPrecision prec = precision_from_env();
    BicoloredPointSet ps;
    if (xi <= 0) {
        auto stairs = symmetric_staircase_curves(m, prec);
        ps = flatten_stairs(stairs);
        std::cout << "symmetric staircases: m=" << m << ", " << ps.fblue.size() << " blue, "
                  << ps.fred.size() << " red\n";
        std::cout << "D* (staircase evaluator) = " << staircase_discrepancy(stairs) << "\n";
    } else {
        std::vector<StaircaseF> stairs;
        for (long i = 1; i <= m; ++i) stairs.push_back(greedy_stair_between(m, i, xi, prec));
        ps = flatten_stairs(stairs);
        std::cout << "band staircases: m=" << m << ", xi=" << xi << ", " << ps.fblue.size()
                  << " blue, " << ps.fred.size() << " red\n";
    }
    if (!out.empty()) {
        save_pointset(out, ps);
        std::cout << "wrote " << out << "\n";
    }
    return 0;
}

int cmd_frontier(const std::vector<std::string>& ins, const std::string& out) {
    std::vector<RayTree> trees;
    trees.reserve(ins.size());
    for (const auto& path : ins) trees.push_back(load_tree(path));
    auto recs = frontier(trees);
    std::string csv = frontier_to_csv(recs);
    if (out.empty())
        std::cout << csv;
    else {
        write_file(out, csv);
        std::cout << "wrote " << out << " (" << recs.size() << " rows)\n";
    }
    return 0;
}

int cmd_render(const std::string& subject, const std::string& in, const std::string& out,
               int size, int grid) {
    std::string svg;
    if (subject == "tree") {
        svg = render_tree_svg(load_tree(in), size);
    } else if (subject == "pointset") {
        svg = render_pointset_svg(load_pointset(in), size);
    } else if (subject == "heatmap") {
        svg = render_heatmap_svg(load_pointset(in), size, grid);
    } else {
        throw OutOfDomain("unknown render subject " + subject);
    }
    write_file(out, svg);
    std::cout << "wrote " << out << "\n";
    return 0;
}

int cmd_probe(const std::string& in) {
    RayTree tree = load_tree(in);
    auto w = packing_witness(tree);
    std::cout << "{";
    if (!w.has_value()) {
        RayTree flat = restrict_to_plane(tree, 0, 1);
        std::cout << "\"kappa2\": " << kappa2_of(flat) << ", \"witness\": null";
    } else {
        std::cout << "\"kappa2\": " << w->kappa2 << ", \"threshold\": " << w->threshold
                  << ", \"witness\": {\"v\": \"" << w->v.str() << "\", \"u\": \"" << w->u.str()
                  << "\", \"j\": " << w->j << ", \"u_j\": " << w->u_j << "}";
        if (tree.n >= 6)
            std::cout << ", \"crossing_deviation\": \""
                      << rat_str(crossing_plane_error(tree, *w)) << "\"";
    }
    std::cout << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"consistent digital rays: constructions, metrics, mappings, discrepancy"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct a tree and write it as JSON");
    std::string construction, out = "tree.json";
    int n = 16, dim = 2, c = 1;
    uint64_t seed = 0;
    double leaf_rate = 0.5;
    build->add_option("--construction", construction,
                      "greedy|tradeoff|axis-order|random-weak|random-proper")
        ->required();
    build->add_option("--n", n, "grid size N")->required();
    build->add_option("--dim", dim, "dimension (axis-order, random-proper)");
    build->add_option("--c", c, "trade-off scale");
    build->add_option("--seed", seed, "random seed");
    build->add_option("--leaf-rate", leaf_rate, "left-parent bias for random-weak");
    build->add_option("--out", out, "output file");

    auto* verify = app.add_subcommand("verify", "check the axioms of a tree file");
    std::string vin, vmode = "weak";
    verify->add_option("--in", vin)->required();
    verify->add_option("--mode", vmode, "proper|weak");

    auto* metrics = app.add_subcommand("metrics", "exact Hausdorff error of a tree");
    std::string min_, mscope = "all";
    metrics->add_option("--in", min_)->required();
    metrics->add_option("--scope", mscope, "all|boundary");

    auto* map = app.add_subcommand("map", "transform a tree into a bicolored pointset");
    std::string pin, pout = "points.csv";
    bool pfloat = false;
    map->add_option("--in", pin)->required();
    map->add_option("--out", pout);
    map->add_flag("--float", pfloat, "write float coordinates");

    auto* disc = app.add_subcommand("discrepancy", "exact D* of a pointset file");
    std::string din;
    int dres = 0;
    disc->add_option("--points", din)->required();
    disc->add_option("--resolution", dres, "also run the brute-force prober");

    auto* stair = app.add_subcommand("staircase", "symmetric or band staircase pointsets");
    long sm = 7, sxi = 0;
    std::string sout;
    stair->add_option("--m", sm, "number of stairs")->required();
    stair->add_option("--xi", sxi, "discrepancy budget (band construction)");
    stair->add_option("--out", sout, "output CSV");

    auto* front = app.add_subcommand("frontier", "error / inner-leaf records for trees");
    std::vector<std::string> fins;
    std::string fout;
    front->add_option("--in", fins, "tree files")->required()->expected(-1);
    front->add_option("--out", fout, "output CSV (stdout when absent)");

    auto* render = app.add_subcommand("render", "SVG figures");
    std::string rsubject, rin, rout = "out.svg";
    int rsize = 640, rgrid = 64;
    render->add_option("--subject", rsubject, "tree|pointset|heatmap")->required();
    render->add_option("--in", rin)->required();
    render->add_option("--out", rout);
    render->add_option("--size", rsize, "canvas pixels");
    render->add_option("--grid", rgrid, "heatmap resolution");

    auto* probe = app.add_subcommand("probe", "restriction kappa2 and packing witness");
    std::string hin;
    probe->add_option("--in", hin)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (build->parsed())
            return cmd_build(construction, n, dim, c, seed, leaf_rate, out);
        if (verify->parsed()) return cmd_verify(vin, vmode);
        if (metrics->parsed()) return cmd_metrics(min_, mscope);
        if (map->parsed()) return cmd_map(pin, pout, pfloat);
        if (disc->parsed()) return cmd_discrepancy(din, dres);
        if (stair->parsed()) return cmd_staircase(sm, sxi, sout);
        if (front->parsed()) return cmd_frontier(fins, fout);
        if (render->parsed()) return cmd_render(rsubject, rin, rout, rsize, rgrid);
        if (probe->parsed()) return cmd_probe(hin);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
