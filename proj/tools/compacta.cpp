#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "compacta/eilenberg.hpp"
#include "compacta/error.hpp"
#include "compacta/expr.hpp"
#include "compacta/extension.hpp"
#include "compacta/gallery.hpp"
#include "compacta/generators.hpp"
#include "compacta/grid.hpp"
#include "compacta/report.hpp"
#include "compacta/rouche.hpp"
#include "compacta/svg.hpp"

namespace {

using namespace compacta;
using nlohmann::json;

struct CommonFlags {
    double resolution = 0.02;
    int degree_max = 80;
    double delta = -1;
    double epsilon = -1;
    std::string out;
    std::string svg;
    bool timings = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("ParseError", "cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Report& report, const CommonFlags& flags,
          std::chrono::steady_clock::time_point started) {
    Report final = report;
    if (flags.timings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        final.timings = json{{"total_ms", ms}};
    }
    std::string text = final.to_string();
    if (flags.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(flags.out, std::ios::binary);
        if (!out) fail("ParseError", "cannot open report path " + flags.out);
        out << text;
    }
}

void draw_analysis(const std::string& path, const GridCompactum& K, const RegionLabeling& L) {
    SvgWriter svg;
    svg.add_region(K, "#4060c0", 0.6);
    for (const auto& comp : set_components(K))
        for (const auto& c : trace_boundary(K, comp, true))
            svg.add_polyline(c.vertices, true, "#102040", K.h / 2);
    std::vector<Complex> reps;
    for (const auto& h : L.holes) reps.push_back(h.representative);
    svg.add_points(reps, "#c03030", 2 * K.h);
    svg.write(path);
}

int cmd_analyze(const std::string& spec_path, const CommonFlags& flags,
                const std::string& bitmap_out) {
    auto started = std::chrono::steady_clock::now();
    std::string text = slurp(spec_path);
    ShapeSpec shape = ShapeSpec::from_json(text);
    GridCompactum K = rasterize(shape, flags.resolution);
    RegionLabeling L = complement_components(K);
    GridCompactum hull = polynomial_hull(K, L);
    auto cycles = outer_boundary(K);

    Report rep;
    rep.command = "analyze";
    rep.input_digest = digest_hex(text);
    rep.resolution = flags.resolution;
    rep.results["topology"] = labeling_json(K, L);
    rep.results["hull_cells"] = hull.cell_count();
    json oc = json::array();
    for (const auto& c : cycles)
        oc.push_back({{"vertices", c.vertices.size()},
                      {"length", c.length()},
                      {"orientation", c.orientation}});
    rep.results["outer_boundary"] = oc;
    json regs = json::array();
    for (int j = 0; j < L.hole_count(); ++j) regs.push_back(regular_hole(K, L, j));
    rep.results["hole_regular"] = regs;

    if (!bitmap_out.empty()) {
        std::ofstream out(bitmap_out, std::ios::binary);
        if (!out) fail("ParseError", "cannot open bitmap path " + bitmap_out);
        out << K.to_text();
    }
    if (!flags.svg.empty()) draw_analysis(flags.svg, K, L);
    emit(rep, flags, started);
    return 0;
}

int cmd_extend(const std::string& spec_path, const std::string& expr_text,
               const CommonFlags& flags) {
    auto started = std::chrono::steady_clock::now();
    std::string text = slurp(spec_path);
    ShapeSpec shape = ShapeSpec::from_json(text);
    GridCompactum K = rasterize(shape, flags.resolution);
    FunctionExpr expr = FunctionExpr::parse(expr_text);

    ExtensionOptions opts;
    opts.fit.degree_max = flags.degree_max;
    if (flags.delta > 0) opts.delta_domain = opts.delta_hull = flags.delta;
    if (flags.epsilon > 0) opts.epsilon_domain = opts.epsilon_hull = flags.epsilon;
    ExtensionReport ext = check_extension_injectivity(expr.as_map(), K, opts);

    Report rep;
    rep.command = "extend";
    rep.input_digest = digest_hex(text + "\n" + expr_text);
    rep.resolution = flags.resolution;
    rep.tolerances = {{"delta_domain", opts.delta_domain > 0 ? opts.delta_domain : 5 * K.h},
                      {"epsilon_domain", opts.epsilon_domain},
                      {"degree_max", flags.degree_max}};
    rep.results["function"] = expr.source();
    rep.results["extension"] = extension_report_json(ext);
    rep.falsification_events = ext.falsification_events;

    if (!flags.svg.empty()) {
        SvgWriter svg;
        svg.add_region(K, "#4060c0", 0.5);
        auto f = expr.as_map();
        auto cells = K.cell_centers();
        std::vector<Complex> images;
        images.reserve(cells.size());
        for (const auto& z : cells) images.push_back(f(z));
        svg.add_points(images, "#30a050", K.h / 2);
        for (const auto& w : ext.injective_on_hull.witnesses) {
            svg.add_segment(w.z1, w.z2, "#c03030", K.h);
            svg.add_points({w.z1, w.z2}, "#c03030", 2 * K.h);
        }
        svg.write(flags.svg);
    }
    emit(rep, flags, started);
    return rep.falsification_events.empty() ? 0 : 1;
}

int cmd_factorize(const std::string& spec_path, const std::string& expr_text,
                  const CommonFlags& flags) {
    auto started = std::chrono::steady_clock::now();
    std::string text = slurp(spec_path);
    ShapeSpec shape = ShapeSpec::from_json(text);
    GridCompactum K = rasterize(shape, flags.resolution);
    FunctionExpr expr = FunctionExpr::parse(expr_text);

    RegionLabeling L = complement_components(K);
    Factorization fac = factorize(expr.as_map(), K, L);

    Report rep;
    rep.command = "factorize";
    rep.input_digest = digest_hex(text + "\n" + expr_text);
    rep.resolution = flags.resolution;
    rep.results["function"] = expr.source();
    rep.results["factorization"] = factorization_json(fac);
    bool log_free = true;
    for (int s : fac.exponents) log_free = log_free && s == 0;
    rep.results["has_continuous_log"] = log_free;
    emit(rep, flags, started);
    return 0;
}

MeromorphicSpec parse_meromorphic(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail("ParseError", "invalid JSON meromorphic spec");
    MeromorphicSpec spec;
    auto read = [](const json& arr, std::vector<MeromorphicSpec::Order>& into) {
        if (arr.is_null()) return;
        for (const auto& q : arr) {
            MeromorphicSpec::Order o;
            const auto& loc = q.at("location");
            o.location = Complex(loc.at(0).get<double>(), loc.at(1).get<double>());
            o.multiplicity = q.value("multiplicity", 1);
            into.push_back(o);
        }
    };
    if (j.contains("zeros")) read(j["zeros"], spec.zeros);
    if (j.contains("poles")) read(j["poles"], spec.poles);
    spec.validate();
    return spec;
}

int cmd_rouche(const std::string& spec_path, const std::string& f_text,
               const std::string& g_text, const CommonFlags& flags) {
    auto started = std::chrono::steady_clock::now();
    std::string text = slurp(spec_path);
    ShapeSpec shape = ShapeSpec::from_json(text);
    GridCompactum K = rasterize(shape, flags.resolution);
    MeromorphicSpec f = parse_meromorphic(f_text);
    MeromorphicSpec g = parse_meromorphic(g_text);

    RoucheVerdict v = homotopic_rouche_check(f, g, K);
    Report rep;
    rep.command = "rouche";
    rep.input_digest = digest_hex(text + "\n" + f_text + "\n" + g_text);
    rep.resolution = flags.resolution;
    rep.results["verdict"] = rouche_verdict_json(v);
    if (v.falsification)
        rep.falsification_events.push_back("homotopic Rouche hypothesis held but counts differ");
    emit(rep, flags, started);
    return v.falsification ? 1 : 0;
}

int cmd_generators(const std::string& spec_path, const std::string& expr_text,
                   const CommonFlags& flags) {
    auto started = std::chrono::steady_clock::now();
    std::string text = slurp(spec_path);
    ShapeSpec shape = ShapeSpec::from_json(text);
    GridCompactum K = rasterize(shape, flags.resolution);
    FunctionExpr expr = FunctionExpr::parse(expr_text);

    GeneratorOptions opts;
    opts.spec = &shape;
    opts.fit.degree_max = flags.degree_max;
    if (flags.delta > 0) opts.delta = flags.delta;
    if (flags.epsilon > 0) opts.epsilon = flags.epsilon;
    std::string trimmed = expr.source();
    trimmed.erase(remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
    opts.phi_is_identity = trimmed == "z";

    auto phi = expr.as_map();
    Report rep;
    rep.command = "generators";
    rep.input_digest = digest_hex(text + "\n" + expr_text);
    rep.resolution = flags.resolution;
    rep.results["function"] = expr.source();
    rep.results["C"] = generator_verdict_json(generates_c(phi, K, opts));
    rep.results["A"] = generator_verdict_json(generates_a(phi, K, opts));
    rep.results["R"] = generator_verdict_json(generates_r(phi, K, opts));
    rep.results["P"] = generator_verdict_json(generates_p(phi, K, opts));
    emit(rep, flags, started);
    return 0;
}

int cmd_gallery(const std::string& which, const CommonFlags& flags) {
    auto started = std::chrono::steady_clock::now();
    std::vector<std::string> ids;
    if (which == "all")
        ids = gallery_case_ids();
    else
        ids.push_back(which);

    json cases = json::array();
    bool all_passed = true;
    std::vector<std::string> events;
    for (const auto& id : ids) {
        GalleryCaseResult res = run_gallery_case(id);
        cases.push_back(res.to_json());
        if (!res.passed()) {
            all_passed = false;
            for (const auto& a : res.assertions)
                if (!a.passed) events.push_back(id + ": " + a.name);
        }
    }

    Report rep;
    rep.command = "gallery";
    rep.input_digest = digest_hex(which);
    rep.resolution = 0.01;
    rep.results["cases"] = cases;
    rep.results["passed"] = all_passed;
    rep.falsification_events = events;
    emit(rep, flags, started);
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compacta: topology, winding and holomorphic-extension checks on rasterized "
                 "planar compacta"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string spec_path, expr_text, bitmap_out, f_text, g_text, which = "all";

    auto add_common = [&](CLI::App* cmd, bool with_degree = true) {
        cmd->add_option("-r,--resolution", flags.resolution, "grid cell size h")
            ->capture_default_str();
        if (with_degree)
            cmd->add_option("--degree-max", flags.degree_max, "fit degree cap")
                ->capture_default_str();
        cmd->add_option("--delta", flags.delta, "injectivity preimage separation override");
        cmd->add_option("--epsilon", flags.epsilon, "injectivity image tolerance override");
        cmd->add_option("--out", flags.out, "report output path (default stdout)");
        cmd->add_option("--svg", flags.svg, "optional SVG overlay path");
        cmd->add_flag("--timings", flags.timings, "include wall-clock timings in the report");
    };

    auto* analyze = app.add_subcommand("analyze", "holes, hull, boundaries, regularity");
    analyze->add_option("spec", spec_path, "shape DSL file")->required();
    analyze->add_option("--bitmap-out", bitmap_out, "write the rasterized set as a text bitmap");
    add_common(analyze, false);

    auto* extend = app.add_subcommand("extend", "outer-boundary criterion and extension test");
    extend->add_option("spec", spec_path)->required();
    extend->add_option("function", expr_text, "expression in z")->required();
    add_common(extend);

    auto* factor = app.add_subcommand("factorize", "zero-free factorization over the holes");
    factor->add_option("spec", spec_path)->required();
    factor->add_option("function", expr_text)->required();
    add_common(factor);

    auto* rouche = app.add_subcommand("rouche", "homotopic zero/pole counting");
    rouche->add_option("spec", spec_path)->required();
    rouche->add_option("--f", f_text, "meromorphic spec JSON")->required();
    rouche->add_option("--g", g_text, "meromorphic spec JSON")->required();
    add_common(rouche, false);

    auto* gens = app.add_subcommand("generators", "algebra generator verdicts");
    gens->add_option("spec", spec_path)->required();
    gens->add_option("function", expr_text)->required();
    add_common(gens);

    auto* gallery = app.add_subcommand("gallery", "run the worked examples");
    gallery->add_option("case", which, "case id G1..G7 or 'all'")->capture_default_str();
    gallery->add_option("--out", flags.out, "report output path");
    gallery->add_flag("--timings", flags.timings, "include timings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(spec_path, flags, bitmap_out);
        if (*extend) return cmd_extend(spec_path, expr_text, flags);
        if (*factor) return cmd_factorize(spec_path, expr_text, flags);
        if (*rouche) return cmd_rouche(spec_path, f_text, g_text, flags);
        if (*gens) return cmd_generators(spec_path, expr_text, flags);
        if (*gallery) return cmd_gallery(which, flags);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::Numeric ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
