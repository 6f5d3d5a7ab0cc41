#include "compacta/gallery.hpp"

#include <cmath>
#include <numbers>

#include "compacta/eilenberg.hpp"
#include "compacta/error.hpp"
#include "compacta/extension.hpp"
#include "compacta/generators.hpp"
#include "compacta/grid.hpp"
#include "compacta/report.hpp"
#include "compacta/rouche.hpp"
#include "compacta/winding.hpp"

namespace compacta {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kBand = 0.05;
constexpr double kH = 0.01;

struct Checker {
    GalleryCaseResult* out;
    void operator()(const std::string& name, bool ok, std::string details = "") {
        out->assertions.push_back({name, ok, std::move(details)});
    }
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// The two tangent circles of the no-injective-extension example and the
// piecewise map -z / z, branched by the nearer circle.
Complex map_tangent_circles(Complex z) {
    double dl = std::abs(std::abs(z + 1.0) - 1.0);
    double dr = std::abs(std::abs(z - 2.0) - 2.0);
    return dl <= dr ? -z : z;
}

// Disk-plus-circle variant: -z on the closed left disk, z on the circle.
Complex map_disk_circle(Complex z) {
    double dl = std::max(0.0, std::abs(z + 1.0) - 1.0);
    double dr = std::abs(std::abs(z - 2.0) - 2.0);
    return dl <= dr ? -z : z;
}

std::vector<Complex> circle_samples(Complex c, double r, std::size_t n) {
    std::vector<Complex> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(c + std::polar(r, 2 * kPi * static_cast<double>(k) / n));
    return out;
}

std::vector<Complex> disk_samples(Complex c, double r, double spacing) {
    std::vector<Complex> out;
    for (double y = -r; y <= r; y += spacing)
        for (double x = -r; x <= r; x += spacing)
            if (x * x + y * y <= r * r) out.push_back(c + Complex(x, y));
    return out;
}

bool in_left_disk(Complex z) { return std::abs(z + 1.0) <= 1.0 + 3 * kH; }
bool in_right_disk(Complex z) { return std::abs(z - 2.0) <= 2.0 + 3 * kH; }

GalleryCaseResult case_g1() {
    GalleryCaseResult r;
    r.id = "G1";
    r.title = "tangent circles: injective on K, no injective extension";
    Checker check{&r};

    ShapeSpec shape = ShapeSpec::union_of(
        {ShapeSpec::circle({-1, 0}, 1, kBand), ShapeSpec::circle({2, 0}, 2, kBand)});
    GridCompactum K = rasterize(shape, kH);
    RegionLabeling L = complement_components(K);
    check("two holes", L.hole_count() == 2, "holes=" + std::to_string(L.hole_count()));
    for (int j = 0; j < L.hole_count(); ++j)
        check("hole " + std::to_string(j) + " regular", regular_hole(K, L, j));

    auto f = [](Complex z) { return map_tangent_circles(z); };

    // The injectivity hypothesis lives on the exact curves; the band
    // raster is only the topology carrier.
    std::vector<Complex> exact = circle_samples({-1, 0}, 1, 4096);
    auto right = circle_samples({2, 0}, 2, 8192);
    exact.insert(exact.end(), right.begin(), right.end());

    ExtensionOptions opts;
    opts.delta_domain = 0.1;
    opts.epsilon_domain = 1e-6;
    opts.hypothesis_samples = &exact;
    ExtensionReport ext = check_extension_injectivity(f, K, opts);

    check("f injective on K samples", ext.injective_on_K.injective);
    check("criterion false", !ext.criterion.holds, "gap=" + num(ext.criterion.gap));
    check("criterion gap >= 0.4", ext.criterion.gap >= 0.4, "gap=" + num(ext.criterion.gap));
    check("extension non-injective", !ext.injective_on_hull.injective);
    bool straddles = false;
    for (const auto& w : ext.injective_on_hull.witnesses)
        straddles = straddles || (in_left_disk(w.z1) != in_left_disk(w.z2));
    check("collision witness straddles the disks", straddles);
    check("verdicts consistent", ext.falsification_events.empty());

    GeneratorOptions gopts;
    gopts.spec = &shape;
    gopts.homeo_samples = &exact;
    gopts.delta = 0.1;
    GeneratorVerdict gp = generates_p(f, K, gopts);
    check("inverse not in P(f(K))",
          gp.inverse_in_p && !gp.inverse_in_p->member &&
              gp.inverse_in_p->confidence == Confidence::High,
          gp.inverse_in_p ? "plateau=" + num(gp.inverse_in_p->final_residual) : "absent");

    r.payload["extension"] = extension_report_json(ext);
    r.payload["topology"] = labeling_json(K, L);
    if (gp.inverse_in_p) r.payload["inverse_membership"] = pmembership_json(*gp.inverse_in_p);
    return r;
}

GalleryCaseResult case_g2() {
    GalleryCaseResult r;
    r.id = "G2";
    r.title = "disk plus circle: extension injective on the regular holes only";
    Checker check{&r};

    ShapeSpec shape = ShapeSpec::union_of(
        {ShapeSpec::disk({-1, 0}, 1), ShapeSpec::circle({2, 0}, 2, kBand)});
    GridCompactum K = rasterize(shape, kH);
    RegionLabeling L = complement_components(K);
    check("one hole", L.hole_count() == 1, "holes=" + std::to_string(L.hole_count()));
    if (L.hole_count() == 1) check("hole of K regular", regular_hole(K, L, 0));

    auto f = [](Complex z) { return map_disk_circle(z); };

    std::vector<Complex> exact = disk_samples({-1, 0}, 1, 0.02);
    auto right = circle_samples({2, 0}, 2, 8192);
    exact.insert(exact.end(), right.begin(), right.end());

    ExtensionOptions opts;
    opts.delta_domain = 0.1;
    opts.epsilon_domain = 1e-6;
    opts.hypothesis_samples = &exact;
    ExtensionReport ext = check_extension_injectivity(f, K, opts);
    check("f injective on K samples", ext.injective_on_K.injective);
    check("criterion false", !ext.criterion.holds, "gap=" + num(ext.criterion.gap));
    check("extension non-injective on the full hull", !ext.injective_on_hull.injective);
    check("verdicts consistent", ext.falsification_events.empty());

    // The right-circle interior is the hole of the compactum; the
    // restriction of the extension test to its closure must be injective.
    // The fit runs on exact boundary samples: near the tangency the band
    // overlap makes raster-vertex branch values ambiguous.
    {
        ExtensionOptions per;
        per.delta_domain = 0.1;
        per.epsilon_domain = 1e-6;
        per.hypothesis_samples = &right;
        per.fit_samples = &right;
        PerHoleVerdict v = regular_hole_injectivity(f, K, 0, per);
        check("restriction injective on the right hole", v.injective && !v.falsification);
        check("right-hole criterion holds", v.report.criterion.holds,
              "gap=" + num(v.report.criterion.gap));
        r.payload["right_hole"] = extension_report_json(v.report);
    }

    // The left-disk interior is a hole of the outer boundary only; at
    // grid resolution the tangency neck merges the two interiors, so the
    // restriction is built from the exact boundary circle instead.
    {
        GridCompactum left_ring = rasterize(ShapeSpec::circle({-1, 0}, 1, kBand), kH);
        auto left_circle = circle_samples({-1, 0}, 1, 4096);
        ExtensionOptions per;
        per.delta_domain = 0.1;
        per.epsilon_domain = 1e-6;
        per.hypothesis_samples = &left_circle;
        per.fit_samples = &left_circle;
        ExtensionReport v = check_extension_injectivity(f, left_ring, per);
        check("restriction injective on the left disk",
              v.criterion.holds && v.injective_on_hull.injective &&
                  v.falsification_events.empty(),
              "gap=" + num(v.criterion.gap));
        r.payload["left_hole"] = extension_report_json(v);
    }

    GridCompactum s_inf = outer_boundary_cells(K);
    RegionLabeling sl = complement_components(s_inf);
    r.payload["outer_boundary_holes"] = sl.hole_count();

    r.payload["extension"] = extension_report_json(ext);
    return r;
}

GalleryCaseResult case_g3() {
    GalleryCaseResult r;
    r.id = "G3";
    r.title = "annulus: z + 1/z is boundary-injective but not injective";
    Checker check{&r};

    AnnulusDemo demo = boundary_injectivity_gap_demo(0.5, 3.0, kH, 0.1);
    check("boundary margin positive", demo.boundary_margin > 0.01,
          "margin=" + num(demo.boundary_margin));
    check("f(i) equals f(-i)", demo.exact_pair_gap < 1e-9, "gap=" + num(demo.exact_pair_gap));
    check("interior collision pair found", demo.interior_witness.image_gap < 0.05,
          "image_gap=" + num(demo.interior_witness.image_gap));
    double prod = std::abs(demo.interior_witness.z1 * demo.interior_witness.z2 - 1.0);
    check("collision pair satisfies z*w = 1", prod < 0.05, "deviation=" + num(prod));

    AnnulusDemo thin = boundary_injectivity_gap_demo(0.9, 1.1, kH, 0.1);
    check("thin annulus boundary margin positive", thin.boundary_margin > 0,
          "margin=" + num(thin.boundary_margin));
    check("thin margin smaller", thin.boundary_margin < demo.boundary_margin);
    check("thin collision persists", thin.exact_pair_gap < 1e-9);

    bool rejected = false;
    try {
        boundary_injectivity_gap_demo(0.5, 2.0, kH, 0.1);
    } catch (const Error& e) {
        rejected = std::string(e.code()) == "BadRadii";
    }
    check("rR = 1 rejected", rejected);

    r.payload["margin"] = demo.boundary_margin;
    r.payload["thin_margin"] = thin.boundary_margin;
    r.payload["witness"] = {{"z1", complex_json(demo.interior_witness.z1)},
                            {"z2", complex_json(demo.interior_witness.z2)},
                            {"image_gap", demo.interior_witness.image_gap}};
    return r;
}

GalleryCaseResult case_g4() {
    GalleryCaseResult r;
    r.id = "G4";
    r.title = "clustering spiral: the argument is unbounded";
    Checker check{&r};

    const double t_max = 40 * kPi;
    ArgTrack track = arg_growth(ShapeSpec::SpiralKind::Clustering, t_max, 0.005);
    double sup_dev = 0, max_theta = -1e300;
    for (std::size_t k = 0; k < track.theta.size(); ++k) {
        sup_dev = std::max(sup_dev, std::abs(track.theta[k] - track.params[k]));
        max_theta = std::max(max_theta, track.theta[k]);
    }
    check("argument tracks t within pi/2", sup_dev <= kPi / 2 + 1e-9, "sup=" + num(sup_dev));
    check("argument grows beyond t_max - pi/2", max_theta >= t_max - kPi / 2 - 1e-9,
          "max=" + num(max_theta));

    // A short truncation is resolvable at h and polynomially convex. The
    // full truncation pinches the inter-turn channel below cell size, so
    // only its connectivity is asserted (the spiral clusters onto the
    // disk rim).
    ShapeSpec short_shape = ShapeSpec::union_of(
        {ShapeSpec::disk({-1, 0}, 1),
         ShapeSpec::spiral(ShapeSpec::SpiralKind::Clustering, 3 * kPi, kBand)});
    GridCompactum K_short = rasterize(short_shape, kH);
    RegionLabeling L_short = complement_components(K_short);
    check("short truncation is polynomially convex", L_short.hole_count() == 0,
          "holes=" + std::to_string(L_short.hole_count()));

    ShapeSpec full_shape = ShapeSpec::union_of(
        {ShapeSpec::disk({-1, 0}, 1),
         ShapeSpec::spiral(ShapeSpec::SpiralKind::Clustering, t_max, kBand)});
    GridCompactum K_full = rasterize(full_shape, kH);
    check("spiral clusters onto the disk (one component)",
          set_components(K_full).size() == 1);

    r.payload["sup_deviation"] = sup_dev;
    r.payload["max_argument"] = max_theta;
    r.payload["short_holes"] = L_short.hole_count();
    return r;
}

GalleryCaseResult case_g5() {
    GalleryCaseResult r;
    r.id = "G5";
    r.title = "accessible spiral: continuous logarithm in closed form";
    Checker check{&r};

    const double t_max = 40 * kPi;
    const double step = 0.005;
    SampledPath path;
    std::size_t n = static_cast<std::size_t>(std::ceil(t_max / step)) + 1;
    for (std::size_t k = 0; k < n; ++k) {
        double t = std::min(k * step, t_max);
        path.points.push_back(spiral_point(ShapeSpec::SpiralKind::Accessible, t));
        path.params.push_back(t);
    }
    auto L = continuous_log(path);
    // One global 2*pi*i shift is allowed.
    double shift = std::round((L[0].imag() - 0.0) / (2 * kPi));
    double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double t = path.params[k];
        Complex expected{-std::log1p(t), t + 2 * kPi * shift};
        worst = std::max(worst, std::abs(L[k] - expected));
    }
    check("log matches it - log(1+t) to 1e-9", worst <= 1e-9, "max_err=" + num(worst));

    ArgTrack track = arg_growth(ShapeSpec::SpiralKind::Accessible, t_max, step);
    double dev = 0;
    for (std::size_t k = 0; k < track.theta.size(); ++k)
        dev = std::max(dev, std::abs(track.theta[k] - track.params[k]));
    check("argument equals t", dev <= 1e-9, "max_dev=" + num(dev));

    GridCompactum K =
        rasterize(ShapeSpec::spiral(ShapeSpec::SpiralKind::Accessible, t_max, kBand), kH);
    RegionLabeling lab = complement_components(K);
    check("spiral is polynomially convex", lab.hole_count() == 0,
          "holes=" + std::to_string(lab.hole_count()));

    r.payload["log_error"] = worst;
    r.payload["arg_error"] = dev;
    return r;
}

GalleryCaseResult case_g6() {
    GalleryCaseResult r;
    r.id = "G6";
    r.title = "Darboux-Picard instance: z + 0.2 z^2 on the circle";
    Checker check{&r};

    GridCompactum K = rasterize(ShapeSpec::circle({0, 0}, 1, kBand), kH);
    auto f = [](Complex z) { return z + 0.2 * z * z; };

    ExtensionOptions opts;
    opts.delta_domain = 0.05;
    opts.epsilon_domain = 1e-4;
    opts.delta_hull = 0.05;
    opts.epsilon_hull = 1e-4;
    ExtensionReport ext = check_extension_injectivity(f, K, opts);

    std::size_t hull_cells = polynomial_hull(K).cell_count();
    check("hull sample count at least 1e4", hull_cells >= 10000,
          "cells=" + std::to_string(hull_cells));
    check("criterion true", ext.criterion.holds, "gap=" + num(ext.criterion.gap));
    check("criterion gap within 5 h_image", ext.criterion.gap <= ext.criterion.tolerance);
    check("extension injective on the disk", ext.injective_on_hull.injective);
    check("hole mapping is a single bijection",
          ext.hole_mapping_present && ext.holes.bijective && ext.holes.pairs.size() == 1);
    check("hull image identity within 5 h_image",
          ext.hull_image_gap <= 5 * ext.h_image, "gap=" + num(ext.hull_image_gap));
    check("verdicts consistent", ext.falsification_events.empty());

    r.payload["extension"] = extension_report_json(ext);
    return r;
}

struct GeneratorRow {
    std::string name;
    ShapeSpec shape;
    ComplexMap phi;
    const std::vector<Complex>* homeo_samples;
    bool expect_c, expect_a, expect_r, expect_p;
};

GalleryCaseResult case_g7() {
    GalleryCaseResult r;
    r.id = "G7";
    r.title = "generator verdict table";
    Checker check{&r};

    auto ident = [](Complex z) { return z; };
    auto square = [](Complex z) { return z * z; };
    auto cube_shift = [](Complex z) {
        Complex w = z + 2.0;
        return w * w * w;
    };
    auto f17 = [](Complex z) { return map_tangent_circles(z); };

    std::vector<Complex> exact17 = circle_samples({-1, 0}, 1, 4096);
    {
        auto right = circle_samples({2, 0}, 2, 8192);
        exact17.insert(exact17.end(), right.begin(), right.end());
    }

    ShapeSpec tangent = ShapeSpec::union_of(
        {ShapeSpec::circle({-1, 0}, 1, kBand), ShapeSpec::circle({2, 0}, 2, kBand)});

    std::vector<GeneratorRow> rows;
    rows.push_back({"segment, z", ShapeSpec::segment({0, 0}, {1, 0}, kBand), ident, nullptr,
                    true, true, true, true});
    rows.push_back({"circle, z", ShapeSpec::circle({0, 0}, 1, kBand), ident, nullptr,
                    false, false, false, true});
    rows.push_back({"disk, z", ShapeSpec::disk({0, 0}, 1), ident, nullptr,
                    false, true, true, true});
    rows.push_back({"annulus, z", ShapeSpec::annulus({0, 0}, 1, 2), ident, nullptr,
                    false, false, false, true});
    rows.push_back({"small disk, (z+2)^3", ShapeSpec::disk({0, 0}, 0.5), cube_shift, nullptr,
                    false, true, true, true});
    rows.push_back({"annulus, z^2", ShapeSpec::annulus({0, 0}, 1, 2), square, nullptr,
                    false, false, false, false});
    rows.push_back({"tangent circles, piecewise", tangent, f17, &exact17,
                    false, false, false, false});
    rows.push_back({"positive segment, z^2", ShapeSpec::segment({0.5, 0}, {1.5, 0}, kBand),
                    square, nullptr, true, true, true, true});

    json table = json::array();
    for (auto& row : rows) {
        double h = row.name == "tangent circles, piecewise" ? kH : 0.02;
        GridCompactum K = rasterize(row.shape, h);
        GeneratorOptions opts;
        opts.spec = &row.shape;
        opts.homeo_samples = row.homeo_samples;
        if (row.homeo_samples) opts.delta = 0.1;

        GeneratorVerdict vc = generates_c(row.phi, K, opts);
        GeneratorVerdict va = generates_a(row.phi, K, opts);
        GeneratorVerdict vr = generates_r(row.phi, K, opts);
        GeneratorVerdict vp = generates_p(row.phi, K, opts);

        check(row.name + ": C", vc.generates == row.expect_c);
        check(row.name + ": A", va.generates == row.expect_a);
        check(row.name + ": R", vr.generates == row.expect_r);
        check(row.name + ": P", vp.generates == row.expect_p);

        // Singly generated implies polynomially convex.
        for (const auto& v : {vc, va, vr})
            if (v.generates) check(row.name + ": corollary", v.complement_connected);

        // The monomial z generates P(K) for every K.
        GeneratorOptions id_opts;
        id_opts.spec = &row.shape;
        id_opts.phi_is_identity = true;
        GeneratorVerdict vz = generates_p(ident, K, id_opts);
        check(row.name + ": z generates P", vz.generates);

        table.push_back({{"case", row.name},
                         {"C", generator_verdict_json(vc)},
                         {"A", generator_verdict_json(va)},
                         {"R", generator_verdict_json(vr)},
                         {"P", generator_verdict_json(vp)}});
    }
    r.payload["table"] = table;
    return r;
}

}  // namespace

bool GalleryCaseResult::passed() const {
    for (const auto& a : assertions)
        if (!a.passed) return false;
    return true;
}

json GalleryCaseResult::to_json() const {
    json a = json::array();
    for (const auto& x : assertions)
        a.push_back({{"name", x.name}, {"passed", x.passed}, {"details", x.details}});
    return {{"id", id}, {"title", title}, {"passed", passed()}, {"assertions", a},
            {"payload", payload}};
}

std::vector<std::string> gallery_case_ids() {
    return {"G1", "G2", "G3", "G4", "G5", "G6", "G7"};
}

GalleryCaseResult run_gallery_case(const std::string& id) {
    if (id == "G1") return case_g1();
    if (id == "G2") return case_g2();
    if (id == "G3") return case_g3();
    if (id == "G4") return case_g4();
    if (id == "G5") return case_g5();
    if (id == "G6") return case_g6();
    if (id == "G7") return case_g7();
    fail("UnknownCase", "unknown gallery case '" + id + "' (G1..G7)");
}

}  // namespace compacta
