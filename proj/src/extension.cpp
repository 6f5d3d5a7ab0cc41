#include "compacta/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include <Eigen/Dense>

#include "compacta/error.hpp"
#include "compacta/winding.hpp"

namespace compacta {

namespace {

constexpr double kInf = 1e300;

std::vector<int> degree_schedule(int degree_max) {
    std::vector<int> degs;
    for (int d = 1; d <= std::min(16, degree_max); ++d) degs.push_back(d);
    for (int d = 18; d <= std::min(40, degree_max); d += 2) degs.push_back(d);
    for (int d = 44; d <= degree_max; d += 4) degs.push_back(d);
    if (degs.empty() || degs.back() != degree_max)
        if (degree_max > 16) degs.push_back(degree_max);
    return degs;
}

std::vector<Complex> eval_all(const ComplexMap& f, const std::vector<Complex>& pts) {
    std::vector<Complex> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f(pts[i]);
    return out;
}

// Outer boundary vertices, resampled proportionally to cycle length.
std::vector<Complex> outer_boundary_samples(const GridCompactum& K, std::size_t target) {
    auto cycles = outer_boundary(K);
    double total = 0;
    for (const auto& c : cycles) total += c.length();
    std::vector<Complex> pts;
    for (const auto& c : cycles) {
        std::size_t want = c.vertices.size();
        if (total > 0 && target > 0) {
            auto share = static_cast<std::size_t>(
                std::ceil(static_cast<double>(target) * c.length() / total));
            want = std::max<std::size_t>(64, share);
        }
        auto v = want == c.vertices.size() ? c.vertices : resample_polyline(c.vertices, true, want);
        pts.insert(pts.end(), v.begin(), v.end());
    }
    return pts;
}

std::int64_t bucket_key(double x, double y, double r) {
    auto qx = static_cast<std::int64_t>(std::floor(x / r));
    auto qy = static_cast<std::int64_t>(std::floor(y / r));
    return qx * 2654435761LL + qy;
}

// One bucket pass: all pairs with image gap < radius, domain gap > delta,
// scanned in ascending index order.
bool scan_pairs(const std::vector<Complex>& zs, const std::vector<Complex>& ws, double delta,
                double radius, FarPairGap& out) {
    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    buckets.reserve(ws.size() * 2);
    const double d2 = delta * delta;
    bool found = false;
    double best = kInf;
    auto consider = [&](int j, int i) {
        Complex dw = ws[i] - ws[j];
        double g2 = std::norm(dw);
        if (g2 >= radius * radius) return;
        if (std::norm(zs[i] - zs[j]) <= d2) return;
        double gap = std::sqrt(g2);
        CollisionWitness w{zs[j], zs[i], ws[j], ws[i], std::abs(zs[i] - zs[j]), gap};
        if (!found || gap < best) {
            found = true;
            best = gap;
            out.best = w;
        }
        auto pos = std::lower_bound(out.top.begin(), out.top.end(), gap,
                                    [](const CollisionWitness& a, double g) { return a.image_gap < g; });
        out.top.insert(pos, w);
        if (out.top.size() > 8) out.top.pop_back();
    };
    for (int i = 0; i < static_cast<int>(ws.size()); ++i) {
        auto qx = static_cast<std::int64_t>(std::floor(ws[i].real() / radius));
        auto qy = static_cast<std::int64_t>(std::floor(ws[i].imag() / radius));
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            for (std::int64_t dx = -1; dx <= 1; ++dx) {
                auto it = buckets.find((qx + dx) * 2654435761LL + (qy + dy));
                if (it == buckets.end()) continue;
                for (int j : it->second) consider(j, i);
            }
        }
        buckets[bucket_key(ws[i].real(), ws[i].imag(), radius)].push_back(i);
    }
    out.found = found;
    return found;
}

}  // namespace

FarPairGap min_far_pair_gap(const std::vector<Complex>& zs, const std::vector<Complex>& ws,
                            double delta, double radius_cap) {
    FarPairGap out;
    if (zs.size() != ws.size()) fail("ParseError", "sample/image size mismatch");
    if (zs.size() < 2 || !(radius_cap > 0)) return out;
    double radius = radius_cap / 1024;
    Box bb = Box::of(ws);
    double floor_r = std::max(bb.diagonal() * 1e-9, 1e-12);
    radius = std::max(radius, floor_r);
    while (true) {
        out.top.clear();
        if (scan_pairs(zs, ws, delta, radius, out)) return out;
        if (radius >= radius_cap) return out;
        radius = std::min(radius * 4, radius_cap);
    }
}

InjectivityResult injective_on_samples(const std::vector<Complex>& zs,
                                       const std::vector<Complex>& ws, double delta,
                                       double epsilon) {
    if (zs.size() != ws.size() || zs.empty()) fail("ParseError", "sample/image size mismatch");
    if (!(delta > 0) || !(epsilon > 0)) fail("BadTolerances", "delta and epsilon must be positive");
    Box bb = Box::of(ws);
    if (bb.diagonal() > 0 && epsilon >= 0.1 * bb.diagonal())
        fail("BadTolerances", "epsilon is comparable to the image extent; the test is vacuous");

    InjectivityResult r;
    r.delta = delta;
    r.epsilon = epsilon;
    FarPairGap far = min_far_pair_gap(zs, ws, delta, epsilon);
    if (far.found && far.best.image_gap < epsilon) {
        r.injective = false;
        r.witnesses = far.top;
    }
    return r;
}

InjectivityResult injective_on_samples(const ComplexMap& f, const std::vector<Complex>& pts,
                                       double delta, double epsilon) {
    return injective_on_samples(pts, eval_all(f, pts), delta, epsilon);
}

Complex PolyFit::eval(Complex z) const {
    Complex zt = (z - center) / scale;
    Complex acc{0, 0};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * zt + *it;
    return acc;
}

std::vector<Complex> PolyFit::coefficients_in_z() const {
    // (z - c)^k / s^k expanded iteratively; fine for report-sized degrees.
    std::vector<Complex> out(coefficients.size(), Complex{0, 0});
    std::vector<Complex> pw{Complex{1, 0}};  // ((z - c)/s)^k in z basis
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        for (std::size_t m = 0; m < pw.size(); ++m) out[m] += coefficients[k] * pw[m];
        if (k + 1 < coefficients.size()) {
            std::vector<Complex> next(pw.size() + 1, Complex{0, 0});
            for (std::size_t m = 0; m < pw.size(); ++m) {
                next[m + 1] += pw[m] / scale;
                next[m] -= pw[m] * center / scale;
            }
            pw = std::move(next);
        }
    }
    return out;
}

Complex FitSweep::eval(const Entry& e, Complex z) const {
    Complex zt = (z - center) / scale;
    Complex acc{0, 0};
    for (auto it = e.coefficients.rbegin(); it != e.coefficients.rend(); ++it)
        acc = acc * zt + *it;
    return acc;
}

FitSweep fit_sweep(const std::vector<Complex>& points, const std::vector<Complex>& values,
                   const FitOptions& opts) {
    if (points.size() != values.size() || points.empty())
        fail("ParseError", "fit requires matching nonempty samples");

    Box bb = Box::of(points);
    FitSweep sweep;
    sweep.center = bb.center();
    sweep.scale = std::max({bb.width() / 2, bb.height() / 2, 1e-12});

    // Even indices fit; odd indices are left for the caller's residual.
    std::vector<Complex> zf, ff;
    for (std::size_t i = 0; i < points.size(); i += 2) {
        zf.push_back((points[i] - sweep.center) / sweep.scale);
        ff.push_back(values[i]);
    }

    const int max_by_samples = static_cast<int>(points.size() / 4) - 1;
    const int degree_cap = std::max(1, std::min(opts.degree_max, max_by_samples));

    using CMat = Eigen::MatrixXcd;
    using CVec = Eigen::VectorXcd;
    const auto m = static_cast<Eigen::Index>(zf.size());

    CMat V(m, degree_cap + 1);
    for (Eigen::Index i = 0; i < m; ++i) V(i, 0) = Complex{1, 0};
    int built = 0;

    for (int d : degree_schedule(degree_cap)) {
        while (built < d) {
            ++built;
            for (Eigen::Index i = 0; i < m; ++i) V(i, built) = V(i, built - 1) * zf[i];
        }
        Eigen::VectorXd colscale(d + 1);
        for (int c = 0; c <= d; ++c) {
            double s = V.col(c).cwiseAbs().maxCoeff();
            colscale(c) = s > 0 ? s : 1.0;
        }
        CMat As = V.leftCols(d + 1) * colscale.cwiseInverse().asDiagonal();
        Eigen::ColPivHouseholderQR<CMat> qr(As);
        Eigen::VectorXd rdiag = qr.matrixR().diagonal().cwiseAbs().head(d + 1);
        double rmax = rdiag.maxCoeff();
        double rmin = rdiag.minCoeff();
        double cond = rmin > 0 ? rmax / rmin : kInf;
        if (cond > opts.cond_limit) continue;

        CVec rhs = Eigen::Map<const CVec>(ff.data(), m);
        CVec coef = qr.solve(rhs);
        coef = colscale.cwiseInverse().asDiagonal() * coef;

        FitSweep::Entry entry;
        entry.degree = d;
        entry.conditioning = cond;
        entry.coefficients.assign(coef.data(), coef.data() + d + 1);
        sweep.entries.push_back(std::move(entry));
    }
    return sweep;
}

PolyFit fit_polynomial(const std::vector<Complex>& points, const std::vector<Complex>& values,
                       const FitOptions& opts) {
    FitSweep sweep = fit_sweep(points, values, opts);
    if (sweep.entries.empty())
        fail_numeric("IllConditioned", "no degree in the schedule met the conditioning limit");

    std::vector<Complex> zh, fh;
    for (std::size_t i = 1; i < points.size(); i += 2) {
        zh.push_back(points[i]);
        fh.push_back(values[i]);
    }
    if (zh.empty()) {
        zh = points;
        fh = values;
    }
    double fmax = 0;
    for (const auto& v : values) fmax = std::max(fmax, std::abs(v));

    PolyFit best;
    best.center = sweep.center;
    best.scale = sweep.scale;
    bool have_any = false;
    double best_resid = kInf;
    for (const auto& entry : sweep.entries) {
        double resid = 0;
        for (std::size_t i = 0; i < zh.size(); ++i)
            resid = std::max(resid, std::abs(sweep.eval(entry, zh[i]) - fh[i]));
        if (!have_any || resid < best_resid) {
            have_any = true;
            best_resid = resid;
            best.degree = entry.degree;
            best.residual = resid;
            best.conditioning = entry.conditioning;
            best.coefficients = entry.coefficients;
        }
        best.sweep.push_back({entry.degree, best_resid, entry.conditioning});
        if (best_resid <= opts.early_stop * std::max(1.0, fmax)) break;
    }
    return best;
}

double image_resolution(const GridCompactum& K, const ComplexMap& f) {
    std::vector<double> steps;
    for (int iy = 0; iy < K.height; ++iy) {
        for (int ix = 0; ix < K.width; ++ix) {
            if (!K.at(ix, iy)) continue;
            Complex w0 = f(K.cell_center(ix, iy));
            if (K.at(ix + 1, iy)) steps.push_back(std::abs(f(K.cell_center(ix + 1, iy)) - w0));
            if (K.at(ix, iy + 1)) steps.push_back(std::abs(f(K.cell_center(ix, iy + 1)) - w0));
        }
    }
    if (steps.empty()) return K.h;
    std::size_t q = steps.size() > 1 ? (steps.size() - 1) * 99 / 100 : 0;
    std::nth_element(steps.begin(), steps.begin() + q, steps.end());
    double step99 = steps[q];
    return std::max(2 * step99, 1e-9);
}

GridCompactum rasterize_points_on_frame(const std::vector<Complex>& pts,
                                        const GridCompactum& frame) {
    GridCompactum g = frame;
    g.mask.assign(static_cast<std::size_t>(g.width) * g.height, 0);
    for (const auto& p : pts) {
        int ix, iy;
        g.locate(p, ix, iy);
        if (g.contains(ix, iy)) g.mask[static_cast<std::size_t>(iy) * g.width + ix] = 1;
    }
    return g;
}

GridCompactum rasterize_points(const std::vector<Complex>& pts, double h_image) {
    if (pts.empty()) fail("EmptySet", "cannot rasterize an empty point set");
    if (!(h_image > 0)) fail("ParseError", "image resolution must be positive");
    Box bb = Box::of(pts);
    GridCompactum g;
    g.h = h_image;
    const int margin = 2;
    int ix0 = static_cast<int>(std::floor(bb.xmin / h_image)) - margin;
    int iy0 = static_cast<int>(std::floor(bb.ymin / h_image)) - margin;
    int ix1 = static_cast<int>(std::ceil(bb.xmax / h_image)) + margin;
    int iy1 = static_cast<int>(std::ceil(bb.ymax / h_image)) + margin;
    g.origin = Complex(ix0 * h_image, iy0 * h_image);
    g.width = ix1 - ix0 + 1;
    g.height = iy1 - iy0 + 1;
    if (static_cast<std::int64_t>(g.width) * g.height > 80'000'000)
        fail_numeric("ResolutionTooCoarse", "image raster would exceed the cell budget");
    g.mask.assign(static_cast<std::size_t>(g.width) * g.height, 0);
    return rasterize_points_on_frame(pts, g);
}

namespace {

// Squared distance (cells) to the nearest set cell; kInf on empty input.
std::vector<double> raster_edt(const GridCompactum& G);

}  // namespace

double raster_hausdorff(const GridCompactum& A, const GridCompactum& B) {
    if (A.width != B.width || A.height != B.height || A.origin != B.origin || A.h != B.h)
        fail("ParseError", "raster_hausdorff requires a shared frame");
    auto da = raster_edt(A);
    auto db = raster_edt(B);
    double worst = 0;
    for (std::size_t i = 0; i < A.mask.size(); ++i) {
        if (A.mask[i]) worst = std::max(worst, db[i]);
        if (B.mask[i]) worst = std::max(worst, da[i]);
    }
    return std::sqrt(worst) * A.h;
}

CriterionResult outer_boundary_criterion(const ComplexMap& f, const GridCompactum& K,
                                         double h_image) {
    auto s_inf = outer_boundary_samples(K, 2048);
    auto image_of_s_inf = eval_all(f, s_inf);

    auto domain_cells = K.cell_centers();
    auto image_cells = eval_all(f, domain_cells);

    CriterionResult r;
    r.h_image = h_image > 0 ? h_image : image_resolution(K, f);
    GridCompactum raster = rasterize_points(image_cells, r.h_image);
    GridCompactum hull = polynomial_hull(raster);

    std::vector<Complex> outer_pts;
    for (const auto& c : outer_boundary(hull)) {
        // hull is already polynomially convex; trace its components
        outer_pts.insert(outer_pts.end(), c.vertices.begin(), c.vertices.end());
    }
    r.gap = hausdorff(image_of_s_inf, outer_pts);
    r.tolerance = 5 * r.h_image;
    r.holds = r.gap <= r.tolerance;
    return r;
}

GridCompactum outer_boundary_cells(const GridCompactum& K) {
    RegionLabeling labeling = complement_components(K);
    GridCompactum hull = polynomial_hull(K, labeling);
    std::vector<std::uint8_t> cells(hull.mask.size(), 0);
    for (int iy = 0; iy < hull.height; ++iy) {
        for (int ix = 0; ix < hull.width; ++ix) {
            if (!hull.at(ix, iy)) continue;
            bool exposed = false;
            for (int dy = -1; dy <= 1 && !exposed; ++dy)
                for (int dx = -1; dx <= 1 && !exposed; ++dx) {
                    int nx = ix + dx, ny = iy + dy;
                    if (!hull.contains(nx, ny) ||
                        (!hull.at(nx, ny) &&
                         labeling.at(nx, ny) == RegionLabeling::kUnbounded))
                        exposed = true;
                }
            if (exposed) cells[static_cast<std::size_t>(iy) * hull.width + ix] = 1;
        }
    }
    return hull.with_mask(std::move(cells));
}

namespace {

HoleMapping map_holes(const PolyFit& extension, const GridCompactum& K, double h_image) {
    HoleMapping out;
    GridCompactum s_inf = outer_boundary_cells(K);
    RegionLabeling s_labeling = complement_components(s_inf);

    auto s_inf_pts = s_inf.cell_centers();
    std::vector<Complex> image_pts;
    image_pts.reserve(s_inf_pts.size());
    for (const auto& z : s_inf_pts) image_pts.push_back(extension.eval(z));
    GridCompactum image_raster = rasterize_points(image_pts, h_image);
    RegionLabeling image_labeling = complement_components(image_raster);
    out.image_holes = image_labeling.hole_count();

    auto edt = raster_edt(image_raster);
    const double clearance = 3.0;  // cells

    for (int j = 0; j < s_labeling.hole_count(); ++j) {
        Complex w = extension.eval(s_labeling.holes[j].representative);
        int ix, iy;
        image_raster.locate(w, ix, iy);
        if (!image_raster.contains(ix, iy))
            fail_numeric("AmbiguousMapping", "mapped representative leaves the image frame");
        std::size_t idx = static_cast<std::size_t>(iy) * image_raster.width + ix;
        if (edt[idx] < clearance * clearance)
            fail_numeric("AmbiguousMapping",
                         "mapped representative within 3 image cells of the image boundary");
        int target = image_labeling.hole_index(ix, iy);
        if (target < 0)
            fail_numeric("AmbiguousMapping", "mapped representative not inside an image hole");
        out.pairs.emplace_back(j, target);
    }

    std::vector<int> seen(image_labeling.hole_count(), 0);
    for (const auto& [from, to] : out.pairs) ++seen[static_cast<std::size_t>(to)];
    out.bijective = static_cast<int>(out.pairs.size()) == image_labeling.hole_count() &&
                    std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    return out;
}

}  // namespace

ExtensionReport check_extension_injectivity(const ComplexMap& f, const GridCompactum& K,
                                            const ExtensionOptions& opts) {
    ExtensionReport rep;
    const double h = K.h;
    const double delta_dom = opts.delta_domain > 0 ? opts.delta_domain : 5 * h;

    auto domain_cells = K.cell_centers();
    if (domain_cells.size() > opts.max_hull_samples) {
        std::size_t stride = domain_cells.size() / opts.max_hull_samples + 1;
        std::vector<Complex> thin;
        for (std::size_t i = 0; i < domain_cells.size(); i += stride) thin.push_back(domain_cells[i]);
        domain_cells = std::move(thin);
    }

    const std::vector<Complex>& hyp =
        opts.hypothesis_samples ? *opts.hypothesis_samples : domain_cells;
    rep.injective_on_K = injective_on_samples(f, hyp, delta_dom, opts.epsilon_domain);
    if (!rep.injective_on_K.injective)
        fail("HypothesisFailed", "f is not injective on the K samples at the given tolerances");

    auto fit_pts =
        opts.fit_samples ? *opts.fit_samples : outer_boundary_samples(K, opts.fit.target_samples);
    rep.fit = fit_polynomial(fit_pts, eval_all(f, fit_pts), opts.fit);

    rep.h_image = image_resolution(K, f);
    rep.criterion = outer_boundary_criterion(f, K, rep.h_image);

    GridCompactum hull = polynomial_hull(K);
    auto hull_cells = hull.cell_centers();
    if (hull_cells.size() > opts.max_hull_samples) {
        std::size_t stride = hull_cells.size() / opts.max_hull_samples + 1;
        std::vector<Complex> thin;
        for (std::size_t i = 0; i < hull_cells.size(); i += stride) thin.push_back(hull_cells[i]);
        hull_cells = std::move(thin);
    }
    std::vector<Complex> hull_images;
    hull_images.reserve(hull_cells.size());
    for (const auto& z : hull_cells) hull_images.push_back(rep.fit.eval(z));

    const double delta_hull = opts.delta_hull > 0 ? opts.delta_hull : 5 * h;
    // The default image tolerance is capped below delta times the
    // image/domain scale ratio; otherwise pairs just past delta collide
    // vacuously for near-isometric extensions.
    double eps_hull = opts.epsilon_hull;
    if (!(eps_hull > 0)) {
        double scale_ratio =
            Box::of(hull_images).diagonal() / std::max(Box::of(hull_cells).diagonal(), 1e-12);
        eps_hull = std::min(rep.fit.residual + 5 * rep.h_image,
                            0.45 * delta_hull * std::max(scale_ratio, 1e-12));
        eps_hull = std::max(eps_hull, 1e-14 * (1 + Box::of(hull_images).diagonal()));
    }
    rep.injective_on_hull = injective_on_samples(hull_cells, hull_images, delta_hull, eps_hull);

    // Hull-image identity on a shared image frame.
    {
        auto k_images = eval_all(f, domain_cells);
        std::vector<Complex> both = hull_images;
        both.insert(both.end(), k_images.begin(), k_images.end());
        GridCompactum frame = rasterize_points(both, rep.h_image);
        GridCompactum a = rasterize_points_on_frame(hull_images, frame);
        GridCompactum b = polynomial_hull(rasterize_points_on_frame(k_images, frame));
        rep.hull_image_gap = raster_hausdorff(a, b);
    }

    if (rep.criterion.holds) {
        rep.holes = map_holes(rep.fit, K, rep.h_image);
        rep.hole_mapping_present = true;
        if (!rep.holes.bijective)
            rep.falsification_events.push_back(
                "hole mapping is not a bijection although the criterion holds");
    }

    if (rep.criterion.holds != rep.injective_on_hull.injective)
        rep.falsification_events.push_back(
            "outer-boundary criterion verdict disagrees with numeric extension injectivity");
    return rep;
}

HoleMapping hole_mapping(const ComplexMap& f, const GridCompactum& K,
                         const ExtensionOptions& opts) {
    ExtensionReport rep = check_extension_injectivity(f, K, opts);
    if (!rep.criterion.holds)
        fail("NotInjectiveCase", "hole mapping requires the outer-boundary criterion to hold");
    return rep.holes;
}

PerHoleVerdict regular_hole_injectivity(const ComplexMap& f, const GridCompactum& K,
                                        int hole_index, const ExtensionOptions& opts) {
    PerHoleVerdict v;
    v.hole_index = hole_index;
    RegionLabeling labeling = complement_components(K);
    if (hole_index < 0 || hole_index >= labeling.hole_count())
        fail("NoSuchHole", "compactum has " + std::to_string(labeling.hole_count()) +
                               " holes; index " + std::to_string(hole_index) + " invalid");
    v.regular = regular_hole(K, labeling, hole_index);
    if (!v.regular)
        fail("NotRegular", "hole " + std::to_string(hole_index) +
                               " is not regular; the theorem asserts nothing here");

    // Restricted compactum: the cells of K around this hole. For a
    // regular hole its hull is the closed hole.
    auto ring = hole_boundary_cells(K, labeling, hole_index);
    GridCompactum KG = K.with_mask(std::move(ring));
    v.report = check_extension_injectivity(f, KG, opts);
    v.injective = v.report.injective_on_hull.injective;
    v.falsification = !v.injective;
    return v;
}

AnnulusDemo boundary_injectivity_gap_demo(double r, double R, double h, double boundary_delta) {
    if (!(r > 0 && r < 1 && R > 1)) fail("BadRadii", "demo requires 0 < r < 1 < R");
    if (std::abs(r * R - 1) < 1e-6) fail("BadRadii", "rR = 1 is excluded by hypothesis");

    AnnulusDemo demo;
    demo.r = r;
    demo.R = R;
    demo.boundary_delta = boundary_delta;
    auto f = [](Complex z) { return z + 1.0 / z; };

    GridCompactum K = rasterize(ShapeSpec::annulus(Complex{0, 0}, r, R), h);
    std::vector<Complex> boundary_pts;
    for (const auto& comp : set_components(K))
        for (const auto& c : trace_boundary(K, comp, true)) {
            auto v = resample_polyline(c.vertices, true,
                                       std::max<std::size_t>(c.vertices.size(), 2048));
            boundary_pts.insert(boundary_pts.end(), v.begin(), v.end());
        }
    std::vector<Complex> boundary_images;
    boundary_images.reserve(boundary_pts.size());
    for (const auto& z : boundary_pts) boundary_images.push_back(f(z));

    Box bb = Box::of(boundary_images);
    FarPairGap far = min_far_pair_gap(boundary_pts, boundary_images, boundary_delta,
                                      std::max(bb.diagonal(), 1.0));
    demo.boundary_margin = far.found ? far.best.image_gap : 0;

    auto cells = K.cell_centers();
    std::vector<Complex> cell_images;
    cell_images.reserve(cells.size());
    for (const auto& z : cells) cell_images.push_back(f(z));
    FarPairGap inner = min_far_pair_gap(cells, cell_images, 0.5, std::max(bb.diagonal(), 1.0));
    if (inner.found) {
        demo.interior_witness = inner.best;
    }
    demo.exact_pair_gap = std::abs(f(Complex{0, 1}) - f(Complex{0, -1}));
    return demo;
}

namespace {

void edt_pass(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
              std::vector<double>& zbuf) {
    const int n = static_cast<int>(f.size());
    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] >= kInf) continue;
        double sq = 0;
        while (k >= 0) {
            sq = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
            if (sq <= zbuf[k])
                --k;
            else
                break;
        }
        if (k < 0) {
            k = 0;
            v[0] = q;
            zbuf[0] = -kInf;
        } else {
            ++k;
            v[k] = q;
            zbuf[k] = sq;
        }
        zbuf[k + 1] = kInf;
    }
    if (k < 0) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    int kk = 0;
    for (int q = 0; q < n; ++q) {
        while (zbuf[kk + 1] < q) ++kk;
        double dv = q - v[kk];
        d[q] = dv * dv + f[v[kk]];
    }
}

std::vector<double> raster_edt(const GridCompactum& G) {
    const int w = G.width, h = G.height;
    std::vector<double> dist(static_cast<std::size_t>(w) * h);
    for (int iy = 0; iy < h; ++iy)
        for (int ix = 0; ix < w; ++ix)
            dist[static_cast<std::size_t>(iy) * w + ix] = G.at(ix, iy) ? 0.0 : kInf;
    int n = std::max(w, h);
    std::vector<double> f(n), d(n), zbuf(n + 1);
    std::vector<int> v(n);
    for (int ix = 0; ix < w; ++ix) {
        f.resize(h);
        d.resize(h);
        for (int iy = 0; iy < h; ++iy) f[iy] = dist[static_cast<std::size_t>(iy) * w + ix];
        edt_pass(f, d, v, zbuf);
        for (int iy = 0; iy < h; ++iy) dist[static_cast<std::size_t>(iy) * w + ix] = d[iy];
    }
    for (int iy = 0; iy < h; ++iy) {
        f.resize(w);
        d.resize(w);
        for (int ix = 0; ix < w; ++ix) f[ix] = dist[static_cast<std::size_t>(iy) * w + ix];
        edt_pass(f, d, v, zbuf);
        for (int ix = 0; ix < w; ++ix) dist[static_cast<std::size_t>(iy) * w + ix] = d[ix];
    }
    return dist;
}

}  // namespace

}  // namespace compacta
