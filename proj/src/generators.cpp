#include "compacta/generators.hpp"

#include <algorithm>
#include <cmath>

#include "compacta/error.hpp"
#include "compacta/winding.hpp"

namespace compacta {

namespace {

constexpr double kMemberThreshold = 1e-6;

std::vector<Complex> sampled_cells(const GridCompactum& K, std::size_t cap = 60000) {
    auto cells = K.cell_centers();
    if (cells.size() <= cap) return cells;
    std::size_t stride = cells.size() / cap + 1;
    std::vector<Complex> out;
    for (std::size_t i = 0; i < cells.size(); i += stride) out.push_back(cells[i]);
    return out;
}

PMembership classify_curve(PMembership m) {
    if (m.curve.empty()) return m;
    m.final_residual = m.curve.back().residual;
    double mid = m.curve[m.curve.size() / 2].residual;
    if (m.final_residual < kMemberThreshold) {
        m.member = true;
        m.confidence = Confidence::High;
    } else if (m.final_residual > 10 * m.noise_floor && m.final_residual >= 0.5 * mid) {
        // Plateau across the top half of the schedule.
        m.member = false;
        m.confidence = Confidence::High;
    } else {
        m.member = false;
        m.confidence = Confidence::Low;
    }
    return m;
}

}  // namespace

bool grid_interior_empty(const GridCompactum& K) {
    for (int iy = 0; iy < K.height; ++iy) {
        for (int ix = 0; ix < K.width; ++ix) {
            if (!K.at(ix, iy)) continue;
            bool all = true;
            for (int dy = -1; dy <= 1 && all; ++dy)
                for (int dx = -1; dx <= 1 && all; ++dx)
                    if (!K.at(ix + dx, iy + dy)) all = false;
            if (all) return false;
        }
    }
    return true;
}

bool is_homeomorphism_onto_image(const ComplexMap& phi, const GridCompactum& K,
                                 const GeneratorOptions& opts) {
    // Continuity is granted; a continuous injection on a compactum is a
    // homeomorphism onto its image.
    double delta = opts.delta > 0 ? opts.delta : 5 * K.h;
    auto samples = opts.homeo_samples ? *opts.homeo_samples : sampled_cells(K);
    auto r = injective_on_samples(phi, samples, delta, opts.epsilon);
    return r.injective;
}

PMembership p_membership_heuristic(const std::vector<Complex>& points,
                                   const std::vector<Complex>& values,
                                   const std::vector<std::uint8_t>& fit_subset,
                                   const FitOptions& opts) {
    if (points.size() != values.size() || points.size() != fit_subset.size() || points.empty())
        fail("ParseError", "p_membership requires matching nonempty samples");
    std::vector<Complex> fit_pts, fit_vals;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (fit_subset[i]) {
            fit_pts.push_back(points[i]);
            fit_vals.push_back(values[i]);
        }
    }
    if (fit_pts.size() < 8) fail("ParseError", "too few outer-boundary samples for a fit");

    double vmax = 0;
    for (const auto& v : values) vmax = std::max(vmax, std::abs(v));

    PMembership m;
    m.noise_floor = 1e-12 * std::max(1.0, vmax);

    // Same sweep as fit_polynomial, residuals taken over all samples.
    FitSweep sweep = fit_sweep(fit_pts, fit_vals, opts);
    if (sweep.entries.empty())
        fail_numeric("IllConditioned", "no degree in the schedule met the conditioning limit");
    double best = 1e300;
    for (const auto& entry : sweep.entries) {
        double resid = 0;
        for (std::size_t i = 0; i < points.size(); ++i)
            resid = std::max(resid, std::abs(sweep.eval(entry, points[i]) - values[i]));
        best = std::min(best, resid);
        m.curve.push_back({entry.degree, best});
        if (best < kMemberThreshold / 100) break;
    }
    return classify_curve(std::move(m));
}

PMembership p_membership_heuristic(const ComplexMap& g, const GridCompactum& L,
                                   const FitOptions& opts) {
    auto cells = sampled_cells(L);
    std::vector<BoundaryCycle> cycles = outer_boundary(L);
    std::vector<Complex> points;
    std::vector<std::uint8_t> fit_subset;
    for (const auto& c : cycles) {
        auto v = resample_polyline(c.vertices, true,
                                   std::max<std::size_t>(c.vertices.size(), 512));
        for (const auto& z : v) {
            points.push_back(z);
            fit_subset.push_back(1);
        }
    }
    for (const auto& z : cells) {
        points.push_back(z);
        fit_subset.push_back(0);
    }
    std::vector<Complex> values(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) values[i] = g(points[i]);
    return p_membership_heuristic(points, values, fit_subset, opts);
}

namespace {

GeneratorVerdict base_verdict(Algebra alg, const ComplexMap& phi, const GridCompactum& K,
                              const GeneratorOptions& opts) {
    GeneratorVerdict v;
    v.algebra = alg;
    v.is_homeo = is_homeomorphism_onto_image(phi, K, opts);
    if (opts.spec && opts.spec->all_leaves_thin()) {
        // Band-rasterized curves have grid interior; the exact sets do not.
        v.interior_empty = true;
        v.interior_empty_exact = true;
    } else if (opts.spec && !opts.spec->all_leaves_thin()) {
        v.interior_empty = false;
        v.interior_empty_exact = true;
    } else {
        v.interior_empty = grid_interior_empty(K);
        v.interior_empty_exact = false;
    }
    v.complement_connected = complement_components(K).hole_count() == 0;
    return v;
}

}  // namespace

GeneratorVerdict generates_c(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts) {
    GeneratorVerdict v = base_verdict(Algebra::C, phi, K, opts);
    v.generates = v.is_homeo && v.interior_empty && v.complement_connected;
    return v;
}

GeneratorVerdict generates_a(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts) {
    GeneratorVerdict v = base_verdict(Algebra::A, phi, K, opts);
    v.generates = v.is_homeo && v.complement_connected;
    return v;
}

GeneratorVerdict generates_r(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts) {
    GeneratorVerdict v = base_verdict(Algebra::R, phi, K, opts);
    v.generates = v.is_homeo && v.complement_connected;
    return v;
}

GeneratorVerdict generates_p(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts) {
    GeneratorVerdict v = base_verdict(Algebra::P, phi, K, opts);
    if (opts.phi_is_identity) {
        PMembership m;
        m.member = true;
        m.exact = true;
        m.confidence = Confidence::High;
        v.inverse_in_p = m;
        v.generates = v.is_homeo;
        return v;
    }
    if (!v.is_homeo) {
        v.generates = false;
        return v;
    }

    // Inverse samples: phi(z) -> z, fitted on the outer boundary of the
    // image raster, residuals over the whole image.
    auto cells = sampled_cells(K);
    std::vector<Complex> images(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) images[i] = phi(cells[i]);
    double h_image = image_resolution(K, phi);
    GridCompactum raster = rasterize_points(images, h_image);
    GridCompactum rim = outer_boundary_cells(raster);

    std::vector<std::uint8_t> fit_subset(cells.size(), 0);
    std::size_t rim_hits = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        int ix, iy;
        rim.locate(images[i], ix, iy);
        bool near_rim = false;
        for (int dy = -1; dy <= 1 && !near_rim; ++dy)
            for (int dx = -1; dx <= 1 && !near_rim; ++dx)
                if (rim.at(ix + dx, iy + dy)) near_rim = true;
        if (near_rim) {
            fit_subset[i] = 1;
            ++rim_hits;
        }
    }
    if (rim_hits < 8) fail_numeric("IllConditioned", "no samples reach the image outer boundary");

    PMembership m = p_membership_heuristic(images, cells, fit_subset, opts.fit);
    v.inverse_in_p = m;
    v.generates = v.is_homeo && m.member;
    v.confidence = m.confidence;
    return v;
}

}  // namespace compacta
