#include "compacta/rouche.hpp"

#include <algorithm>
#include <cmath>

#include "compacta/error.hpp"
#include "compacta/winding.hpp"

namespace compacta {

namespace {

std::vector<BoundaryCycle> region_boundary(const GridCompactum& region) {
    std::vector<BoundaryCycle> cycles;
    for (const auto& comp : set_components(region))
        for (auto& c : trace_boundary_unchecked(region, comp, true)) cycles.push_back(std::move(c));
    return cycles;
}

std::vector<std::vector<Complex>> densify_cycles(const std::vector<BoundaryCycle>& cycles,
                                                 std::size_t min_total) {
    double total_len = 0;
    for (const auto& c : cycles) total_len += c.length();
    std::vector<std::vector<Complex>> out;
    for (const auto& c : cycles) {
        std::size_t want = c.vertices.size();
        if (total_len > 0) {
            auto share = static_cast<std::size_t>(
                std::ceil(static_cast<double>(min_total) * c.length() / total_len));
            want = std::max(want, std::max<std::size_t>(share, 64));
        }
        out.push_back(want > c.vertices.size() ? resample_polyline(c.vertices, true, want)
                                               : c.vertices);
    }
    return out;
}

}  // namespace

Complex MeromorphicSpec::eval(Complex z) const {
    Complex v = analytic_factor ? analytic_factor(z) : Complex{1, 0};
    for (const auto& q : zeros) v *= std::pow(z - q.location, static_cast<double>(q.multiplicity));
    for (const auto& q : poles) v /= std::pow(z - q.location, static_cast<double>(q.multiplicity));
    return v;
}

ComplexMap MeromorphicSpec::as_map() const {
    MeromorphicSpec copy = *this;
    return [copy](Complex z) { return copy.eval(z); };
}

void MeromorphicSpec::validate() const {
    auto all = zeros;
    all.insert(all.end(), poles.begin(), poles.end());
    for (const auto& q : all)
        if (q.multiplicity < 1) fail("ParseError", "multiplicities must be >= 1");
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i].location == all[j].location)
                fail("ParseError", "zero/pole locations must be distinct after cancellation");
}

int count_via_argument(const ComplexMap& f, const GridCompactum& region,
                       const CountOptions& opts) {
    auto cycles = region_boundary(region);
    auto sampled = densify_cycles(cycles, opts.min_total_samples);
    int total = 0;
    for (const auto& pts : sampled) {
        std::vector<Complex> vals(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            vals[i] = f(pts[i]);
            double m = std::abs(vals[i]);
            if (!(m > opts.zero_tol))
                fail_numeric("ZeroOnBoundary", "|f| below zero tolerance on a boundary sample");
            if (!(m < opts.pole_tol))
                fail_numeric("PoleOnBoundary", "|f| above pole tolerance on a boundary sample");
        }
        total += winding_number(SampledPath::closed_path(std::move(vals)), Complex{0, 0});
    }
    return total;
}

CountResult oracle_count(const MeromorphicSpec& spec, const GridCompactum& region) {
    spec.validate();
    auto cycles = region_boundary(region);
    const double clearance = 3 * region.h;

    auto near_boundary = [&](Complex z) {
        for (const auto& c : cycles)
            for (const auto& v : c.vertices)
                if (std::abs(z - v) < clearance) return true;
        return false;
    };
    auto inside = [&](Complex z) {
        int ix, iy;
        region.locate(z, ix, iy);
        return region.at(ix, iy);
    };

    CountResult r;
    for (const auto& q : spec.zeros) {
        if (near_boundary(q.location))
            fail_numeric("OnBoundary", "listed zero within 3h of the region boundary");
        if (inside(q.location)) r.zeros += q.multiplicity;
    }
    for (const auto& q : spec.poles) {
        if (near_boundary(q.location))
            fail_numeric("OnBoundary", "listed pole within 3h of the region boundary");
        if (inside(q.location)) r.poles += q.multiplicity;
    }
    r.n_minus_p = r.zeros - r.poles;
    return r;
}

RoucheVerdict homotopic_rouche_check(const MeromorphicSpec& f, const MeromorphicSpec& g,
                                     const GridCompactum& K, const CountOptions& opts) {
    RoucheVerdict v;
    auto fm = f.as_map();
    auto gm = g.as_map();

    CountResult of, og;
    bool boundary_ok = true;
    try {
        of = oracle_count(f, K);
        og = oracle_count(g, K);
        v.count_f = count_via_argument(fm, K, opts);
        v.count_g = count_via_argument(gm, K, opts);
    } catch (const Error&) {
        boundary_ok = false;
    }
    v.boundary_admissible = boundary_ok;
    if (!boundary_ok) return v;  // hypothesis violated; no assertion made

    RegionLabeling labeling = complement_components(K);
    CanonicalBoundary boundary = canonical_boundary(K, labeling);
    try {
        v.class_f = homotopy_class(fm, boundary).windings;
        v.class_g = homotopy_class(gm, boundary).windings;
    } catch (const Error&) {
        v.boundary_admissible = false;
        return v;
    }
    v.classes_equal = v.class_f == v.class_g;
    v.hypothesis_holds = v.boundary_admissible && v.classes_equal;
    v.counts_equal = v.count_f == v.count_g;
    v.argument_vs_oracle_consistent = v.count_f == of.n_minus_p && v.count_g == og.n_minus_p;
    v.falsification = v.hypothesis_holds && !v.counts_equal;
    return v;
}

MeromorphicSpec random_meromorphic_spec(std::mt19937& rng, const Box& range,
                                        const GridCompactum& region, double clearance,
                                        int max_points, int max_multiplicity) {
    auto cycles = region_boundary(region);
    auto clear_of_boundary = [&](Complex z) {
        for (const auto& c : cycles)
            for (const auto& v : c.vertices)
                if (std::abs(z - v) < clearance) return false;
        return true;
    };
    std::uniform_real_distribution<double> ux(range.xmin, range.xmax);
    std::uniform_real_distribution<double> uy(range.ymin, range.ymax);
    std::uniform_int_distribution<int> np(0, max_points);
    std::uniform_int_distribution<int> um(1, max_multiplicity);

    MeromorphicSpec spec;
    auto draw_points = [&](std::vector<MeromorphicSpec::Order>& into, int count) {
        while (static_cast<int>(into.size()) < count) {
            Complex z{ux(rng), uy(rng)};
            if (!clear_of_boundary(z)) continue;
            bool dup = false;
            for (const auto& q : spec.zeros) dup = dup || q.location == z;
            for (const auto& q : spec.poles) dup = dup || q.location == z;
            if (dup) continue;
            into.push_back({z, um(rng)});
        }
    };
    int nz = np(rng), npo = np(rng);
    draw_points(spec.zeros, nz);
    draw_points(spec.poles, npo);
    return spec;
}

}  // namespace compacta
