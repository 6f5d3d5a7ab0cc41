#include "compacta/eilenberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "compacta/error.hpp"
#include "compacta/winding.hpp"

namespace compacta {

namespace {

std::vector<Complex> densified(const BoundaryCycle& cycle, std::size_t min_samples) {
    if (cycle.vertices.size() >= min_samples) return cycle.vertices;
    return resample_polyline(cycle.vertices, true, min_samples);
}

void check_zero_free(const std::vector<Complex>& values, const char* code) {
    double vmax = 0;
    for (const auto& v : values) vmax = std::max(vmax, std::abs(v));
    const double tol = 10 * std::numeric_limits<double>::epsilon() * std::max(1.0, vmax);
    for (const auto& v : values)
        if (std::abs(v) <= tol) fail_numeric(code, "function vanishes on a sample");
}

std::vector<Complex> map_values(const ComplexMap& f, const std::vector<Complex>& pts) {
    std::vector<Complex> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = f(pts[i]);
    return out;
}

int cycle_winding(const ComplexMap& f, const BoundaryCycle& cycle, std::size_t min_samples,
                  const char* zero_code) {
    auto pts = densified(cycle, min_samples);
    auto vals = map_values(f, pts);
    check_zero_free(vals, zero_code);
    return winding_number(SampledPath::closed_path(std::move(vals)), Complex{0, 0});
}

}  // namespace

CanonicalBoundary canonical_boundary(const GridCompactum& K, const RegionLabeling& labeling) {
    CanonicalBoundary out;
    for (const auto& comp : set_components(K)) {
        auto cycles = trace_boundary_unchecked(K, comp, true);
        for (auto& c : cycles)
            if (c.orientation > 0) out.outer.push_back(std::move(c));
    }
    for (int j = 0; j < labeling.hole_count(); ++j) {
        std::vector<std::uint8_t> cells(labeling.label.size(), 0);
        const std::int32_t lab = RegionLabeling::kHoleBase + j;
        for (std::size_t i = 0; i < labeling.label.size(); ++i)
            if (labeling.label[i] == lab) cells[i] = 1;
        auto cycles = trace_boundary_unchecked(K, cells, false);
        // The positively oriented cycle is the one surrounding the hole.
        bool found = false;
        for (auto& c : cycles) {
            if (c.orientation > 0) {
                out.hole.push_back(std::move(c));
                found = true;
                break;
            }
        }
        if (!found) fail_numeric("DegenerateRegion", "hole without an outer cycle");
    }
    return out;
}

std::vector<int> eilenberg_exponents(const ComplexMap& f, const GridCompactum& K,
                                     const RegionLabeling& labeling,
                                     const EilenbergOptions& opts) {
    {
        auto vals = map_values(f, K.cell_centers());
        check_zero_free(vals, "ZeroOnK");
    }
    const int n = labeling.hole_count();
    if (n == 0) return {};
    CanonicalBoundary boundary = canonical_boundary(K, labeling);

    std::vector<int> raw(n);
    for (int j = 0; j < n; ++j)
        raw[j] = cycle_winding(f, boundary.hole[j], opts.min_samples_per_cycle, "ZeroOnK");

    // Enclosure matrix: encloses[j][m] = 1 when the cycle around hole j
    // winds about hole m's representative. Reflexive; for non-nested
    // compacta it is the identity and the raw windings are the answer.
    std::vector<std::vector<int>> encloses(n, std::vector<int>(n, 0));
    for (int j = 0; j < n; ++j) {
        SampledPath cyc = SampledPath::closed_path(boundary.hole[j].vertices);
        for (int m = 0; m < n; ++m)
            encloses[j][m] = winding_number(cyc, labeling.holes[m].representative);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = std::accumulate(encloses[a].begin(), encloses[a].end(), 0);
        int cb = std::accumulate(encloses[b].begin(), encloses[b].end(), 0);
        return ca < cb;
    });
    std::vector<int> s(n, 0);
    for (int j : order) {
        int acc = raw[j];
        for (int m = 0; m < n; ++m)
            if (m != j && encloses[j][m]) acc -= encloses[j][m] * s[m];
        s[j] = acc;
    }
    return s;
}

std::vector<int> eilenberg_exponents(const ComplexMap& f, const GridCompactum& K) {
    return eilenberg_exponents(f, K, complement_components(K));
}

Factorization factorize(const ComplexMap& f, const GridCompactum& K,
                        const RegionLabeling& labeling, const EilenbergOptions& opts) {
    Factorization fac;
    fac.exponents = eilenberg_exponents(f, K, labeling, opts);
    for (const auto& h : labeling.holes) fac.base_points.push_back(h.representative);

    auto residual_map = [&](Complex z) {
        Complex v = f(z);
        for (std::size_t j = 0; j < fac.exponents.size(); ++j) {
            int s = fac.exponents[j];
            if (s == 0) continue;
            Complex w = z - fac.base_points[j];
            Complex pw = std::pow(w, static_cast<double>(std::abs(s)));
            v = s > 0 ? v / pw : v * pw;
        }
        return v;
    };

    CanonicalBoundary boundary = canonical_boundary(K, labeling);
    std::size_t per_cycle =
        std::max(opts.min_samples_per_cycle,
                 boundary.cycle_count() ? opts.min_total_samples / boundary.cycle_count() : 0);

    double worst = 0;
    for (std::size_t i = 0; i < boundary.cycle_count(); ++i) {
        Factorization::CycleLog entry;
        entry.points = densified(boundary.cycle(i), per_cycle);
        auto vals = map_values(residual_map, entry.points);
        check_zero_free(vals, "ZeroOnK");
        // Winding zero is guaranteed by the exponent construction; a
        // nonzero value here is an internal invariant breach and surfaces
        // as ObstructedLog from continuous_log.
        entry.log_values = continuous_log(SampledPath::closed_path(vals));

        for (std::size_t k = 0; k < entry.points.size(); ++k) {
            Complex z = entry.points[k];
            Complex rec = std::exp(entry.log_values[k]);
            for (std::size_t j = 0; j < fac.exponents.size(); ++j) {
                int s = fac.exponents[j];
                if (s == 0) continue;
                Complex pw = std::pow(z - fac.base_points[j], static_cast<double>(std::abs(s)));
                rec = s > 0 ? rec * pw : rec / pw;
            }
            Complex fv = f(z);
            worst = std::max(worst, std::abs(fv - rec) / std::max(std::abs(fv), 1e-300));
        }
        fac.cycles.push_back(std::move(entry));
    }
    fac.residual = worst;
    return fac;
}

Factorization factorize(const ComplexMap& f, const GridCompactum& K) {
    return factorize(f, K, complement_components(K));
}

bool has_continuous_log(const ComplexMap& f, const GridCompactum& K) {
    auto s = eilenberg_exponents(f, K);
    return std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
}

HomotopyClass homotopy_class(const ComplexMap& f, const CanonicalBoundary& boundary,
                             const EilenbergOptions& opts) {
    HomotopyClass cls;
    for (std::size_t i = 0; i < boundary.cycle_count(); ++i)
        cls.windings.push_back(
            cycle_winding(f, boundary.cycle(i), opts.min_samples_per_cycle, "ZeroOnBoundary"));
    return cls;
}

bool homotopic(const ComplexMap& f, const ComplexMap& g, const CanonicalBoundary& boundary,
               const EilenbergOptions& opts) {
    return homotopy_class(f, boundary, opts) == homotopy_class(g, boundary, opts);
}

}  // namespace compacta
