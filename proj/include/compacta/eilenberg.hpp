#pragma once

#include <vector>

#include "compacta/grid.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Boundary cycles of a compactum in canonical order: the outer cycle of
// each set component (row-major discovery, counterclockwise), then one
// cycle per hole (by hole index, counterclockwise around the hole).
struct CanonicalBoundary {
    std::vector<BoundaryCycle> outer;
    std::vector<BoundaryCycle> hole;  // parallel to labeling.holes

    std::size_t cycle_count() const { return outer.size() + hole.size(); }
    const BoundaryCycle& cycle(std::size_t i) const {
        return i < outer.size() ? outer[i] : hole[i - outer.size()];
    }
};

CanonicalBoundary canonical_boundary(const GridCompactum& K, const RegionLabeling& labeling);

// Zero-free representation data: f = prod (z - base_points[j])^exponents[j] * exp(L)
// with L sampled along the canonical boundary cycles.
struct Factorization {
    std::vector<Complex> base_points;  // hole representatives
    std::vector<int> exponents;

    struct CycleLog {
        std::vector<Complex> points;      // samples along one canonical cycle
        std::vector<Complex> log_values;  // L at those samples
    };
    std::vector<CycleLog> cycles;

    double residual = 0;  // sup relative reconstruction error over all samples
};

// Winding of f about 0 along each canonical boundary cycle.
struct HomotopyClass {
    std::vector<int> windings;

    bool operator==(const HomotopyClass&) const = default;
};

struct EilenbergOptions {
    std::size_t min_samples_per_cycle = 512;
    std::size_t min_total_samples = 2048;
};

// One integer per hole; the winding of f along the cycle surrounding the
// hole, corrected for nesting so that the residual map winds zero along
// every boundary cycle.
std::vector<int> eilenberg_exponents(const ComplexMap& f, const GridCompactum& K,
                                     const RegionLabeling& labeling,
                                     const EilenbergOptions& opts = {});
std::vector<int> eilenberg_exponents(const ComplexMap& f, const GridCompactum& K);

Factorization factorize(const ComplexMap& f, const GridCompactum& K,
                        const RegionLabeling& labeling, const EilenbergOptions& opts = {});
Factorization factorize(const ComplexMap& f, const GridCompactum& K);

bool has_continuous_log(const ComplexMap& f, const GridCompactum& K);

HomotopyClass homotopy_class(const ComplexMap& f, const CanonicalBoundary& boundary,
                             const EilenbergOptions& opts = {});
bool homotopic(const ComplexMap& f, const ComplexMap& g, const CanonicalBoundary& boundary,
               const EilenbergOptions& opts = {});

}  // namespace compacta
