#pragma once

#include <random>
#include <vector>

#include "compacta/eilenberg.hpp"
#include "compacta/grid.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Rational data f = analytic_factor * prod (z - zero)^n / prod (z - pole)^p.
struct MeromorphicSpec {
    struct Order {
        Complex location;
        int multiplicity = 1;
    };
    std::vector<Order> zeros;
    std::vector<Order> poles;
    ComplexMap analytic_factor;  // empty means identically 1

    Complex eval(Complex z) const;
    ComplexMap as_map() const;
    void validate() const;
};

struct CountResult {
    int zeros = 0;  // counted with multiplicity
    int poles = 0;
    int n_minus_p = 0;
};

struct CountOptions {
    std::size_t min_total_samples = 4096;
    double zero_tol = 1e-9;   // |f| below this on the boundary is a zero
    double pole_tol = 1e9;    // |f| above this on the boundary is a pole
};

// Sum over the region's oriented boundary cycles of the winding of f
// about 0; equals zeros minus poles inside the region interior.
int count_via_argument(const ComplexMap& f, const GridCompactum& region,
                       const CountOptions& opts = {});

// Brute-force containment count of the listed zeros and poles. Throws
// OnBoundary when a listed point sits within 3h of a boundary sample.
CountResult oracle_count(const MeromorphicSpec& spec, const GridCompactum& region);

struct RoucheVerdict {
    bool boundary_admissible = false;  // both maps zero/pole-free on the boundary
    bool classes_equal = false;
    bool hypothesis_holds = false;
    int count_f = 0, count_g = 0;
    bool counts_equal = false;
    bool argument_vs_oracle_consistent = false;
    bool falsification = false;  // hypothesis holds yet counts differ
    std::vector<int> class_f, class_g;
};

RoucheVerdict homotopic_rouche_check(const MeromorphicSpec& f, const MeromorphicSpec& g,
                                     const GridCompactum& K, const CountOptions& opts = {});

// Deterministic generator for randomized Rouché suites: locations drawn
// uniformly in `range` and kept at least `clearance` away from the
// region boundary, multiplicities in [1, max_multiplicity].
MeromorphicSpec random_meromorphic_spec(std::mt19937& rng, const Box& range,
                                        const GridCompactum& region, double clearance,
                                        int max_points = 3, int max_multiplicity = 3);

}  // namespace compacta
