#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compacta/grid.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Boundary least-squares polynomial in a centered/scaled variable.
// Stands in for the unique continuous extension of a P(K) function to
// the hull; the residual travels with every verdict derived from it.
struct PolyFit {
    Complex center{};
    double scale = 1;
    std::vector<Complex> coefficients;  // ascending degree, scaled variable
    int degree = 0;
    double residual = 0;      // holdout sup error (best over the sweep)
    double conditioning = 0;  // column-scaled R-diagonal ratio at the chosen degree

    struct SweepPoint {
        int degree = 0;
        double residual = 0;  // best residual achieved up to this degree
        double conditioning = 0;
    };
    std::vector<SweepPoint> sweep;

    Complex eval(Complex z) const;
    // Coefficients rebased to the plain z monomial basis (report use;
    // only sensible for moderate degrees).
    std::vector<Complex> coefficients_in_z() const;
};

struct FitOptions {
    int degree_max = 80;
    std::size_t target_samples = 2048;
    double cond_limit = 1e14;
    double early_stop = 1e-13;
};

PolyFit fit_polynomial(const std::vector<Complex>& points, const std::vector<Complex>& values,
                       const FitOptions& opts = {});

// Raw degree sweep behind fit_polynomial: least-squares coefficients per
// scheduled degree (fitted on the even-index samples), no residual policy.
struct FitSweep {
    Complex center{};
    double scale = 1;
    struct Entry {
        int degree = 0;
        double conditioning = 0;
        std::vector<Complex> coefficients;
    };
    std::vector<Entry> entries;

    Complex eval(const Entry& e, Complex z) const;
};
FitSweep fit_sweep(const std::vector<Complex>& points, const std::vector<Complex>& values,
                   const FitOptions& opts = {});

struct CollisionWitness {
    Complex z1{}, z2{}, w1{}, w2{};
    double domain_gap = 0, image_gap = 0;
};

struct InjectivityResult {
    bool injective = true;
    std::vector<CollisionWitness> witnesses;  // ascending image gap, at most 8
    double delta = 0, epsilon = 0;
};

// A witness is a sample pair with |z1 - z2| > delta and |w1 - w2| < epsilon.
// The returned witnesses realize the global minimum image gap among such
// pairs (deterministic tie-break by sample order).
InjectivityResult injective_on_samples(const std::vector<Complex>& points,
                                       const std::vector<Complex>& images, double delta,
                                       double epsilon);
InjectivityResult injective_on_samples(const ComplexMap& f, const std::vector<Complex>& points,
                                       double delta, double epsilon);

// Minimum image gap over pairs separated by more than delta in the
// domain; `found` is false for degenerate inputs (fewer than two
// admissible samples).
struct FarPairGap {
    bool found = false;
    CollisionWitness best{};
    std::vector<CollisionWitness> top;  // ascending gap, at most 8
};
FarPairGap min_far_pair_gap(const std::vector<Complex>& points,
                            const std::vector<Complex>& images, double delta,
                            double radius_cap);

// Image-side grid pitch: twice the 99th percentile of |f| steps across
// grid-adjacent cells of K.
double image_resolution(const GridCompactum& K, const ComplexMap& f);

GridCompactum rasterize_points(const std::vector<Complex>& pts, double h_image);
GridCompactum rasterize_points_on_frame(const std::vector<Complex>& pts,
                                        const GridCompactum& frame);

// Hausdorff distance between the cell-center sets of two rasters on an
// identical frame (exact, via distance transforms).
double raster_hausdorff(const GridCompactum& A, const GridCompactum& B);

struct CriterionResult {
    bool holds = false;
    double gap = 0;
    double h_image = 0;
    double tolerance = 0;  // 5 * h_image
};

// Does f map the outer boundary of K onto the outer boundary of f(K)?
CriterionResult outer_boundary_criterion(const ComplexMap& f, const GridCompactum& K,
                                         double h_image = 0);

struct HoleMapping {
    std::vector<std::pair<int, int>> pairs;  // hole of S_inf -> hole of f(S_inf)
    int image_holes = 0;
    bool bijective = false;
};

struct ExtensionOptions {
    FitOptions fit{};
    double delta_domain = -1;    // default 5h
    double epsilon_domain = 1e-6;
    double delta_hull = -1;      // default 5h
    double epsilon_hull = -1;    // default fit residual + 5 h_image
    std::size_t max_hull_samples = 400000;
    // When set, the injectivity hypothesis is tested on these samples
    // instead of the raster cells (exact-geometry sampling for band
    // realizations of one-dimensional sets).
    const std::vector<Complex>* hypothesis_samples = nullptr;
    // When set, the polynomial fit uses these boundary samples instead
    // of the traced outer-boundary vertices.
    const std::vector<Complex>* fit_samples = nullptr;
};

struct ExtensionReport {
    InjectivityResult injective_on_K;
    PolyFit fit;
    CriterionResult criterion;
    InjectivityResult injective_on_hull;
    double hull_image_gap = 0;
    double h_image = 0;
    bool hole_mapping_present = false;
    HoleMapping holes;
    std::vector<std::string> falsification_events;
};

// Full main-theorem pipeline. Throws HypothesisFailed when f is not
// injective on the K samples; records a falsification event when the
// criterion verdict and the numeric injectivity verdict disagree.
ExtensionReport check_extension_injectivity(const ComplexMap& f, const GridCompactum& K,
                                            const ExtensionOptions& opts = {});

// Standalone hole mapping; requires the criterion to hold.
HoleMapping hole_mapping(const ComplexMap& f, const GridCompactum& K,
                         const ExtensionOptions& opts = {});

struct PerHoleVerdict {
    int hole_index = -1;
    bool regular = false;
    ExtensionReport report;
    bool injective = false;
    bool falsification = false;  // regular hole with a non-injective restriction
};

// Restriction of the extension test to the closure of one hole of K:
// the boundary cells around the hole become the restricted compactum,
// whose hull is the closed hole. Requires the hole to be regular
// (NotRegular otherwise). hole_index refers to complement_components(K).
PerHoleVerdict regular_hole_injectivity(const ComplexMap& f, const GridCompactum& K,
                                        int hole_index, const ExtensionOptions& opts = {});

// Cells of the outer boundary of the hull (the discrete S_inf set).
GridCompactum outer_boundary_cells(const GridCompactum& K);

struct AnnulusDemo {
    double r = 0, R = 0;
    double boundary_delta = 0;
    double boundary_margin = 0;        // min image gap over far boundary pairs
    CollisionWitness interior_witness; // the hidden interior collision
    double exact_pair_gap = 0;         // |f(i) - f(-i)|
};

// z + 1/z on the annulus r <= |z| <= R: injective on the boundary,
// not on the interior. Requires 0 < r < 1 < R and rR != 1 (BadRadii).
AnnulusDemo boundary_injectivity_gap_demo(double r, double R, double h,
                                          double boundary_delta = 0.1);

}  // namespace compacta
