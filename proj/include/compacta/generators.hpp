#pragma once

#include <optional>
#include <vector>

#include "compacta/extension.hpp"
#include "compacta/grid.hpp"
#include "compacta/shape.hpp"
#include "compacta/types.hpp"

namespace compacta {

enum class Algebra { C, A, R, P };
enum class Confidence { High, Low };

struct ResidualCurvePoint {
    int degree = 0;
    double residual = 0;
};

// Numeric stand-in for membership in P(L): polynomial fits on the outer
// boundary of L, residuals taken over all of L's samples.
struct PMembership {
    bool member = false;
    Confidence confidence = Confidence::Low;
    bool exact = false;  // set when an exact shortcut applies (identity inverse)
    std::vector<ResidualCurvePoint> curve;
    double final_residual = 0;
    double noise_floor = 0;
};

struct GeneratorVerdict {
    Algebra algebra = Algebra::C;
    bool is_homeo = false;
    bool interior_empty = false;
    bool interior_empty_exact = false;  // predicate taken from thin primitives, not the grid
    bool complement_connected = false;
    std::optional<PMembership> inverse_in_p;  // only for P
    bool generates = false;
    Confidence confidence = Confidence::High;
};

struct GeneratorOptions {
    double delta = -1;        // homeomorphism test separation, default 5h
    double epsilon = 1e-6;    // homeomorphism test image tolerance
    FitOptions fit{};
    const ShapeSpec* spec = nullptr;  // enables the exact thin-set predicate
    bool phi_is_identity = false;     // exact shortcut for inverse membership
    // Exact-geometry samples for the homeomorphism test (band sets).
    const std::vector<Complex>* homeo_samples = nullptr;
};

bool is_homeomorphism_onto_image(const ComplexMap& phi, const GridCompactum& K,
                                 const GeneratorOptions& opts = {});

GeneratorVerdict generates_c(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts = {});
GeneratorVerdict generates_a(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts = {});
GeneratorVerdict generates_r(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts = {});
GeneratorVerdict generates_p(const ComplexMap& phi, const GridCompactum& K,
                             const GeneratorOptions& opts = {});

// Sample form: pairs (w_i, g(w_i)); fit_subset marks the samples lying on
// the outer boundary of L (the fit set). Residuals run over all pairs.
PMembership p_membership_heuristic(const std::vector<Complex>& points,
                                   const std::vector<Complex>& values,
                                   const std::vector<std::uint8_t>& fit_subset,
                                   const FitOptions& opts = {});

// Evaluable form: g sampled on L's outer boundary (fit) and cells (residual).
PMembership p_membership_heuristic(const ComplexMap& g, const GridCompactum& L,
                                   const FitOptions& opts = {});

// No set-cell has all eight neighbors inside the set.
bool grid_interior_empty(const GridCompactum& K);

}  // namespace compacta
