#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compacta/shape.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Ordered complex samples along a curve. For closed paths the segment
// from the last point back to the first is implied (no duplicate).
struct SampledPath {
    std::vector<Complex> points;
    bool closed = false;
    std::vector<double> params;  // optional; parallel to points when present

    static SampledPath open_path(std::vector<Complex> pts);
    static SampledPath closed_path(std::vector<Complex> pts);

    std::string to_csv() const;  // "t,re,im" per line
};

// Continuous lift of arg along a path; base branch is principal.
struct ArgTrack {
    std::vector<double> theta;
    std::vector<double> params;  // copied from the path when present

    double total_turn() const { return theta.empty() ? 0 : theta.back() - theta.front(); }
};

struct WindingResult {
    int winding = 0;
    double residue = 0;  // |raw/2pi - winding|, must stay below 0.01
};

// Continuous determination of arg(values). Throws ZeroOnPath and
// StepTooLarge (an angular gap of pi or more is a sampling failure,
// never bridged silently).
ArgTrack unwrap_phase(const SampledPath& values);

WindingResult winding_number_checked(const SampledPath& path, Complex a);
int winding_number(const SampledPath& path, Complex a);

// Sampled L with exp(L_k) = values_k. Closed inputs must have winding 0
// about the origin (ObstructedLog otherwise).
std::vector<Complex> continuous_log(const SampledPath& values);

// Unwrapped argument of the exact spiral parametrization on [0, t_max].
ArgTrack arg_growth(ShapeSpec::SpiralKind kind, double t_max, double step = 0.005);

// Even-arclength resample of a polyline (closed: wraps around).
std::vector<Complex> resample_polyline(const std::vector<Complex>& vertices, bool closed,
                                       std::size_t count);

}  // namespace compacta
