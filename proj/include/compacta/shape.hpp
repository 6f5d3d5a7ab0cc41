#pragma once

#include <string>
#include <vector>

#include "compacta/types.hpp"

namespace compacta {

// Shape DSL: a tree of primitives closed under union, translation and
// positive real scaling. One-dimensional primitives (circle, segment,
// spiral) are realized as bands of the given width; all topological
// statements downstream refer to the band version.
struct ShapeSpec {
    enum class Kind { Disk, Circle, Annulus, Segment, Spiral, Union, Translate, Scale };
    enum class SpiralKind { Clustering, Accessible };

    Kind kind = Kind::Union;

    Complex center{};         // disk, circle, annulus
    double radius = 0;        // disk, circle
    double r_in = 0;          // annulus
    double r_out = 0;         // annulus
    Complex a{}, b{};         // segment endpoints
    double band = 0;          // circle, segment, spiral
    SpiralKind spiral_kind = SpiralKind::Clustering;
    double t_max = 0;         // spiral parameter range [0, t_max]
    Complex offset{};         // translate
    double factor = 1;        // scale
    std::vector<ShapeSpec> children;  // union (n-ary), translate/scale (exactly one)

    static ShapeSpec disk(Complex c, double r);
    static ShapeSpec circle(Complex c, double r, double band);
    static ShapeSpec annulus(Complex c, double r_in, double r_out);
    static ShapeSpec segment(Complex a, Complex b, double band);
    static ShapeSpec spiral(SpiralKind k, double t_max, double band);
    static ShapeSpec union_of(std::vector<ShapeSpec> parts);
    static ShapeSpec translated(Complex offset, ShapeSpec child);
    static ShapeSpec scaled(double factor, ShapeSpec child);

    // Throws EmptySpec / parse-style errors on invariant violations.
    void validate() const;

    // Number of leaf primitives.
    int leaf_count() const;

    // True when every leaf is a band-realized curve (circle, segment,
    // spiral): the exact set has empty interior even though the band
    // rasterization does not.
    bool all_leaves_thin() const;

    // Smallest feature size over all leaves, world scale applied.
    // Rasterization requires min_feature() >= 2h.
    double min_feature() const;

    // Bounding box of the exact set.
    Box bounds() const;

    std::string to_json() const;
    static ShapeSpec from_json(const std::string& text);
};

// Spiral parametrizations over t >= 0.
Complex spiral_point(ShapeSpec::SpiralKind k, double t);
double spiral_speed_bound(ShapeSpec::SpiralKind k, double t);

}  // namespace compacta
