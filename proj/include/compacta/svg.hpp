#pragma once

#include <string>
#include <vector>

#include "compacta/grid.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Hand-rolled SVG output; a diagnostic view, never a test oracle.
class SvgWriter {
public:
    void add_region(const GridCompactum& grid, const std::string& fill, double opacity = 0.5);
    void add_polyline(const std::vector<Complex>& pts, bool closed, const std::string& stroke,
                      double width = 0.01);
    void add_points(const std::vector<Complex>& pts, const std::string& fill, double radius);
    void add_segment(Complex a, Complex b, const std::string& stroke, double width);

    std::string str() const;
    void write(const std::string& path) const;

private:
    std::vector<std::string> elements_;
    Box box_{1e300, -1e300, 1e300, -1e300};
    void grow(Complex z) { box_.expand(z); }
};

}  // namespace compacta
