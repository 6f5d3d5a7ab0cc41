#include "compacta/svg.hpp"

#include <fstream>
#include <sstream>

#include "compacta/error.hpp"

namespace compacta {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

void SvgWriter::add_region(const GridCompactum& grid, const std::string& fill, double opacity) {
    // One path, row runs as rectangles.
    std::ostringstream os;
    os << "<path fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\" d=\"";
    const double h = grid.h;
    for (int iy = 0; iy < grid.height; ++iy) {
        int ix = 0;
        while (ix < grid.width) {
            if (!grid.at(ix, iy)) {
                ++ix;
                continue;
            }
            int start = ix;
            while (ix < grid.width && grid.at(ix, iy)) ++ix;
            Complex c0 = grid.cell_center(start, iy);
            grow(c0 - Complex(h, h));
            grow(grid.cell_center(ix - 1, iy) + Complex(h, h));
            os << "M" << fmt(c0.real() - h / 2) << " " << fmt(-(c0.imag() + h / 2)) << "h"
               << fmt((ix - start) * h) << "v" << fmt(h) << "h" << fmt(-(ix - start) * h) << "z";
        }
    }
    os << "\"/>";
    elements_.push_back(os.str());
}

void SvgWriter::add_polyline(const std::vector<Complex>& pts, bool closed,
                             const std::string& stroke, double width) {
    if (pts.empty()) return;
    std::ostringstream os;
    os << "<path fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width)
       << "\" d=\"M";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        grow(pts[i]);
        os << fmt(pts[i].real()) << " " << fmt(-pts[i].imag()) << (i + 1 < pts.size() ? " L" : "");
    }
    if (closed) os << " z";
    os << "\"/>";
    elements_.push_back(os.str());
}

void SvgWriter::add_points(const std::vector<Complex>& pts, const std::string& fill,
                           double radius) {
    for (const auto& p : pts) {
        grow(p);
        std::ostringstream os;
        os << "<circle cx=\"" << fmt(p.real()) << "\" cy=\"" << fmt(-p.imag()) << "\" r=\""
           << fmt(radius) << "\" fill=\"" << fill << "\"/>";
        elements_.push_back(os.str());
    }
}

void SvgWriter::add_segment(Complex a, Complex b, const std::string& stroke, double width) {
    grow(a);
    grow(b);
    std::ostringstream os;
    os << "<line x1=\"" << fmt(a.real()) << "\" y1=\"" << fmt(-a.imag()) << "\" x2=\""
       << fmt(b.real()) << "\" y2=\"" << fmt(-b.imag()) << "\" stroke=\"" << stroke
       << "\" stroke-width=\"" << fmt(width) << "\"/>";
    elements_.push_back(os.str());
}

std::string SvgWriter::str() const {
    double pad = std::max(box_.width(), box_.height()) * 0.05 + 1e-6;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(box_.xmin - pad) << " "
       << fmt(-box_.ymax - pad) << " " << fmt(box_.width() + 2 * pad) << " "
       << fmt(box_.height() + 2 * pad) << "\">\n";
    for (const auto& e : elements_) os << e << "\n";
    os << "</svg>\n";
    return os.str();
}

void SvgWriter::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) fail("ParseError", "cannot open SVG output path " + path);
    out << str();
}

}  // namespace compacta
