#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace compacta {

using Complex = std::complex<double>;

// Any pointwise-evaluable complex function of one complex variable.
using ComplexMap = std::function<Complex(Complex)>;

struct Box {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

    void expand(Complex z) {
        if (z.real() < xmin) xmin = z.real();
        if (z.real() > xmax) xmax = z.real();
        if (z.imag() < ymin) ymin = z.imag();
        if (z.imag() > ymax) ymax = z.imag();
    }
    void merge(const Box& b) {
        if (b.xmin < xmin) xmin = b.xmin;
        if (b.xmax > xmax) xmax = b.xmax;
        if (b.ymin < ymin) ymin = b.ymin;
        if (b.ymax > ymax) ymax = b.ymax;
    }
    void inflate(double d) { xmin -= d; xmax += d; ymin -= d; ymax += d; }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    Complex center() const { return {(xmin + xmax) / 2, (ymin + ymax) / 2}; }
    double diagonal() const;

    static Box of(const std::vector<Complex>& pts);
};

}  // namespace compacta
