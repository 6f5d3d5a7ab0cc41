#include "compacta/winding.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "compacta/error.hpp"

namespace compacta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTol = 1e-150;
// Angular steps this close to pi are treated as antipodal.
constexpr double kStepSlack = 1e-9;

double principal_step(Complex from, Complex to) {
    double d = std::arg(to / from);
    if (std::abs(d) >= kPi - kStepSlack)
        fail_numeric("StepTooLarge",
                     "consecutive samples subtend an angle of pi or more; refine the sampling");
    return d;
}

}  // namespace

SampledPath SampledPath::open_path(std::vector<Complex> pts) {
    SampledPath p;
    p.points = std::move(pts);
    p.closed = false;
    return p;
}

SampledPath SampledPath::closed_path(std::vector<Complex> pts) {
    SampledPath p;
    p.points = std::move(pts);
    p.closed = true;
    return p;
}

std::string SampledPath::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "t,re,im\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        double t = params.size() == points.size() ? params[i] : static_cast<double>(i);
        os << t << "," << points[i].real() << "," << points[i].imag() << "\n";
    }
    return os.str();
}

ArgTrack unwrap_phase(const SampledPath& values) {
    if (values.points.size() < 8)
        fail("ParseError", "a sampled path needs at least 8 points");
    for (const auto& v : values.points)
        if (std::abs(v) < kZeroTol) fail_numeric("ZeroOnPath", "sample at (or too near) zero");

    ArgTrack track;
    track.theta.resize(values.points.size());
    track.theta[0] = std::arg(values.points[0]);
    for (std::size_t k = 1; k < values.points.size(); ++k)
        track.theta[k] = track.theta[k - 1] + principal_step(values.points[k - 1], values.points[k]);
    if (values.params.size() == values.points.size()) track.params = values.params;
    return track;
}

WindingResult winding_number_checked(const SampledPath& path, Complex a) {
    if (!path.closed) fail("ParseError", "winding number requires a closed path");
    if (path.points.size() < 8) fail("ParseError", "a sampled path needs at least 8 points");
    double scale = 0;
    for (const auto& p : path.points) scale = std::max(scale, std::abs(p - a));
    for (const auto& p : path.points)
        if (std::abs(p - a) <= 1e-12 * std::max(1.0, scale))
            fail_numeric("PointOnPath", "winding reference point lies on the path");

    double total = 0;
    const auto& pts = path.points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const Complex& from = pts[k] - a;
        const Complex& to = pts[(k + 1) % pts.size()] - a;
        total += principal_step(from, to);
    }
    double raw = total / (2 * kPi);
    WindingResult r;
    r.winding = static_cast<int>(std::lround(raw));
    r.residue = std::abs(raw - r.winding);
    if (r.residue >= 0.01)
        fail_numeric("NonIntegerWinding", "winding residue " + std::to_string(r.residue) +
                                              " exceeds 0.01; sampling failure");
    return r;
}

int winding_number(const SampledPath& path, Complex a) {
    return winding_number_checked(path, a).winding;
}

std::vector<Complex> continuous_log(const SampledPath& values) {
    for (const auto& v : values.points)
        if (std::abs(v) < kZeroTol) fail_numeric("ZeroOnPath", "sample at (or too near) zero");
    if (values.closed) {
        auto w = winding_number_checked(values, Complex{0, 0});
        if (w.winding != 0)
            fail_numeric("ObstructedLog", "closed path winds " + std::to_string(w.winding) +
                                              " times around 0; no continuous logarithm");
    }
    ArgTrack track = unwrap_phase(values);
    std::vector<Complex> L(values.points.size());
    for (std::size_t k = 0; k < values.points.size(); ++k)
        L[k] = Complex(std::log(std::abs(values.points[k])), track.theta[k]);
    return L;
}

ArgTrack arg_growth(ShapeSpec::SpiralKind kind, double t_max, double step) {
    if (!(t_max > 2 * kPi)) fail("ParseError", "arg_growth requires t_max > 2*pi");
    if (!(step > 0) || step > 0.01) fail("ParseError", "arg_growth requires a step in (0, 0.01]");
    SampledPath path;
    std::size_t n = static_cast<std::size_t>(std::ceil(t_max / step)) + 1;
    path.points.reserve(n);
    path.params.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        double t = std::min(k * step, t_max);
        path.points.push_back(spiral_point(kind, t));
        path.params.push_back(t);
    }
    return unwrap_phase(path);
}

std::vector<Complex> resample_polyline(const std::vector<Complex>& vertices, bool closed,
                                       std::size_t count) {
    if (vertices.size() < 2 || count == 0) return vertices;
    std::vector<double> cum{0.0};
    std::size_t n = vertices.size();
    std::size_t segs = closed ? n : n - 1;
    for (std::size_t i = 0; i < segs; ++i)
        cum.push_back(cum.back() + std::abs(vertices[(i + 1) % n] - vertices[i]));
    double total = cum.back();
    if (total <= 0) return vertices;
    std::vector<Complex> out;
    out.reserve(count);
    std::size_t seg = 0;
    double denom = closed ? static_cast<double>(count) : static_cast<double>(count - 1);
    for (std::size_t k = 0; k < count; ++k) {
        double s = total * (static_cast<double>(k) / denom);
        while (seg + 1 < cum.size() - 1 && cum[seg + 1] < s) ++seg;
        double seglen = cum[seg + 1] - cum[seg];
        double t = seglen > 0 ? (s - cum[seg]) / seglen : 0.0;
        Complex a = vertices[seg % n], b = vertices[(seg + 1) % n];
        out.push_back(a + t * (b - a));
    }
    return out;
}

}  // namespace compacta
