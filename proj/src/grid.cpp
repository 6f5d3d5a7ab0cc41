#include "compacta/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "compacta/error.hpp"

namespace compacta {

namespace {

constexpr double kInf = 1e300;

struct Frame {
    Complex origin;
    double h;
    int width, height;
};

// Marks every cell whose center lies within `reach` of the point set
// described by a primitive-local distance function, restricted to a box.
template <typename DistFn>
void stamp(std::vector<std::uint8_t>& mask, const Frame& fr, const Box& box, double reach,
           DistFn dist) {
    int ix0 = std::max(0, static_cast<int>(std::floor((box.xmin - reach - fr.origin.real()) / fr.h)));
    int ix1 = std::min(fr.width - 1,
                       static_cast<int>(std::ceil((box.xmax + reach - fr.origin.real()) / fr.h)));
    int iy0 = std::max(0, static_cast<int>(std::floor((box.ymin - reach - fr.origin.imag()) / fr.h)));
    int iy1 = std::min(fr.height - 1,
                       static_cast<int>(std::ceil((box.ymax + reach - fr.origin.imag()) / fr.h)));
    for (int iy = iy0; iy <= iy1; ++iy) {
        for (int ix = ix0; ix <= ix1; ++ix) {
            if (mask[static_cast<std::size_t>(iy) * fr.width + ix]) continue;
            Complex z = fr.origin + Complex(fr.h * ix, fr.h * iy);
            if (dist(z) <= reach)
                mask[static_cast<std::size_t>(iy) * fr.width + ix] = 1;
        }
    }
}

double segment_distance(Complex z, Complex a, Complex b) {
    Complex d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0) return std::abs(z - a);
    double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

void rasterize_node(const ShapeSpec& s, const Frame& fr, std::vector<std::uint8_t>& mask,
                    double scale, Complex shift, double h) {
    const double reach = h / 2;
    switch (s.kind) {
        case ShapeSpec::Kind::Disk: {
            Complex c = scale * s.center + shift;
            double r = scale * s.radius;
            Box box{c.real() - r, c.real() + r, c.imag() - r, c.imag() + r};
            stamp(mask, fr, box, reach,
                  [&](Complex z) { return std::max(0.0, std::abs(z - c) - r); });
            break;
        }
        case ShapeSpec::Kind::Circle: {
            Complex c = scale * s.center + shift;
            double r = scale * s.radius, w = scale * s.band / 2;
            Box box{c.real() - r - w, c.real() + r + w, c.imag() - r - w, c.imag() + r + w};
            stamp(mask, fr, box, reach, [&](Complex z) {
                return std::max(0.0, std::abs(std::abs(z - c) - r) - w);
            });
            break;
        }
        case ShapeSpec::Kind::Annulus: {
            Complex c = scale * s.center + shift;
            double ri = scale * s.r_in, ro = scale * s.r_out;
            Box box{c.real() - ro, c.real() + ro, c.imag() - ro, c.imag() + ro};
            stamp(mask, fr, box, reach, [&](Complex z) {
                double d = std::abs(z - c);
                return std::max({0.0, ri - d, d - ro});
            });
            break;
        }
        case ShapeSpec::Kind::Segment: {
            Complex a = scale * s.a + shift, b = scale * s.b + shift;
            double w = scale * s.band / 2;
            Box box{std::min(a.real(), b.real()), std::max(a.real(), b.real()),
                    std::min(a.imag(), b.imag()), std::max(a.imag(), b.imag())};
            box.inflate(w);
            stamp(mask, fr, box, reach, [&](Complex z) {
                return std::max(0.0, segment_distance(z, a, b) - w);
            });
            break;
        }
        case ShapeSpec::Kind::Spiral: {
            double w = scale * s.band / 2;
            double t = 0;
            Complex prev = scale * spiral_point(s.spiral_kind, 0) + shift;
            while (t < s.t_max) {
                double speed = scale * spiral_speed_bound(s.spiral_kind, t);
                double dt = std::min(s.t_max - t, (h / 4) / std::max(speed, 1e-9));
                t += dt;
                Complex cur = scale * spiral_point(s.spiral_kind, t) + shift;
                Box box{std::min(prev.real(), cur.real()), std::max(prev.real(), cur.real()),
                        std::min(prev.imag(), cur.imag()), std::max(prev.imag(), cur.imag())};
                box.inflate(w);
                stamp(mask, fr, box, reach, [&](Complex z) {
                    return std::max(0.0, segment_distance(z, prev, cur) - w);
                });
                prev = cur;
            }
            break;
        }
        case ShapeSpec::Kind::Union:
            for (const auto& c : s.children) rasterize_node(c, fr, mask, scale, shift, h);
            break;
        case ShapeSpec::Kind::Translate:
            rasterize_node(s.children[0], fr, mask, scale, shift + scale * s.offset, h);
            break;
        case ShapeSpec::Kind::Scale:
            rasterize_node(s.children[0], fr, mask, scale * s.factor, shift, h);
            break;
    }
}

// Exact squared Euclidean distance transform, lower envelope of
// parabolas over the finite sites of one scanline.
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
            std::vector<double>& zbuf) {
    const int n = static_cast<int>(f.size());
    int k = -1;
    for (int q = 0; q < n; ++q) {
        if (f[q] >= kInf) continue;
        double sq = 0;
        while (k >= 0) {
            sq = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * q - 2.0 * v[k]);
            if (sq <= zbuf[k])
                --k;
            else
                break;
        }
        if (k < 0) {
            k = 0;
            v[0] = q;
            zbuf[0] = -kInf;
        } else {
            ++k;
            v[k] = q;
            zbuf[k] = sq;
        }
        zbuf[k + 1] = kInf;
    }
    if (k < 0) {
        for (int q = 0; q < n; ++q) d[q] = kInf;
        return;
    }
    int kk = 0;
    for (int q = 0; q < n; ++q) {
        while (zbuf[kk + 1] < q) ++kk;
        double dv = q - v[kk];
        d[q] = dv * dv + f[v[kk]];
    }
}

// Squared distance (cell units) from each cell to the nearest set cell.
std::vector<double> squared_distance_to_set(const GridCompactum& K) {
    const int w = K.width, h = K.height;
    std::vector<double> dist(static_cast<std::size_t>(w) * h);
    std::vector<double> f(std::max(w, h)), d(std::max(w, h)), zbuf(std::max(w, h) + 1);
    std::vector<int> v(std::max(w, h));
    for (int iy = 0; iy < h; ++iy)
        for (int ix = 0; ix < w; ++ix)
            dist[static_cast<std::size_t>(iy) * w + ix] = K.at(ix, iy) ? 0.0 : kInf;
    for (int ix = 0; ix < w; ++ix) {
        for (int iy = 0; iy < h; ++iy) f[iy] = dist[static_cast<std::size_t>(iy) * w + ix];
        f.resize(h);
        d.resize(h);
        edt_1d(f, d, v, zbuf);
        for (int iy = 0; iy < h; ++iy) dist[static_cast<std::size_t>(iy) * w + ix] = d[iy];
        f.resize(std::max(w, h));
        d.resize(std::max(w, h));
    }
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) f[ix] = dist[static_cast<std::size_t>(iy) * w + ix];
        f.resize(w);
        d.resize(w);
        edt_1d(f, d, v, zbuf);
        for (int ix = 0; ix < w; ++ix) dist[static_cast<std::size_t>(iy) * w + ix] = d[ix];
        f.resize(std::max(w, h));
        d.resize(std::max(w, h));
    }
    return dist;
}

}  // namespace

void GridCompactum::locate(Complex z, int& ix, int& iy) const {
    ix = static_cast<int>(std::lround((z.real() - origin.real()) / h));
    iy = static_cast<int>(std::lround((z.imag() - origin.imag()) / h));
}

std::size_t GridCompactum::cell_count() const {
    std::size_t n = 0;
    for (auto m : mask) n += m ? 1 : 0;
    return n;
}

std::vector<Complex> GridCompactum::cell_centers() const {
    std::vector<Complex> out;
    out.reserve(cell_count());
    for (int iy = 0; iy < height; ++iy)
        for (int ix = 0; ix < width; ++ix)
            if (at(ix, iy)) out.push_back(cell_center(ix, iy));
    return out;
}

GridCompactum GridCompactum::with_mask(std::vector<std::uint8_t> m) const {
    GridCompactum g = *this;
    g.mask = std::move(m);
    return g;
}

GridCompactum rasterize(const ShapeSpec& spec, double h) {
    spec.validate();
    if (!(h > 0)) fail("ParseError", "resolution h must be positive");
    if (spec.min_feature() < 2 * h)
        fail_numeric("ResolutionTooCoarse",
                     "a primitive feature is thinner than 2h; decrease h or thicken the shape");

    Box box = spec.bounds();
    box.inflate(h / 2);
    const int margin = 2;
    GridCompactum K;
    K.h = h;
    int ix0 = static_cast<int>(std::floor(box.xmin / h)) - margin;
    int iy0 = static_cast<int>(std::floor(box.ymin / h)) - margin;
    int ix1 = static_cast<int>(std::ceil(box.xmax / h)) + margin;
    int iy1 = static_cast<int>(std::ceil(box.ymax / h)) + margin;
    K.origin = Complex(ix0 * h, iy0 * h);
    K.width = ix1 - ix0 + 1;
    K.height = iy1 - iy0 + 1;
    K.mask.assign(static_cast<std::size_t>(K.width) * K.height, 0);

    Frame fr{K.origin, h, K.width, K.height};
    rasterize_node(spec, fr, K.mask, 1.0, Complex{}, h);

    if (K.cell_count() == 0) fail("EmptySpec", "rasterization produced an empty mask");
    for (int ix = 0; ix < K.width; ++ix)
        if (K.at(ix, 0) || K.at(ix, K.height - 1))
            fail_numeric("ResolutionTooCoarse", "margin rule violated");
    for (int iy = 0; iy < K.height; ++iy)
        if (K.at(0, iy) || K.at(K.width - 1, iy))
            fail_numeric("ResolutionTooCoarse", "margin rule violated");
    return K;
}

RegionLabeling complement_components(const GridCompactum& K) {
    const int w = K.width, h = K.height;
    RegionLabeling L;
    L.width = w;
    L.height = h;
    L.label.assign(static_cast<std::size_t>(w) * h, -1);
    for (int iy = 0; iy < h; ++iy)
        for (int ix = 0; ix < w; ++ix)
            if (K.at(ix, iy)) L.label[static_cast<std::size_t>(iy) * w + ix] = RegionLabeling::kSet;

    auto flood = [&](int sx, int sy, std::int32_t lab) -> std::int64_t {
        std::vector<std::pair<int, int>> stack{{sx, sy}};
        L.label[static_cast<std::size_t>(sy) * w + sx] = lab;
        std::int64_t count = 0;
        while (!stack.empty()) {
            auto [x, y] = stack.back();
            stack.pop_back();
            ++count;
            constexpr int dx[4] = {1, -1, 0, 0};
            constexpr int dy[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                int nx = x + dx[k], ny = y + dy[k];
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                auto& l = L.label[static_cast<std::size_t>(ny) * w + nx];
                if (l == -1) {
                    l = lab;
                    stack.emplace_back(nx, ny);
                }
            }
        }
        return count;
    };

    // The margin ring is empty, so (0, 0) seeds the unbounded component.
    flood(0, 0, RegionLabeling::kUnbounded);

    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (L.label[static_cast<std::size_t>(iy) * w + ix] != -1) continue;
            std::int32_t lab = RegionLabeling::kHoleBase + L.hole_count();
            HoleInfo info;
            info.cells = flood(ix, iy, lab);
            L.holes.push_back(info);
        }
    }

    if (!L.holes.empty()) {
        auto dist = squared_distance_to_set(K);
        std::vector<double> best(L.holes.size(), -1.0);
        std::vector<std::size_t> best_idx(L.holes.size(), 0);
        for (std::size_t i = 0; i < L.label.size(); ++i) {
            int hidx = L.label[i] - RegionLabeling::kHoleBase;
            if (hidx < 0) continue;
            if (dist[i] > best[static_cast<std::size_t>(hidx)]) {
                best[static_cast<std::size_t>(hidx)] = dist[i];
                best_idx[static_cast<std::size_t>(hidx)] = i;
            }
        }
        for (std::size_t j = 0; j < L.holes.size(); ++j) {
            int iy = static_cast<int>(best_idx[j] / w), ix = static_cast<int>(best_idx[j] % w);
            L.holes[j].rep_ix = ix;
            L.holes[j].rep_iy = iy;
            L.holes[j].representative = K.cell_center(ix, iy);
        }
    }
    return L;
}

GridCompactum polynomial_hull(const GridCompactum& K, const RegionLabeling& L) {
    GridCompactum hull = K;
    for (std::size_t i = 0; i < L.label.size(); ++i)
        if (L.label[i] >= RegionLabeling::kHoleBase) hull.mask[i] = 1;
    return hull;
}

GridCompactum polynomial_hull(const GridCompactum& K) {
    return polynomial_hull(K, complement_components(K));
}

namespace {

// Directed boundary edges over the corner lattice; region kept on the left.
// dir: 0 = +x, 1 = +y, 2 = -x, 3 = -y.
struct EdgeKey {
    int cx, cy, dir;
    bool operator<(const EdgeKey& o) const {
        if (cy != o.cy) return cy < o.cy;
        if (cx != o.cx) return cx < o.cx;
        return dir < o.dir;
    }
};

}  // namespace

double BoundaryCycle::length() const {
    double s = 0;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) s += std::abs(vertices[i + 1] - vertices[i]);
    if (closed && vertices.size() > 1) s += std::abs(vertices.front() - vertices.back());
    return s;
}

std::vector<BoundaryCycle> trace_boundary(const GridCompactum& frame,
                                          const std::vector<std::uint8_t>& region,
                                          bool eight_connected) {
    std::int64_t cells = 0;
    for (auto m : region) cells += m ? 1 : 0;
    if (cells < 4) fail("DegenerateRegion", "boundary tracing requires at least 4 cells");
    return trace_boundary_unchecked(frame, region, eight_connected);
}

std::vector<BoundaryCycle> trace_boundary_unchecked(const GridCompactum& frame,
                                                    const std::vector<std::uint8_t>& region,
                                                    bool eight_connected) {
    const int w = frame.width, h = frame.height;
    auto in_region = [&](int ix, int iy) {
        return ix >= 0 && ix < w && iy >= 0 && iy < h &&
               region[static_cast<std::size_t>(iy) * w + ix];
    };

    // Edge start corner and direction per side. Corner (cx, cy) sits at
    // origin + h * (cx - 1/2, cy - 1/2).
    std::map<EdgeKey, bool> used;  // false = not yet consumed
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (!in_region(ix, iy)) continue;
            if (!in_region(ix, iy - 1)) used[{ix, iy, 0}] = false;          // south side, +x
            if (!in_region(ix + 1, iy)) used[{ix + 1, iy, 1}] = false;      // east side, +y
            if (!in_region(ix, iy + 1)) used[{ix + 1, iy + 1, 2}] = false;  // north side, -x
            if (!in_region(ix - 1, iy)) used[{ix, iy + 1, 3}] = false;      // west side, -y
        }
    }

    constexpr int step_x[4] = {1, 0, -1, 0};
    constexpr int step_y[4] = {0, 1, 0, -1};
    auto midpoint = [&](const EdgeKey& e) {
        double mx = e.cx - 0.5 + step_x[e.dir] * 0.5;
        double my = e.cy - 0.5 + step_y[e.dir] * 0.5;
        return frame.origin + Complex(frame.h * mx, frame.h * my);
    };

    std::vector<BoundaryCycle> cycles;
    for (auto& [start, consumed] : used) {
        if (consumed) continue;
        BoundaryCycle cyc;
        EdgeKey cur = start;
        do {
            used[cur] = true;
            cyc.vertices.push_back(midpoint(cur));
            int ex = cur.cx + step_x[cur.dir];
            int ey = cur.cy + step_y[cur.dir];
            // Candidate turns at the end corner, relative to travel:
            // left, straight, right. A pinch corner offers both left and
            // right; connectivity picks one (8-connected regions cross
            // over, 4-connected regions hug the current cell).
            int left = (cur.dir + 1) & 3, right = (cur.dir + 3) & 3;
            int order[3];
            if (eight_connected) {
                order[0] = right;
                order[1] = cur.dir;
                order[2] = left;
            } else {
                order[0] = left;
                order[1] = cur.dir;
                order[2] = right;
            }
            bool advanced = false;
            for (int d : order) {
                auto it = used.find({ex, ey, d});
                if (it != used.end() && (!it->second || (it->first.cx == start.cx &&
                                                         it->first.cy == start.cy &&
                                                         it->first.dir == start.dir))) {
                    cur = {ex, ey, d};
                    advanced = true;
                    break;
                }
            }
            if (!advanced) fail_numeric("DegenerateRegion", "boundary walk dead end");
        } while (!(cur.cx == start.cx && cur.cy == start.cy && cur.dir == start.dir));

        double area2 = 0;
        const auto& v = cyc.vertices;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Complex& p = v[i];
            const Complex& q = v[(i + 1) % v.size()];
            area2 += p.real() * q.imag() - q.real() * p.imag();
        }
        cyc.signed_area = area2 / 2;
        cyc.orientation = area2 >= 0 ? 1 : -1;
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<std::vector<std::uint8_t>> set_components(const GridCompactum& K) {
    const int w = K.width, h = K.height;
    std::vector<std::int32_t> comp(static_cast<std::size_t>(w) * h, -1);
    std::vector<std::vector<std::uint8_t>> out;
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (!K.at(ix, iy) || comp[static_cast<std::size_t>(iy) * w + ix] != -1) continue;
            std::vector<std::uint8_t> mask(static_cast<std::size_t>(w) * h, 0);
            std::vector<std::pair<int, int>> stack{{ix, iy}};
            comp[static_cast<std::size_t>(iy) * w + ix] = static_cast<std::int32_t>(out.size());
            while (!stack.empty()) {
                auto [x, y] = stack.back();
                stack.pop_back();
                mask[static_cast<std::size_t>(y) * w + x] = 1;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        int nx = x + dx, ny = y + dy;
                        if (!K.at(nx, ny)) continue;
                        auto& c = comp[static_cast<std::size_t>(ny) * w + nx];
                        if (c == -1) {
                            c = static_cast<std::int32_t>(out.size());
                            stack.emplace_back(nx, ny);
                        }
                    }
                }
            }
            out.push_back(std::move(mask));
        }
    }
    return out;
}

std::vector<BoundaryCycle> outer_boundary(const GridCompactum& K) {
    GridCompactum hull = polynomial_hull(K);
    std::vector<BoundaryCycle> out;
    for (const auto& comp : set_components(hull)) {
        auto cycles = trace_boundary_unchecked(hull, comp, true);
        // A hull component has no cavities, so exactly one cycle.
        for (auto& c : cycles) out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::uint8_t> hole_boundary_cells(const GridCompactum& K, const RegionLabeling& L,
                                              int hole_index) {
    if (hole_index < 0 || hole_index >= L.hole_count())
        fail("NoSuchHole", "hole index " + std::to_string(hole_index) + " out of range (holes: " +
                               std::to_string(L.hole_count()) + ")");
    const int w = K.width, h = K.height;
    const std::int32_t lab = RegionLabeling::kHoleBase + hole_index;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h, 0);
    for (int iy = 0; iy < h; ++iy) {
        for (int ix = 0; ix < w; ++ix) {
            if (!K.at(ix, iy)) continue;
            bool touches = false;
            for (int dy = -1; dy <= 1 && !touches; ++dy)
                for (int dx = -1; dx <= 1 && !touches; ++dx) {
                    int nx = ix + dx, ny = iy + dy;
                    if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                    if (L.at(nx, ny) == lab) touches = true;
                }
            if (touches) out[static_cast<std::size_t>(iy) * w + ix] = 1;
        }
    }
    return out;
}

bool regular_hole(const GridCompactum& K, const RegionLabeling& L, int hole_index) {
    auto boundary = hole_boundary_cells(K, L, hole_index);
    GridCompactum bset = K.with_mask(std::move(boundary));
    RegionLabeling bl = complement_components(bset);
    return bl.hole_count() == 1;
}

double hausdorff(const std::vector<Complex>& A, const std::vector<Complex>& B) {
    if (A.empty() || B.empty()) fail("EmptySet", "hausdorff distance of an empty set");
    auto directed = [](const std::vector<Complex>& X, const std::vector<Complex>& Y) {
        double worst = 0;
        for (const auto& x : X) {
            double best = kInf;
            for (const auto& y : Y) {
                double d = std::norm(x - y);
                if (d < best) {
                    best = d;
                    if (best <= worst) break;  // cannot raise the max
                }
            }
            if (best > worst) worst = best;
        }
        return worst;
    };
    return std::sqrt(std::max(directed(A, B), directed(B, A)));
}

std::string GridCompactum::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "compactum-bitmap 1\n";
    os << "origin " << origin.real() << " " << origin.imag() << "\n";
    os << "h " << h << "\n";
    os << "dims " << width << " " << height << "\n";
    for (int iy = 0; iy < height; ++iy) {
        bool any = false;
        for (int ix = 0; ix < width; ++ix)
            if (at(ix, iy)) {
                any = true;
                break;
            }
        if (!any) continue;
        os << "row " << iy;
        int ix = 0;
        while (ix < width) {
            if (!at(ix, iy)) {
                ++ix;
                continue;
            }
            int start = ix;
            while (ix < width && at(ix, iy)) ++ix;
            os << " " << start << ":" << (ix - start);
        }
        os << "\n";
    }
    return os.str();
}

GridCompactum GridCompactum::from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    int version = 0;
    GridCompactum g;
    if (!(is >> tag >> version) || tag != "compactum-bitmap" || version != 1)
        fail("ParseError", "not a compactum-bitmap v1 stream");
    double ore = 0, oim = 0;
    if (!(is >> tag >> ore >> oim) || tag != "origin") fail("ParseError", "missing origin line");
    if (!(is >> tag >> g.h) || tag != "h") fail("ParseError", "missing h line");
    if (!(is >> tag >> g.width >> g.height) || tag != "dims") fail("ParseError", "missing dims line");
    if (g.width <= 0 || g.height <= 0 || !(g.h > 0)) fail("ParseError", "bad bitmap header");
    g.origin = Complex(ore, oim);
    g.mask.assign(static_cast<std::size_t>(g.width) * g.height, 0);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int iy = 0;
        if (!(row >> tag >> iy) || tag != "row" || iy < 0 || iy >= g.height)
            fail("ParseError", "bad row line: " + line);
        std::string run;
        while (row >> run) {
            auto colon = run.find(':');
            if (colon == std::string::npos) fail("ParseError", "bad run: " + run);
            int start = std::stoi(run.substr(0, colon));
            int len = std::stoi(run.substr(colon + 1));
            if (start < 0 || len <= 0 || start + len > g.width)
                fail("ParseError", "run out of range: " + run);
            for (int ix = start; ix < start + len; ++ix)
                g.mask[static_cast<std::size_t>(iy) * g.width + ix] = 1;
        }
    }
    return g;
}

}  // namespace compacta
