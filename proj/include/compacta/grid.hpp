#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "compacta/shape.hpp"
#include "compacta/types.hpp"

namespace compacta {

// Bitmap model of a compact set. Cell (ix, iy) has center
// origin + h*(ix + i*iy); the outermost ring of cells is always empty,
// so boundedness is explicit in the data.
//
// Connectivity convention (fixed): set cells are 8-connected,
// complement cells are 4-connected.
struct GridCompactum {
    Complex origin{};
    double h = 0;
    int width = 0, height = 0;
    std::vector<std::uint8_t> mask;  // row-major, iy*width + ix

    bool contains(int ix, int iy) const {
        return ix >= 0 && ix < width && iy >= 0 && iy < height;
    }
    bool at(int ix, int iy) const {
        return contains(ix, iy) && mask[static_cast<std::size_t>(iy) * width + ix];
    }
    Complex cell_center(int ix, int iy) const {
        return origin + Complex(h * ix, h * iy);
    }
    // Cell whose center is nearest to z; may be out of range.
    void locate(Complex z, int& ix, int& iy) const;

    std::size_t cell_count() const;
    std::vector<Complex> cell_centers() const;

    // Same geometry, different mask.
    GridCompactum with_mask(std::vector<std::uint8_t> m) const;

    std::string to_text() const;                     // run-length bitmap
    static GridCompactum from_text(const std::string&);
};

struct HoleInfo {
    std::int64_t cells = 0;
    Complex representative{};   // deepest cell center, deterministic tie-break
    int rep_ix = 0, rep_iy = 0;
};

// Complement decomposition: label 0 = set, 1 = unbounded component,
// 2+j = hole j (0-based). Every cell is labeled.
struct RegionLabeling {
    static constexpr std::int32_t kSet = 0;
    static constexpr std::int32_t kUnbounded = 1;
    static constexpr std::int32_t kHoleBase = 2;

    int width = 0, height = 0;
    std::vector<std::int32_t> label;
    std::vector<HoleInfo> holes;

    std::int32_t at(int ix, int iy) const {
        return label[static_cast<std::size_t>(iy) * width + ix];
    }
    int hole_count() const { return static_cast<int>(holes.size()); }
    // -1 when the cell is not in any hole.
    int hole_index(int ix, int iy) const {
        auto l = at(ix, iy);
        return l >= kHoleBase ? l - kHoleBase : -1;
    }
};

// Oriented closed polyline along a region's cell frontier. Vertices are
// boundary-edge midpoints; ambiguous (pinch) corners are cut, so the
// polyline is simple. Positive orientation = counterclockwise.
struct BoundaryCycle {
    std::vector<Complex> vertices;
    bool closed = true;
    int orientation = 0;   // +1 ccw, -1 cw; enclosed region lies left of travel
    double signed_area = 0;

    double length() const;
};

GridCompactum rasterize(const ShapeSpec& spec, double h);

RegionLabeling complement_components(const GridCompactum& K);

// K plus all of its holes. Idempotent.
GridCompactum polynomial_hull(const GridCompactum& K);
GridCompactum polynomial_hull(const GridCompactum& K, const RegionLabeling& labeling);

// Boundary of an arbitrary cell set inside K's frame. `region` is a
// mask over the same grid; `eight_connected` states the region's own
// connectivity (set cells: true, complement cells: false). Regions of
// fewer than 4 cells are rejected (DegenerateRegion).
std::vector<BoundaryCycle> trace_boundary(const GridCompactum& frame,
                                          const std::vector<std::uint8_t>& region,
                                          bool eight_connected);

// Same, without the minimum-size precondition (single cells trace to a
// diamond); for internal consumers that walk raster specks.
std::vector<BoundaryCycle> trace_boundary_unchecked(const GridCompactum& frame,
                                                    const std::vector<std::uint8_t>& region,
                                                    bool eight_connected);

// Boundary cycles of polynomial_hull(K): exactly one per hull component.
std::vector<BoundaryCycle> outer_boundary(const GridCompactum& K);

// A hole is regular when its boundary-cell set has exactly one hole.
bool regular_hole(const GridCompactum& K, const RegionLabeling& labeling, int hole_index);

// Cells of K that touch (8-adjacency) the given hole.
std::vector<std::uint8_t> hole_boundary_cells(const GridCompactum& K,
                                              const RegionLabeling& labeling,
                                              int hole_index);

// Symmetric Hausdorff distance between finite point sets.
double hausdorff(const std::vector<Complex>& A, const std::vector<Complex>& B);

// 8-connected components of the set cells, in row-major discovery order.
std::vector<std::vector<std::uint8_t>> set_components(const GridCompactum& K);

}  // namespace compacta
