#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "compacta/error.hpp"
#include "compacta/grid.hpp"

using namespace compacta;
constexpr double kPi = std::numbers::pi;

namespace {

GridCompactum annulus_grid(double h = 0.02) {
    return rasterize(ShapeSpec::annulus({0, 0}, 1, 2), h);
}

bool near_set(Complex z, const std::vector<Complex>& pts, double tol) {
    for (const auto& p : pts)
        if (std::abs(z - p) <= tol) return true;
    return false;
}

std::vector<Complex> exact_circle(Complex c, double r, int n) {
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) out.push_back(c + std::polar(r, 2 * kPi * k / n));
    return out;
}

// Cells of K with at least one complement 4-neighbor.
std::vector<Complex> boundary_cell_centers(const GridCompactum& K) {
    std::vector<Complex> out;
    for (int iy = 0; iy < K.height; ++iy)
        for (int ix = 0; ix < K.width; ++ix) {
            if (!K.at(ix, iy)) continue;
            if (!K.at(ix + 1, iy) || !K.at(ix - 1, iy) || !K.at(ix, iy + 1) ||
                !K.at(ix, iy - 1))
                out.push_back(K.cell_center(ix, iy));
        }
    return out;
}

}  // namespace

TEST_CASE("rasterize: disk cell count matches the area oracle") {
    const double h = 0.05, r = 1.0;
    GridCompactum K = rasterize(ShapeSpec::disk({-1, 0}, r), h);
    // Oracle: area pi r^2 over cell area.
    double expected = kPi * r * r / (h * h);
    CHECK(std::abs(static_cast<double>(K.cell_count()) - expected) <= 0.03 * expected);
}

TEST_CASE("rasterize: circle band is a ring") {
    GridCompactum K = rasterize(ShapeSpec::circle({0, 0}, 1, 0.1), 0.02);
    CHECK(set_components(K).size() == 1);
    CHECK(complement_components(K).hole_count() == 1);
}

TEST_CASE("rasterize: too coarse and empty specs are rejected") {
    CHECK_THROWS_WITH_AS(rasterize(ShapeSpec::disk({0, 0}, 0.01), 0.05),
                         doctest::Contains("ResolutionTooCoarse"), Error);
    CHECK_THROWS_WITH_AS(rasterize(ShapeSpec::union_of({}), 0.05),
                         doctest::Contains("EmptySpec"), Error);
}

TEST_CASE("rasterize: margin ring is always empty") {
    GridCompactum K = annulus_grid();
    for (int ix = 0; ix < K.width; ++ix) {
        CHECK_FALSE(K.at(ix, 0));
        CHECK_FALSE(K.at(ix, K.height - 1));
    }
    for (int iy = 0; iy < K.height; ++iy) {
        CHECK_FALSE(K.at(0, iy));
        CHECK_FALSE(K.at(K.width - 1, iy));
    }
}

TEST_CASE("complement_components: canonical hole counts") {
    CHECK(complement_components(rasterize(ShapeSpec::disk({0, 0}, 1), 0.02)).hole_count() == 0);

    RegionLabeling annulus = complement_components(annulus_grid());
    REQUIRE(annulus.hole_count() == 1);
    CHECK(std::abs(annulus.holes[0].representative) < 0.03);

    GridCompactum tangent = rasterize(
        ShapeSpec::union_of(
            {ShapeSpec::circle({-1, 0}, 1, 0.05), ShapeSpec::circle({2, 0}, 2, 0.05)}),
        0.01);
    CHECK(complement_components(tangent).hole_count() == 2);
}

TEST_CASE("complement_components: labeling partitions the grid") {
    GridCompactum K = rasterize(
        ShapeSpec::union_of({ShapeSpec::annulus({0, 0}, 1, 2), ShapeSpec::disk({4, 0}, 0.5)}),
        0.02);
    RegionLabeling L = complement_components(K);
    std::int64_t set_cells = 0, unbounded = 0, hole_cells = 0;
    for (auto lab : L.label) {
        if (lab == RegionLabeling::kSet)
            ++set_cells;
        else if (lab == RegionLabeling::kUnbounded)
            ++unbounded;
        else
            ++hole_cells;
    }
    CHECK(set_cells == static_cast<std::int64_t>(K.cell_count()));
    std::int64_t holes_listed = 0;
    for (const auto& h : L.holes) holes_listed += h.cells;
    CHECK(hole_cells == holes_listed);
    CHECK(set_cells + unbounded + hole_cells == static_cast<std::int64_t>(K.mask.size()));
}

TEST_CASE("polynomial_hull: idempotent, monotone, and hole-free") {
    for (const auto& shape :
         {ShapeSpec::annulus({0, 0}, 1, 2),
          ShapeSpec::union_of(
              {ShapeSpec::circle({-1, 0}, 1, 0.06), ShapeSpec::circle({2, 0}, 2, 0.06)}),
          ShapeSpec::segment({0, 0}, {1, 1}, 0.06)}) {
        GridCompactum K = rasterize(shape, 0.02);
        GridCompactum hull = polynomial_hull(K);
        for (std::size_t i = 0; i < K.mask.size(); ++i)
            if (K.mask[i]) CHECK(hull.mask[i]);
        GridCompactum hull2 = polynomial_hull(hull);
        CHECK(hull2.mask == hull.mask);
        CHECK(complement_components(hull).hole_count() == 0);
    }
}

TEST_CASE("polynomial_hull: annulus fills to the full disk") {
    GridCompactum K = annulus_grid();
    GridCompactum hull = polynomial_hull(K);
    for (int iy = 0; iy < K.height; ++iy)
        for (int ix = 0; ix < K.width; ++ix) {
            double d = std::abs(K.cell_center(ix, iy));
            if (d <= 2 - K.h) CHECK(hull.at(ix, iy));
            if (d > 2 + K.h) CHECK_FALSE(hull.at(ix, iy));
        }
}

TEST_CASE("trace_boundary: annulus region yields two opposite cycles") {
    GridCompactum K = annulus_grid();
    auto cycles = trace_boundary(K, K.mask, true);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0].orientation * cycles[1].orientation == -1);
    for (const auto& c : cycles) {
        REQUIRE(c.vertices.size() >= 8);
        for (std::size_t i = 0; i < c.vertices.size(); ++i) {
            Complex a = c.vertices[i];
            Complex b = c.vertices[(i + 1) % c.vertices.size()];
            CHECK(std::abs(b - a) <= 2 * K.h + 1e-12);
        }
        // Simple polyline: all vertices distinct.
        std::set<std::pair<long, long>> seen;
        for (const auto& v : c.vertices) {
            auto key = std::make_pair(std::lround(v.real() * 1e7), std::lround(v.imag() * 1e7));
            CHECK(seen.insert(key).second);
        }
    }
}

TEST_CASE("trace_boundary: disk region yields one cycle, tiny regions fail") {
    GridCompactum K = rasterize(ShapeSpec::disk({0, 0}, 1), 0.02);
    CHECK(trace_boundary(K, K.mask, true).size() == 1);

    std::vector<std::uint8_t> two(K.mask.size(), 0);
    two[K.width * 10 + 10] = 1;
    two[K.width * 10 + 11] = 1;
    CHECK_THROWS_WITH_AS(trace_boundary(K, two, true), doctest::Contains("DegenerateRegion"),
                         Error);
}

TEST_CASE("holes of the boundary set of a polynomially convex compactum trace to one cycle") {
    GridCompactum K = rasterize(
        ShapeSpec::union_of({ShapeSpec::disk({0, 0}, 1), ShapeSpec::disk({3, 0}, 0.8)}), 0.02);
    REQUIRE(complement_components(K).hole_count() == 0);
    std::vector<std::uint8_t> rim(K.mask.size(), 0);
    for (int iy = 0; iy < K.height; ++iy)
        for (int ix = 0; ix < K.width; ++ix) {
            if (!K.at(ix, iy)) continue;
            bool edge = false;
            for (int dy = -1; dy <= 1 && !edge; ++dy)
                for (int dx = -1; dx <= 1 && !edge; ++dx)
                    if (!K.at(ix + dx, iy + dy)) edge = true;
            if (edge) rim[static_cast<std::size_t>(iy) * K.width + ix] = 1;
        }
    GridCompactum rim_set = K.with_mask(rim);
    RegionLabeling rl = complement_components(rim_set);
    REQUIRE(rl.hole_count() == 2);
    for (int j = 0; j < rl.hole_count(); ++j) {
        std::vector<std::uint8_t> hole(rl.label.size(), 0);
        for (std::size_t i = 0; i < rl.label.size(); ++i)
            if (rl.label[i] == RegionLabeling::kHoleBase + j) hole[i] = 1;
        CHECK(trace_boundary(rim_set, hole, false).size() == 1);
    }
}

TEST_CASE("outer_boundary: disk boundary approximates the circle") {
    const double h = 0.02;
    GridCompactum K = rasterize(ShapeSpec::disk({0, 0}, 1), h);
    auto cycles = outer_boundary(K);
    REQUIRE(cycles.size() == 1);
    auto circle = exact_circle({0, 0}, 1, 2000);
    CHECK(hausdorff(cycles[0].vertices, circle) <= 2 * h);
}

TEST_CASE("outer_boundary: annulus keeps only the outer circle") {
    const double h = 0.02;
    auto cycles = outer_boundary(annulus_grid(h));
    REQUIRE(cycles.size() == 1);
    auto circle = exact_circle({0, 0}, 2, 3000);
    CHECK(hausdorff(cycles[0].vertices, circle) <= 2 * h);
}

TEST_CASE("outer_boundary: tangent disks join into one cycle through the tangency") {
    const double h = 0.01;
    GridCompactum K = rasterize(
        ShapeSpec::union_of({ShapeSpec::disk({-1, 0}, 1), ShapeSpec::disk({2, 0}, 2)}), h);
    auto cycles = outer_boundary(K);
    REQUIRE(cycles.size() == 1);
    // Geometric oracle: the boundary is the union of the two circles.
    auto oracle = exact_circle({-1, 0}, 1, 4000);
    auto right = exact_circle({2, 0}, 2, 8000);
    oracle.insert(oracle.end(), right.begin(), right.end());
    CHECK(hausdorff(cycles[0].vertices, oracle) <= 2 * h);
    CHECK(near_set({0, 0}, cycles[0].vertices, 2 * h));
}

TEST_CASE("outer_boundary vertices stay near the boundary cells of K") {
    GridCompactum K = rasterize(
        ShapeSpec::union_of(
            {ShapeSpec::annulus({0, 0}, 1, 2), ShapeSpec::circle({0, 0}, 0.5, 0.06)}),
        0.02);
    auto rim = boundary_cell_centers(K);
    for (const auto& c : outer_boundary(K))
        for (const auto& v : c.vertices) CHECK(near_set(v, rim, 2 * K.h));
}

TEST_CASE("regular_hole: annulus hole is regular, sandwiched hole is not") {
    GridCompactum A = annulus_grid();
    RegionLabeling la = complement_components(A);
    REQUIRE(la.hole_count() == 1);
    CHECK(regular_hole(A, la, 0));

    GridCompactum K = rasterize(
        ShapeSpec::union_of(
            {ShapeSpec::annulus({0, 0}, 1, 2), ShapeSpec::circle({0, 0}, 0.5, 0.06)}),
        0.02);
    RegionLabeling L = complement_components(K);
    REQUIRE(L.hole_count() == 2);
    // Identify the middle (annular) hole by its representative radius.
    int middle = std::abs(L.holes[0].representative) > 0.3 ? 0 : 1;
    // Oracle on exact geometry: the middle hole's boundary consists of two
    // concentric rings, so its boundary set has two holes.
    CHECK_FALSE(regular_hole(K, L, middle));
    CHECK(regular_hole(K, L, 1 - middle));

    CHECK_THROWS_WITH_AS(regular_hole(A, la, 5), doctest::Contains("NoSuchHole"), Error);
}

TEST_CASE("hausdorff: basic identities and the concentric-circle oracle") {
    CHECK(hausdorff({{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}) == 0);
    CHECK(hausdorff({{0, 0}}, {{3, 0}}) == 3);
    const double h = 0.01;
    auto a = exact_circle({0, 0}, 1.0, 1000);
    auto b = exact_circle({0, 0}, 1.5, 1000);
    CHECK(std::abs(hausdorff(a, b) - 0.5) <= 2 * h);
    CHECK_THROWS_WITH_AS(hausdorff({}, {{0, 0}}), doctest::Contains("EmptySet"), Error);
}

TEST_CASE("bitmap text round trip") {
    GridCompactum K = rasterize(
        ShapeSpec::union_of({ShapeSpec::annulus({0, 0}, 1, 2), ShapeSpec::disk({3, 1}, 0.4)}),
        0.04);
    GridCompactum back = GridCompactum::from_text(K.to_text());
    CHECK(back.width == K.width);
    CHECK(back.height == K.height);
    CHECK(back.h == K.h);
    CHECK(back.origin == K.origin);
    CHECK(back.mask == K.mask);
}

TEST_CASE("shape JSON round trip preserves the raster") {
    ShapeSpec s = ShapeSpec::union_of(
        {ShapeSpec::circle({-1, 0}, 1, 0.08),
         ShapeSpec::translated({0.5, 0.25}, ShapeSpec::scaled(2.0, ShapeSpec::disk({1, 0}, 0.5))),
         ShapeSpec::segment({0, -1}, {1, -2}, 0.08),
         ShapeSpec::spiral(ShapeSpec::SpiralKind::Accessible, 10, 0.08)});
    ShapeSpec back = ShapeSpec::from_json(s.to_json());
    GridCompactum a = rasterize(s, 0.04);
    GridCompactum b = rasterize(back, 0.04);
    CHECK(a.mask == b.mask);
    CHECK(a.origin == b.origin);
}

TEST_CASE("shape DSL parse errors are reported") {
    CHECK_THROWS_WITH_AS(ShapeSpec::from_json("{oops"), doctest::Contains("ParseError"), Error);
    CHECK_THROWS_WITH_AS(ShapeSpec::from_json(R"({"type":"hexagon"})"),
                         doctest::Contains("unknown shape type"), Error);
    CHECK_THROWS_WITH_AS(ShapeSpec::from_json(R"({"type":"disk","center":[0,0]})"),
                         doctest::Contains("missing numeric field"), Error);
}
