#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shapelab/errors.hpp"
#include "shapelab/fd_solver.hpp"
#include "shapelab/raster.hpp"
#include "shapelab/thin_convex.hpp"

using namespace shapelab;
using std::numbers::pi;

namespace {

const ConvexBase unit_interval = ConvexBase::interval(0.0, 1.0);
const ConvexBase triangle = ConvexBase::polygon({{0, 0}, {1, 0}, {0, 1}});
const ConvexBase square = ConvexBase::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

}  // namespace

TEST_CASE("thin asymptotics") {
    const ConcaveProfile one = ConcaveProfile::sample(unit_interval, 100, [](double, double) { return 1.0; });
    for (double eps : {0.5, 0.01}) {
        const ThinAsymptotics a = thin_asymptotics(one, eps);
        CHECK(a.f1 == doctest::Approx(pi * pi / 12).epsilon(1e-13));
        CHECK(a.lambda == doctest::Approx(pi * pi / (eps * eps)).epsilon(1e-13));
        CHECK(a.torsion == doctest::Approx(eps * eps * eps / 12).epsilon(1e-13));
    }
    const ConcaveProfile tent = cone_function(unit_interval, {0.5, 0.0}, 2001);
    CHECK(thin_asymptotics(tent, 0.1).f1 == doctest::Approx(pi * pi / 24).epsilon(1e-5));
    const ConcaveProfile tri = cone_function(triangle, {0.3, 0.3}, 515);
    CHECK(thin_asymptotics(tri, 0.1).f1 == doctest::Approx(pi * pi / 12 * 0.3).epsilon(1e-3));
    const ConcaveProfile zero(unit_interval, 10);
    CHECK_THROWS_AS(thin_asymptotics(zero, 0.1), GeometryError);
    CHECK_THROWS_AS(thin_asymptotics(one, 0.0), DomainError);
}

TEST_CASE("cone functions") {
    const ConcaveProfile tent = cone_function(unit_interval, {0.5, 0.0}, 4);
    // Cells centred at 1/8, 3/8, 5/8, 7/8.
    CHECK(tent.value(0) == doctest::Approx(0.25));
    CHECK(tent.value(1) == doctest::Approx(0.75));
    const ConcaveProfile tent8 = cone_function(unit_interval, {0.5, 0.0}, 2);
    CHECK(tent8.value(0) == doctest::Approx(0.5));  // h(0.25)

    const ConcaveProfile sq = cone_function(square, {0.5, 0.5}, 101);
    CHECK(sq.sup_norm() == doctest::Approx(1.0));
    CHECK(sq.concavity_defect() < 1e-9);
    // Boundary row: distance half a cell from the edge.
    CHECK(sq.value(50) == doctest::Approx(1.0 / 101).epsilon(1e-9));

    // Super-level sets are homothets: |{h > s}| = (1 - s)^2 |A|, up to lattice error.
    const ConcaveProfile tri = cone_function(triangle, {0.3, 0.3}, 400);
    for (double s : {0.2, 0.5, 0.8}) {
        CHECK(std::abs(tri.level_measure(s) - (1 - s) * (1 - s) * 0.5) < 0.01 * 0.5);
    }
    CHECK_THROWS_AS(cone_function(square, {1.0, 0.5}, 32), GeometryError);
    CHECK_THROWS_AS(cone_function(square, {1.5, 0.5}, 32), GeometryError);
}

TEST_CASE("ratio of int h^3 to int h") {
    CHECK(cone_ratio(2) == doctest::Approx(0.5));
    CHECK(cone_ratio(3) == doctest::Approx(0.3));
    CHECK_THROWS_AS(cone_ratio(1), DomainError);
    const ConcaveProfile one = ConcaveProfile::sample(triangle, 64, [](double, double) { return 2.0; });
    CHECK(ratio_h3_h1(one) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ratio_h3_h1(cone_function(unit_interval, {0.3, 0.0}, 2045)) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(ratio_h3_h1(cone_function(triangle, {0.3, 0.3}, 515)) == doctest::Approx(0.3).epsilon(1e-3));

    std::mt19937_64 rng(77);
    for (int k = 0; k < 60; ++k) {
        const ConvexBase& b = k % 3 == 0 ? unit_interval : (k % 3 == 1 ? triangle : square);
        const int d = b.dim() + 1;
        const ConcaveProfile p = random_concave_profile(b, d == 2 ? 1024 : 96, rng);
        CHECK(p.concavity_defect() < 1e-9);
        CHECK(p.integral() >= 0.01);
        const double r = ratio_h3_h1(p);
        CHECK(r >= cone_ratio(d) - 2e-3);
        CHECK(r <= 1.0 + 1e-12);
    }
}

TEST_CASE("radial rearrangement of a radial profile is itself") {
    const ConvexBase disk = ConvexBase::disk({0.0, 0.0}, 0.5);
    const ConcaveProfile p =
        ConcaveProfile::sample(disk, 256, [](double x, double y) { return 1.0 - 0.8 * std::hypot(x, y) / 0.5; });
    const ConcaveProfile r = radial_rearrangement(p);
    REQUIRE(r.size() == p.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.inside(k) && r.inside(k)) worst = std::max(worst, std::abs(p.value(k) - r.value(k)));
    }
    CHECK(worst < 1e-2);

    const ConcaveProfile sym = cone_function(ConvexBase::interval(-1.0, 1.0), {0.0, 0.0}, 501);
    const ConcaveProfile s = radial_rearrangement(sym);
    for (std::size_t k = 0; k < sym.size(); ++k) CHECK(std::abs(s.value(k) - sym.value(k)) < 1e-12);
}

TEST_CASE("rearrangement preserves level sets and integrals") {
    std::mt19937_64 rng(31);
    const std::vector<ConvexBase> bases{unit_interval, triangle, square, ConvexBase::disk({0.5, 0.5}, 0.5)};
    for (const auto& b : bases) {
        for (int k = 0; k < 2; ++k) {
            const ConcaveProfile p = random_concave_profile(b, 512, rng);
            const ConcaveProfile r = radial_rearrangement(p);
            CHECK(r.base().measure() == doctest::Approx(b.measure()).epsilon(1e-12));
            CHECK(std::abs(r.integral(1.0) / p.integral(1.0) - 1.0) < 5e-3);
            CHECK(std::abs(r.integral(3.0) / p.integral(3.0) - 1.0) < 5e-3);
            CHECK(r.concavity_defect() < 1e-6);
            const double m = p.sup_norm();
            for (double s : {0.1, 0.4, 0.7, 0.95}) {
                CHECK(std::abs(r.level_measure(s * m) - p.level_measure(s * m)) < 0.01 * b.measure());
            }
        }
    }
}

TEST_CASE("cones rearrange to affine radial profiles") {
    const ConcaveProfile sq = cone_function(square, {0.5, 0.5}, 512);
    CHECK(radial_affine_defect(radial_rearrangement(sq)) < 1e-2);
    const ConcaveProfile tri = cone_function(triangle, {0.3, 0.3}, 512);
    CHECK(radial_affine_defect(radial_rearrangement(tri)) < 1e-2);
    // A profile far from any cone is far from affine.
    const ConcaveProfile flat = ConcaveProfile::sample(square, 128, [](double, double) { return 1.0; });
    CHECK(radial_affine_defect(radial_rearrangement(flat)) > 0.5);
}

TEST_CASE("thin rectangles approach the slab constant") {
    // Spacing 1/320 makes every width a whole number of cells.
    double prev = 1.0;
    for (int cells : {64, 32, 16}) {
        const SpectralResult r = spectrum_of_grid(raster_rect(1.0, cells / 320.0, 320));
        const double gap = std::abs(r.product() - pi * pi / 12);
        CHECK(gap < prev);
        prev = gap;
    }
    CHECK(prev < 0.05);
}
