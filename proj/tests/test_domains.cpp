#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shapelab/domains.hpp"
#include "shapelab/errors.hpp"
#include "shapelab/raster.hpp"

using namespace shapelab;
using std::numbers::pi;

TEST_CASE("measure of closed-form families") {
    CHECK(measure(BallSpec{2, 1.0}) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(measure(RectSpec{{2.0, 3.0}}) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(measure(IntervalUnionSpec{{1.0, 0.5}}) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(measure(BallUnionSpec{3, {1.0, 0.0, 0.5}}) == doctest::Approx(4.0 * pi / 3.0 * 1.125).epsilon(1e-14));
}

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(unit_ball_volume(2) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-15));
    CHECK(unit_ball_volume(4) == doctest::Approx(pi * pi / 2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(5) == doctest::Approx(8.0 * pi * pi / 15.0).epsilon(1e-14));
    CHECK_THROWS_AS(unit_ball_volume(0), DomainError);
}

TEST_CASE("grid measure is cell count times spacing squared") {
    const GridSpec g = raster_rect(0.5, 0.25, 64);
    CHECK(g.mask.count() == 32u * 16u);
    CHECK(measure(g) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(validate(BallSpec{0, 1.0}), ValidationError);
    CHECK_THROWS_AS(validate(BallSpec{2, -1.0}), ValidationError);
    CHECK_THROWS_AS(validate(RectSpec{{1.0, 0.0}}), ValidationError);
    CHECK_THROWS_AS(validate(RectSpec{std::vector<double>(9, 1.0)}), ValidationError);
    CHECK_THROWS_AS(validate(IntervalUnionSpec{{0.0, 0.0}}), ValidationError);
    CHECK_THROWS_AS(validate(BallUnionSpec{1, {1.0}}), ValidationError);
    CHECK_THROWS_AS(validate(CylinderSpec{0.0}), ValidationError);
    CylinderSpec c;
    c.smooth_radius = -1.0;
    CHECK_THROWS_AS(validate(c), ValidationError);

    GridSpec g{Mask(4, 4), 0.1};
    CHECK_THROWS_AS(validate(g), ValidationError);  // no interior cell
    g.mask.set(0, 1);
    CHECK_THROWS_AS(validate(g), ValidationError);  // touches the border ring
    g = GridSpec{Mask(4, 4), 0.1};
    g.mask.set(1, 1);
    CHECK_NOTHROW(validate(g));
}

TEST_CASE("measure is homogeneous of degree d") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> t_dist(0.1, 10.0);
    const std::vector<DomainSpec> specs{BallSpec{3, 0.7}, RectSpec{{1.0, 2.0, 0.5}}, IntervalUnionSpec{{1.0, 0.25, 0.0}},
                                        BallUnionSpec{2, {1.0, 0.3}}};
    for (const auto& s : specs) {
        for (int k = 0; k < 20; ++k) {
            const double t = t_dist(rng);
            const int d = dimension(s);
            CHECK(measure(scaled(s, t)) == doctest::Approx(std::pow(t, d) * measure(s)).epsilon(1e-13));
        }
    }
}

TEST_CASE("union measure is additive") {
    const std::vector<double> r{0.9, 0.4, 0.1};
    double sum = 0.0;
    for (double x : r) sum += measure(BallSpec{2, x});
    CHECK(measure(BallUnionSpec{2, r}) == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("dimension and kind") {
    CHECK(dimension(RectSpec{{1.0, 1.0, 1.0}}) == 3);
    CHECK(dimension(IntervalUnionSpec{{1.0}}) == 1);
    CHECK(kind_name(GridSpec{}) == "grid");
    CHECK(kind_name(BallSpec{}) == "ball");
}
