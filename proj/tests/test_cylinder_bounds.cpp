#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shapelab/closed_form.hpp"
#include "shapelab/cylinder_bounds.hpp"
#include "shapelab/errors.hpp"

using namespace shapelab;
using std::numbers::pi;

namespace {

CylinderSpec cyl(double area, double perim, double h, int d = 2, double R = 1.0) {
    CylinderSpec c;
    c.cross_measure = area;
    c.cross_perimeter = perim;
    c.smooth_radius = R;
    c.height = h;
    c.dim = d;
    return c;
}

}  // namespace

TEST_CASE("upper bound t1") {
    CHECK(upper_bound_t1(cyl(1, 2, 1)) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(upper_bound_t1(cyl(1, 2, 1)) > rect_torsion_series(RectSpec{{1.0, 1.0}}).value);
    CHECK(upper_bound_t1(cyl(2, 2, 0)) == 0.0);
}

TEST_CASE("lower bound t2") {
    // Direct evaluation of |A| h^3/12 - 31 2^{(d-4)/2} zeta(5)/pi^4 |dA| h^4.
    const double z5 = 1.0369277551433699263;
    const double expect = 10.0 / 12.0 - 31.0 * 0.5 * z5 * 2.0 / std::pow(pi, 4);
    CHECK(lower_bound_t2(cyl(10, 2, 1), 2) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(lower_bound_t2(cyl(10, 2, 1), 2) == doctest::Approx(0.503335793388897).epsilon(1e-12));
    const SeriesValue s = rect_torsion_series(RectSpec{{10.0, 1.0}});
    CHECK(lower_bound_t2(cyl(10, 2, 1), 2) <= s.value - s.tail_bound);
    CHECK(s.value + s.tail_bound <= upper_bound_t1(cyl(10, 2, 1)));
    // Correction is o(h^3).
    double prev = 1.0;
    for (double h : {1e-1, 1e-2, 1e-3}) {
        const double rel = 1.0 - lower_bound_t2(cyl(10, 2, h), 2) / upper_bound_t1(cyl(10, 2, h));
        CHECK(rel < prev);
        prev = rel;
    }
    CHECK(prev < 1e-3);
    CylinderSpec no_perim = cyl(1, 2, 1);
    no_perim.cross_perimeter.reset();
    CHECK_THROWS_AS(lower_bound_t2(no_perim, 2), MissingDataError);
}

TEST_CASE("two-sided bound t3") {
    const double z5 = 1.0369277551433699263;
    for (double L : {5.0, 10.0}) {
        const TorsionBracket b = two_sided_t3(cyl(L, 2, 1, 2, L / 2), 2);
        CHECK(b.center() == doctest::Approx(L / 12.0 - 31.0 * z5 / (2.0 * std::pow(pi, 5))).epsilon(1e-14));
        CHECK(b.width() == doctest::Approx(2.0 * L / (12.0 * L * L / 4.0)).epsilon(1e-14));
        const TorsionBracket r = rectangle_bracket(L, 1.0);
        CHECK(r.center() == doctest::Approx(b.center()).epsilon(1e-14));
    }
    const TorsionBracket disk = two_sided_t3(cyl(pi, 2 * pi, 0.2, 3, 1.0), 3);
    CHECK(disk.lower <= disk.upper);
    const TorsionBracket tiny = two_sided_t3(cyl(pi, 2 * pi, 1e-3, 3, 1.0), 3);
    CHECK(tiny.width() / tiny.center() < 1e-4);
    CylinderSpec no_r = cyl(1, 2, 1);
    no_r.smooth_radius.reset();
    CHECK_THROWS_AS(two_sided_t3(no_r, 2), MissingDataError);
}

TEST_CASE("series oracle lies in every bracket for long strips") {
    for (double L : {5.0, 7.5, 10.0, 20.0, 50.0}) {
        const SeriesValue s = rect_torsion_series(RectSpec{{L, 1.0}});
        const CylinderSpec c = strip_cylinder(L, 1.0);
        const double lo = s.value - s.tail_bound, hi = s.value + s.tail_bound;
        CHECK(std::max(lower_bound_t2(c, 2), 0.0) <= lo);
        CHECK(hi <= upper_bound_t1(c));
        CHECK(two_sided_t3(c, 2).lower <= lo);
        CHECK(hi <= two_sided_t3(c, 2).upper);
        CHECK(rectangle_bracket(L, 1.0).contains(s.value));
    }
}

TEST_CASE("bounds are monotone in area and height") {
    for (int d : {2, 3, 4}) {
        double prev_t1 = -1, prev_t2 = -1e9, prev_hi = -1;
        for (double area = 1.0; area <= 16.0; area *= 2.0) {
            const CylinderSpec c = cyl(area, 2.0, 0.5, d, 2.0);
            CHECK(upper_bound_t1(c) > prev_t1);
            CHECK(lower_bound_t2(c, d) > prev_t2);
            CHECK(two_sided_t3(c, d).upper > prev_hi);
            prev_t1 = upper_bound_t1(c);
            prev_t2 = lower_bound_t2(c, d);
            prev_hi = two_sided_t3(c, d).upper;
        }
        // t2 grows with h only while h < |A| / (16 c |dA|), c its h^4 coefficient.
        prev_t1 = -1;
        prev_t2 = -1e9;
        for (double h = 0.05; h <= 0.4; h *= 2.0) {
            const CylinderSpec c = cyl(4.0, 2.0, h, d, 2.0);
            CHECK(upper_bound_t1(c) > prev_t1);
            CHECK(lower_bound_t2(c, d) > prev_t2);
            CHECK(lower_bound_t2(c, d) <= upper_bound_t1(c));
            prev_t1 = upper_bound_t1(c);
            prev_t2 = lower_bound_t2(c, d);
        }
    }
}
