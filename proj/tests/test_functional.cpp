#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "shapelab/closed_form.hpp"
#include "shapelab/errors.hpp"
#include "shapelab/functional.hpp"

using namespace shapelab;
using std::numbers::pi;

namespace {

const double kJ0 = 2.404825557695773;

// Direct evaluation of the definition, kept separate from f_q.
double fq_direct(double lambda, double t, double m, double q, int d) {
    return lambda * std::pow(t, q) / std::pow(m, (d * q + 2 * q - 2) / d);
}

}  // namespace

TEST_CASE("F_q examples") {
    const SpectralResult ball = ball_spectrum(BallSpec{2, 1.0});
    CHECK(f_q(ball, 1.0, 2).value == doctest::Approx(kJ0 * kJ0 / 8).epsilon(1e-12));
    CHECK(f_q(union_spectrum(IntervalUnionSpec{{1.0}}), 1.0, 1).value ==
          doctest::Approx(pi * pi / 12).epsilon(1e-14));
    for (int d = 1; d <= 6; ++d) {
        for (double q : {0.2, 0.5, 1.0, 1.7, 3.0}) {
            const FunctionalValue f = f_q(ball_spectrum(BallSpec{d, 0.8}), q, d);
            CHECK(f.value == doctest::Approx(f_q_ball(q, d)).epsilon(1e-12));
            CHECK(f.recompute() == doctest::Approx(f.value).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(f_q(ball, 0.0, 2), DomainError);
    CHECK_THROWS_AS(f_q(ball, -1.0, 2), DomainError);
}

TEST_CASE("F_q of a ball") {
    CHECK(f_q_ball(1.0, 2) == doctest::Approx(5.783185962946784 / 8).epsilon(1e-12));
    CHECK(f_q_ball(1.0, 1) == doctest::Approx(pi * pi / 12).epsilon(1e-13));
    // Independent closed form j^2 (d(d+2))^{-q} omega_d^{2(1-q)/d} at d = 3 (j = pi).
    const double w3 = 4.0 * pi / 3.0;
    CHECK(f_q_ball(0.7, 3) == doctest::Approx(pi * pi * std::pow(15.0, -0.7) * std::pow(w3, 0.2)).epsilon(1e-12));
}

TEST_CASE("F_q recomputes from its components and is scale invariant") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.05, 1.0), t_dist(0.1, 10.0), q_dist(0.1, 4.0);
    for (int k = 0; k < 200; ++k) {
        std::vector<double> r{1.0, u(rng), u(rng)};
        const int d = 2 + k % 3;
        const double q = q_dist(rng), t = t_dist(rng);
        const BallUnionSpec a{d, r};
        std::vector<double> rt = r;
        for (auto& x : rt) x *= t;
        const SpectralResult s = union_spectrum(a);
        const FunctionalValue f = f_q(s, q, d);
        CHECK(f.value == doctest::Approx(fq_direct(s.lambda(), s.torsion(), s.measure(), q, d)).epsilon(1e-12));
        CHECK(f_q(union_spectrum(BallUnionSpec{d, rt}), q, d).value == doctest::Approx(f.value).epsilon(1e-12));
        CHECK(s.product() < 1.0);
    }
}

TEST_CASE("Kohler-Jobin exponent matches the diagram lower line") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int d = 2; d <= 4; ++d) {
        const double q = 2.0 / (d + 2.0);
        CHECK(measure_exponent(q, d) == doctest::Approx(0.0));
        for (int k = 0; k < 50; ++k) {
            const SpectralResult s = union_spectrum(BallUnionSpec{d, {1.0, u(rng), u(rng), u(rng)}});
            const DiagramPoint p = normalized_coords(s, d);
            const double ratio = p.y / std::pow(p.x, (d + 2) / 2.0);
            CHECK(ratio == doctest::Approx(std::pow(f_q(s, q, d).value / f_q_ball(q, d), (d + 2) / 2.0)).epsilon(1e-11));
            CHECK(f_q(s, q, d).value >= f_q_ball(q, d) * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("normalised coordinates") {
    for (int d = 1; d <= 5; ++d) {
        const DiagramPoint b = normalized_coords(ball_spectrum(BallSpec{d, 2.5}), d);
        CHECK(b.x == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(b.y == doctest::Approx(1.0).epsilon(1e-12));
    }
    const DiagramPoint one = normalized_coords(union_spectrum(IntervalUnionSpec{{3.0}}), 1);
    CHECK(one.x == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(one.y == doctest::Approx(1.0).epsilon(1e-12));
    const DiagramPoint two = normalized_coords(union_spectrum(IntervalUnionSpec{{1.0, 1.0}}), 1);
    CHECK(two.x == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(two.y == doctest::Approx(0.25).epsilon(1e-12));
    const DiagramPoint rect = normalized_coords(rect_spectrum(RectSpec{{1.0, 0.3}}), 2);
    CHECK(rect.x > 0.0);
    CHECK(rect.x <= 1.0);
    CHECK(rect.y <= 1.0);
    CHECK(rect.y >= rect.x * rect.x);
}

TEST_CASE("G_q") {
    const std::vector<double> single{1.0};
    for (double q : {0.3, 1.0, 2.5}) CHECK(g_q(single, q) == doctest::Approx(1.0));
    const std::vector<double> four(4, 1.0);
    CHECK(g_q(four, 1.0) == doctest::Approx(1.0));
    CHECK(g_q(four, 0.5) == doctest::Approx(4.0));
    const double eps = 0.05;
    std::vector<double> swarm(1 + static_cast<std::size_t>(std::ceil(1 / (eps * eps))), eps);
    swarm[0] = 1.0;
    CHECK(g_q(swarm, 1.0) < 0.1);
    CHECK_THROWS_AS(g_q(std::vector<double>{0.0, 0.0}, 1.0), ValidationError);
    CHECK_THROWS_AS(g_q(std::vector<double>{1.0, -0.5}, 1.0), ValidationError);

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 300; ++k) {
        std::vector<double> a(2 + k % 7);
        for (auto& x : a) x = u(rng);
        const double q = 0.1 + 3.0 * u(rng);
        const double g = g_q(a, q);
        std::vector<double> b = a;
        std::reverse(b.begin(), b.end());
        for (auto& x : b) x *= 7.5;
        CHECK(g_q(b, q) == doctest::Approx(g).epsilon(1e-12));
        // Interval unions: F_q = pi^2 / 12^q * G_q.
        CHECK(f_q(union_spectrum(IntervalUnionSpec{a}), q, 1).value ==
              doctest::Approx(pi * pi / std::pow(12.0, q) * g).epsilon(1e-11));
        if (q <= 2.0 / 3.0) CHECK(g > 1.0);
    }
}

TEST_CASE("regime table") {
    const RegimeBounds r1 = regime_table(1.0, 2, false);
    CHECK(r1.q_class == QClass::unit);
    CHECK(r1.inf_kind == InfKind::zero);
    CHECK(r1.sup_kind == SupKind::one);
    CHECK(*r1.sup_value == 1.0);
    CHECK_FALSE(r1.conjectural);

    const RegimeBounds kj = regime_table(0.4, 2, false);
    CHECK(kj.q_class == QClass::kohler_jobin);
    CHECK(kj.inf_kind == InfKind::attained_ball);
    CHECK(*kj.inf_value == doctest::Approx(f_q_ball(0.4, 2)));
    CHECK(regime_table(0.5, 2, false).q_class == QClass::kohler_jobin);
    CHECK(regime_table(0.6, 2, false).q_class == QClass::sub_unit);
    CHECK(regime_table(0.6, 2, false).inf_kind == InfKind::zero);

    const RegimeBounds s2 = regime_table(2.0, 2, false);
    CHECK(s2.sup_kind == SupKind::finite_bound);
    CHECK(*s2.sup_value == doctest::Approx(1.0 / (8.0 * pi)).epsilon(1e-13));
    CHECK(*s2.sup_value == doctest::Approx(0.03979).epsilon(1e-4));

    const RegimeBounds c1 = regime_table(1.0, 3, true);
    CHECK(c1.conjectural);
    CHECK(*c1.sup_value == doctest::Approx(pi * pi / 12));
    CHECK(*c1.inf_value == doctest::Approx(pi * pi / 12 * 6.0 / 20.0));
    CHECK(conjectured_c_minus(2) == doctest::Approx(pi * pi / 24));
    CHECK(regime_table(2.0, 2, true).conjectural);
    CHECK(*regime_table(2.0, 2, true).sup_value == doctest::Approx(pi * pi / 12 / (8.0 * pi)));
}

TEST_CASE("inradius ratio bounds") {
    const auto [hi, none] = inradius_ratio_bounds(2.0, 2);
    REQUIRE(hi.has_value());
    CHECK_FALSE(none.has_value());
    // omega_1 pi^2 / (2 omega_2 2^2) 8^{-2} kJ0^2 with omega_1 = 2.
    CHECK(*hi == doctest::Approx(2.0 * pi * pi / (2.0 * pi * 4.0) / 64.0 * kJ0 * kJ0).epsilon(1e-12));
    CHECK(*hi <= 0.5);
    double prev = 0.0;
    for (double q : {1e2, 1e4, 1e6}) {
        const double v = *inradius_ratio_bounds(q, 2).first;
        CHECK(v > 0.0);
        CHECK(v <= 0.5);
        if (prev > 0) CHECK(std::abs(v - prev) < 0.02 * prev);
        prev = v;
    }
    CHECK(prev == doctest::Approx(2.0 * pi * pi / (8.0 * pi) / 8.0).epsilon(1e-4));
    const auto low = inradius_ratio_bounds(0.5, 2).second;
    REQUIRE(low.has_value());
    CHECK(*low == doctest::Approx(pi * std::pow(2.0, -1.5) / (kJ0 * kJ0)).epsilon(1e-12));
    CHECK_THROWS_AS(inradius_ratio_bounds(1.0, 2), DomainError);
}
