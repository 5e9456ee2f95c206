#include <doctest.h>

#include <cmath>
#include <numbers>

#include "shapelab/errors.hpp"
#include "shapelab/relaxed_q1.hpp"

using namespace shapelab;
using std::numbers::pi;

namespace {

const double j0sq = 5.783185962946784;

}  // namespace

TEST_CASE("relaxed eigenvalue") {
    CHECK(lambda_c({2, 0.0, 0.5}) == doctest::Approx(j0sq).epsilon(1e-12));
    CHECK(lambda_c({2, 100.0, 0.5}) == doctest::Approx(100.0 + j0sq).epsilon(1e-13));
    CHECK(lambda_c({3, 0.0, 0.5}) == doctest::Approx(pi * pi).epsilon(1e-12));
}

TEST_CASE("relaxed torsion lower bound") {
    CHECK(t_c_lower({2, 0.0, 0.5}) == doctest::Approx(pi * std::pow(0.5, 4) / 4).epsilon(1e-14));
    CHECK(t_c_lower({2, 0.0, 0.1}) <= pi / 8);
    CHECK(t_c_lower({2, 5.0, 1e-6}) < 1e-10);
    CHECK_THROWS_AS(t_c_lower({2, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(t_c_lower({2, -1.0, 0.5}), ValidationError);
    CHECK_THROWS_AS(t_c_lower({2, 0.0, 1.0}), ValidationError);
}

TEST_CASE("product bound") {
    CHECK(std::abs(product_bound({2, 1e6, 0.1}) - 0.6561) < 1e-3);
    CHECK(product_bound({2, 1e8, 0.01}) >= 0.96);
    CHECK(product_bound({2, 0.0, 0.999}) < 1e-10);
    CHECK(product_bound({2, 1e4, 0.1}) > 0.5);
    for (int d = 2; d <= 5; ++d) {
        for (double delta : {0.3, 0.1, 0.01}) {
            // The gap decays like delta^-2 / c.
            CHECK(std::abs(product_bound({d, 1e14, delta}) - std::pow(1 - delta, 2 * d)) < 1e-9);
        }
    }
}

TEST_CASE("product bound grows with c when delta^-2 exceeds lambda(B_1)") {
    for (int d : {2, 3, 4}) {
        for (double delta : {0.2, 0.1, 0.05}) {
            double prev = 0.0;
            for (double c = 0.0; c <= 1e8; c = c == 0.0 ? 1.0 : c * 10.0) {
                const double v = product_bound({d, c, delta});
                CHECK(v > prev);
                prev = v;
            }
        }
    }
    // Below the threshold the bound decreases in c.
    CHECK(product_bound({2, 10.0, 0.9}) < product_bound({2, 0.0, 0.9}));
}

TEST_CASE("sanity envelope") {
    for (int d : {2, 3, 5, 8}) {
        for (double delta = 0.01; delta < 1.0; delta += 0.07) {
            for (double c : {0.0, 0.5, 10.0, 1e3, 1e6, 1e10}) {
                const RelaxedParams p{d, c, delta};
                CHECK(product_bound(p) <= 1.0 + lambda_c({d, 0.0, delta}) * delta * delta);
            }
        }
    }
}

TEST_CASE("supremum demonstration") {
    for (int d : {2, 3, 4}) {
        for (double target : {0.5, 0.9, 0.99, 0.999}) {
            const RelaxedParams p = sup_demonstration(d, target);
            CHECK(p.delta > 0.0);
            CHECK(p.delta < 1.0);
            CHECK(p.c == doctest::Approx(std::pow(p.delta, -4.0)));
            CHECK(product_bound(p) > target);
        }
    }
    CHECK_THROWS_AS(sup_demonstration(2, 1.0), DomainError);
    CHECK_THROWS_AS(sup_demonstration(2, 0.0), DomainError);
}
