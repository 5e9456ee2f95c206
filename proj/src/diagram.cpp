#include "shapelab/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "shapelab/closed_form.hpp"
#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

double cap_AB(double B, double p) {
    const double fl = std::floor(B);
    return fl + std::pow(B - fl, p);
}

double power_sum(const std::vector<double>& a, double p) {
    double s = 0.0;
    for (double v : a) s += std::pow(v, p);
    return s;
}

std::vector<double> trimmed(std::vector<double> a) {
    std::erase_if(a, [](double v) { return v <= 0.0; });
    std::sort(a.begin(), a.end(), std::greater<>());
    return a;
}

// Computed coordinates of a single ball can exceed 1 by rounding.
double check_x(double x, const char* who) {
    if (!(x > 0.0 && x <= 1.0 + 1e-12)) throw DomainError(std::string(who) + ": x must lie in (0, 1]");
    return std::min(x, 1.0);
}

}  // namespace

bool feasible_AB(double A, double B, double p) {
    if (!(p > 1.0)) throw DomainError("feasible_AB: p > 1 required");
    if (!(A >= 0.0) || !(B >= 0.0)) throw DomainError("feasible_AB: A, B >= 0 required");
    return A <= cap_AB(B, p);
}

std::vector<double> realize_AB(double A, double B, double p, double eps) {
    if (!(eps > 0.0)) throw DomainError("realize_AB: eps > 0 required");
    if (!feasible_AB(A, B, p)) throw FeasibilityError("realize_AB: A > floor(B) + frac(B)^p");
    if (B == 0.0) return {};

    const auto whole = static_cast<std::size_t>(std::floor(B));
    std::vector<double> extremal(whole, 1.0);
    if (B > static_cast<double>(whole)) extremal.push_back(B - static_cast<double>(whole));
    const double top = power_sum(extremal, p);
    if (std::abs(top - A) <= eps) return trimmed(extremal);

    // Smallest N with B^p / N^{p-1} <= A (or <= eps/2 when A = 0).
    const double goal = std::max(A, 0.5 * eps);
    auto n = static_cast<std::size_t>(std::ceil(std::pow(std::pow(B, p) / goal, 1.0 / (p - 1.0))));
    n = std::max<std::size_t>(n, 1);
    while (n > 1 && std::pow(B, p) / std::pow(static_cast<double>(n - 1), p - 1.0) <= goal) --n;
    while (std::pow(B, p) / std::pow(static_cast<double>(n), p - 1.0) > goal) ++n;
    if (n > 50'000'000) throw NumericalError("realize_AB: equal split needs too many entries");

    const std::size_t m = std::max(n, extremal.size());
    extremal.resize(m, 0.0);
    std::vector<double> equal(m, 0.0);
    std::fill(equal.begin(), equal.begin() + static_cast<std::ptrdiff_t>(n), B / static_cast<double>(n));
    if (std::abs(power_sum(equal, p) - A) <= eps) return trimmed(equal);

    // sum a^p is convex along the segment, >= A at t = 0 and <= A at t = 1.
    std::vector<double> a(m);
    auto at = [&](double t) {
        for (std::size_t k = 0; k < m; ++k) a[k] = (1.0 - t) * extremal[k] + t * equal[k];
        return power_sum(a, p);
    };
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = at(mid);
        if (std::abs(f - A) <= eps) return trimmed(a);
        (f > A ? lo : hi) = mid;
    }
    at(0.5 * (lo + hi));
    return trimmed(a);
}

std::pair<double, double> region_1d(double x) {
    x = check_x(x, "region_1d");
    const double low = std::pow(x, 1.5);
    return {low, low * cap_AB(1.0 / std::sqrt(x), 3.0)};
}

Region1D sample_region_1d(int n, double x_min) {
    if (n < 2) throw DomainError("sample_region_1d: n >= 2 required");
    check_x(x_min, "sample_region_1d");
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(x_min * std::pow(1.0 / x_min, static_cast<double>(i) / (n - 1)));
    for (int k = 1; 1.0 / (static_cast<double>(k) * k) >= x_min; ++k) xs.push_back(1.0 / (static_cast<double>(k) * k));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Region1D r;
    for (double x : xs) {
        const auto [lo, hi] = region_1d(x);
        r.samples.push_back({x, lo, hi});
    }
    return r;
}

Membership membership_1d(DiagramPoint pt) {
    pt.x = check_x(pt.x, "membership_1d");
    if (!(pt.y > 0.0 && pt.y <= 1.0 + 1e-12)) throw DomainError("membership_1d: y must lie in (0, 1]");
    const auto [lo, hi] = region_1d(pt.x);
    Membership m;
    m.inside = lo * (1.0 - 1e-12) <= pt.y && pt.y <= hi * (1.0 + 1e-12);
    if (!m.inside) return m;
    // x = (1 + B)^{-2}, y = (1 + A)(1 + B)^{-3}
    const double B = std::max(0.0, 1.0 / std::sqrt(pt.x) - 1.0);
    const double A = std::clamp(pt.y * std::pow(1.0 + B, 3.0) - 1.0, 0.0, cap_AB(B, 3.0));
    IntervalUnionSpec w{{1.0}};
    for (double a : realize_AB(A, B, 3.0, 1e-10)) w.lengths.push_back(a);
    m.witness = std::move(w);
    return m;
}

std::pair<double, double> region_bounds_d(double x, int d) {
    x = check_x(x, "region_bounds_d");
    if (d < 1 || d > 8) throw DomainError("region_bounds_d: 1 <= d <= 8 required");
    const double low = std::pow(x, (d + 2.0) / 2.0);
    return {low * cap_AB(std::pow(x, -d / 2.0), (d + 2.0) / d), low};
}

double upper_guide(double x, int d) {
    x = check_x(x, "upper_guide");
    return std::min(1.0, x / f_q_ball(1.0, d));
}

namespace {

DomainSpec random_union(int d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> r{1.0};
    const int mode = static_cast<int>(unit(rng) * 3.0);
    if (mode == 0) {
        // A few balls of comparable size: the upper part of the region.
        const int k = 1 + static_cast<int>(unit(rng) * 8.0);
        const double floor_r = unit(rng);
        for (int i = 0; i < k; ++i) r.push_back(floor_r + (1.0 - floor_r) * unit(rng));
    } else if (mode == 1) {
        // A swarm of small balls: towards the Kohler-Jobin line.
        const int k = 1 + static_cast<int>(std::exp(unit(rng) * std::log(400.0)));
        const double s = std::exp(std::log(0.01) * unit(rng));
        for (int i = 0; i < k; ++i) r.push_back(s * unit(rng));
    } else {
        // Geometric tail.
        const double rho = unit(rng);
        const int k = 1 + static_cast<int>(unit(rng) * 30.0);
        for (int i = 1; i <= k; ++i) r.push_back(std::pow(rho, i));
    }
    if (d == 1) return IntervalUnionSpec{std::move(r)};
    return BallUnionSpec{d, std::move(r)};
}

}  // namespace

std::vector<CloudPoint> ball_union_cloud(int d, int n_points, std::uint64_t seed, int jobs) {
    if (d < 1 || d > 8) throw DomainError("ball_union_cloud: 1 <= d <= 8 required");
    if (n_points < 1) throw DomainError("ball_union_cloud: n_points >= 1 required");
    std::vector<std::optional<CloudPoint>> out(static_cast<std::size_t>(n_points));
    auto work = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(i)};
            std::mt19937_64 rng(seq);
            DomainSpec spec = random_union(d, rng);
            const SpectralResult res = d == 1 ? union_spectrum(std::get<IntervalUnionSpec>(spec))
                                              : union_spectrum(std::get<BallUnionSpec>(spec));
            out[static_cast<std::size_t>(i)] = CloudPoint{normalized_coords(res, d), std::move(spec)};
        }
    };
    jobs = std::clamp(jobs, 1, n_points);
    if (jobs == 1) {
        work(0, n_points);
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(work, n_points * j / jobs, n_points * (j + 1) / jobs);
    }
    std::vector<CloudPoint> pts;
    pts.reserve(out.size());
    for (auto& p : out) pts.push_back(std::move(*p));
    return pts;
}

}  // namespace shapelab
