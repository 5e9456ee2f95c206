#include "shapelab/thin_convex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

constexpr double kPi = std::numbers::pi;

double integral_or_throw(const ConcaveProfile& p, const char* who) {
    const double i1 = p.integral(1.0);
    if (!(i1 > 0.0)) throw GeometryError(std::string(who) + ": degenerate profile (int h = 0)");
    return i1;
}

// Gauge-type cone value 1 - |x - p| / rho(x), rho the distance from the peak
// to the boundary along the ray through x.
double disk_cone(const ConvexBase& b, Point2 peak, Point2 x) {
    const double dx = x.x - peak.x, dy = x.y - peak.y;
    const double r = std::hypot(dx, dy);
    if (r == 0.0) return 1.0;
    const double ux = dx / r, uy = dy / r;
    const double px = peak.x - b.center().x, py = peak.y - b.center().y;
    const double bdot = ux * px + uy * py;
    const double c = px * px + py * py - b.radius() * b.radius();
    const double rho = -bdot + std::sqrt(bdot * bdot - c);
    return std::max(0.0, 1.0 - r / rho);
}

double polygon_cone(const ConvexBase& b, Point2 peak, Point2 x) {
    const auto& v = b.vertices();
    double h = 1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2 a = v[i], c = v[(i + 1) % v.size()];
        // Signed distance (times edge length) to the edge line, positive inside.
        auto dist = [&](Point2 p) { return (c.x - a.x) * (p.y - a.y) - (c.y - a.y) * (p.x - a.x); };
        h = std::min(h, dist(x) / dist(peak));
    }
    return std::max(0.0, h);
}

// Exact rearrangement of the piecewise-linear interpolant in base dimension 1.
ConcaveProfile rearrange_1d(const ConcaveProfile& p) {
    const int n = p.n();
    const double lo = p.base().lo(), hi = p.base().hi();
    std::vector<double> xs(n + 2), ys(n + 2);
    xs[0] = lo;
    xs[n + 1] = hi;
    for (int k = 0; k < n; ++k) {
        xs[k + 1] = p.cell_center(k).x;
        ys[k + 1] = p.value(k);
    }
    ys[0] = std::max(0.0, ys[1] + (ys[1] - ys[2]) * (xs[1] - xs[0]) / (xs[2] - xs[1]));
    ys[n + 1] = std::max(0.0, ys[n] + (ys[n] - ys[n - 1]) * (xs[n + 1] - xs[n]) / (xs[n] - xs[n - 1]));
    const auto peak = static_cast<std::size_t>(std::max_element(ys.begin(), ys.end()) - ys.begin());

    // a(t): left crossing, b(t): right crossing of the level t.
    auto left = [&](double t) {
        if (t <= ys[0]) return xs[0];
        std::size_t i = 1;
        while (i < peak && ys[i] < t) ++i;
        const double f = (t - ys[i - 1]) / (ys[i] - ys[i - 1]);
        return xs[i - 1] + f * (xs[i] - xs[i - 1]);
    };
    auto right = [&](double t) {
        if (t <= ys[n + 1]) return xs[n + 1];
        std::size_t i = n;
        while (i > peak && ys[i] < t) --i;
        const double f = (t - ys[i + 1]) / (ys[i] - ys[i + 1]);
        return xs[i + 1] + f * (xs[i] - xs[i + 1]);
    };

    // Between consecutive node values both crossings move linearly.
    std::vector<double> levels(ys.begin(), ys.end());
    levels.push_back(0.0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::vector<double> mu(levels.size());
    for (std::size_t k = 0; k < levels.size(); ++k) {
        mu[k] = levels[k] >= ys[peak] ? 0.0 : right(levels[k]) - left(levels[k]);
    }

    const double half = 0.5 * (hi - lo);
    ConcaveProfile out(ConvexBase::interval(-half, half), n);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * std::abs(out.cell_center(k).x);
        // mu is nonincreasing in the level; find the level where mu = s.
        std::size_t j = 1;
        while (j + 1 < levels.size() && mu[j] > s) ++j;
        double v;
        if (mu[j] > s || mu[j - 1] <= s) {
            v = mu[j - 1] <= s ? levels[j - 1] : levels[j];
        } else {
            const double f = (mu[j - 1] - s) / (mu[j - 1] - mu[j]);
            v = levels[j - 1] + f * (levels[j] - levels[j - 1]);
        }
        out.set_value(k, v);
    }
    return out;
}

ConcaveProfile rearrange_2d(const ConcaveProfile& p) {
    std::vector<double> v;
    v.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.inside(k)) v.push_back(p.value(k));
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    const double area = p.base().measure();
    const double per = p.cell_area();
    const double radius = std::sqrt(area / kPi);
    // Sorted samples fill concentric annuli. Lattice aliasing makes the values
    // zigzag around the true profile at the cell scale, so the annuli are
    // pooled into rings four output cells wide (area centroid, mean value)
    // before taking the least concave majorant. Tied values stay together.
    const double ring = 8.0 * radius / p.n();
    std::vector<Point2> hull{{0.0, v.front()}};  // (r, value)
    auto push = [&](Point2 q) {
        while (hull.size() >= 2) {
            const Point2 a = hull[hull.size() - 2], b = hull.back();
            if ((b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x) < 0.0) break;
            hull.pop_back();
        }
        hull.push_back(q);
    };
    long bin = -1;
    double r_lo = 0.0, r_hi = 0.0, sum = 0.0;
    std::size_t count = 0;
    auto flush = [&] {
        if (count == 0) return;
        const double rc = 2.0 / 3.0 * (r_hi * r_hi * r_hi - r_lo * r_lo * r_lo) / (r_hi * r_hi - r_lo * r_lo);
        push({rc, sum / static_cast<double>(count)});
        sum = 0.0;
        count = 0;
    };
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[i] - v[j] <= 1e-12 * v.front()) ++j;
        const double r_in = std::sqrt(static_cast<double>(i) * per / kPi);
        const double r_out = std::sqrt(static_cast<double>(j) * per / kPi);
        const long b = static_cast<long>(0.5 * (r_in + r_out) / ring);
        if (b != bin) {
            flush();
            bin = b;
            r_lo = r_in;
        }
        r_hi = r_out;
        sum += v[i] * static_cast<double>(j - i);
        count += j - i;
        i = j;
    }
    flush();
    // Close at the rim with h = 0 when the last segment would cross zero early.
    if (hull.size() >= 2) {
        const Point2 a = hull[hull.size() - 2], b = hull.back();
        if (b.y + (radius - b.x) * (b.y - a.y) / (b.x - a.x) < 0.0) {
            const Point2 q{radius, 0.0};
            while (hull.size() >= 2) {
                const Point2 u = hull[hull.size() - 2], w = hull.back();
                if ((w.x - u.x) * (q.y - u.y) - (w.y - u.y) * (q.x - u.x) < 0.0) break;
                hull.pop_back();
            }
            hull.push_back(q);
        }
    }
    auto envelope = [&](double r) {
        if (hull.size() == 1 || r <= hull.front().x) return hull.front().y;
        auto it = std::lower_bound(hull.begin(), hull.end(), r, [](Point2 a, double x) { return a.x < x; });
        if (it == hull.end()) --it;
        const Point2 a = *(it - 1), b = *it;
        return std::max(0.0, a.y + (r - a.x) / (b.x - a.x) * (b.y - a.y));
    };
    return ConcaveProfile::sample(ConvexBase::disk({0.0, 0.0}, radius), p.n(),
                                  [&](double x, double y) { return envelope(std::hypot(x, y)); });
}

}  // namespace

ThinAsymptotics thin_asymptotics(const ConcaveProfile& profile, double eps) {
    if (!(eps > 0.0)) throw DomainError("thin_asymptotics: eps > 0 required");
    const double i1 = integral_or_throw(profile, "thin_asymptotics");
    const double i3 = profile.integral(3.0);
    const double m = profile.sup_norm();
    return {kPi * kPi / (eps * eps * m * m), eps * eps * eps / 12.0 * i3, kPi * kPi / 12.0 * i3 / (m * m * i1)};
}

ConcaveProfile cone_function(const ConvexBase& base, Point2 peak, int grid_n) {
    if (!base.contains(peak)) throw GeometryError("cone_function: peak must lie strictly inside the base");
    switch (base.kind()) {
        case ConvexBase::Kind::interval: {
            const double lo = base.lo(), hi = base.hi(), p = peak.x;
            return ConcaveProfile::sample(base, grid_n, [&](double x, double) {
                return std::max(0.0, std::min((x - lo) / (p - lo), (hi - x) / (hi - p)));
            });
        }
        case ConvexBase::Kind::disk:
            return ConcaveProfile::sample(base, grid_n,
                                          [&](double x, double y) { return disk_cone(base, peak, {x, y}); });
        case ConvexBase::Kind::polygon:
            return ConcaveProfile::sample(base, grid_n,
                                          [&](double x, double y) { return polygon_cone(base, peak, {x, y}); });
    }
    throw GeometryError("cone_function: unknown base");
}

double ratio_h3_h1(const ConcaveProfile& profile) {
    const double i1 = integral_or_throw(profile, "ratio_h3_h1");
    const double m = profile.sup_norm();
    return profile.integral(3.0) / (m * m * i1);
}

double cone_ratio(int d) {
    if (d < 2) throw DomainError("cone_ratio: d >= 2 required");
    return 6.0 / ((d + 1.0) * (d + 2.0));
}

ConcaveProfile radial_rearrangement(const ConcaveProfile& profile) {
    integral_or_throw(profile, "radial_rearrangement");
    return profile.base().dim() == 1 ? rearrange_1d(profile) : rearrange_2d(profile);
}

double radial_affine_defect(const ConcaveProfile& radial) {
    const double m = radial.sup_norm();
    if (!(m > 0.0)) throw GeometryError("radial_affine_defect: zero profile");
    const double R = radial.base().dim() == 1 ? radial.base().hi() : radial.base().radius();
    double worst = 0.0;
    for (std::size_t k = 0; k < radial.size(); ++k) {
        if (!radial.inside(k)) continue;
        const Point2 c = radial.cell_center(k);
        const double r = std::hypot(c.x, c.y);
        worst = std::max(worst, std::abs(radial.value(k) - m * (1.0 - r / R)));
    }
    return worst / m;
}

ConcaveProfile random_concave_profile(const ConvexBase& base, int grid_n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(3, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2> extremes;
    if (base.kind() == ConvexBase::Kind::interval) {
        extremes = {{base.lo(), 0.0}, {base.hi(), 0.0}};
    } else if (base.kind() == ConvexBase::Kind::polygon) {
        extremes = base.vertices();
    }
    for (;;) {
        struct Affine {
            double ux, uy, offset, slope;
        };
        std::vector<Affine> fs(count(rng));
        for (auto& f : fs) {
            if (base.dim() == 1) {
                f.ux = unit(rng) < 0.5 ? -1.0 : 1.0;
                f.uy = 0.0;
            } else {
                const double th = 2.0 * kPi * unit(rng);
                f.ux = std::cos(th);
                f.uy = std::sin(th);
            }
            // min over the base of u . x, so that u . x - offset >= 0 on it.
            if (base.kind() == ConvexBase::Kind::disk) {
                f.offset = f.ux * base.center().x + f.uy * base.center().y - base.radius();
            } else {
                f.offset = INFINITY;
                for (const auto& e : extremes) f.offset = std::min(f.offset, f.ux * e.x + f.uy * e.y);
            }
            f.slope = std::exp(std::log(0.2) + unit(rng) * std::log(50.0));
            f.offset -= unit(rng) * 0.5 / f.slope;
        }
        auto p = ConcaveProfile::sample(base, grid_n, [&](double x, double y) {
            double h = 1.0;
            for (const auto& f : fs) h = std::min(h, f.slope * (f.ux * x + f.uy * y - f.offset));
            return h;
        });
        if (p.integral() >= 0.01) return p;
    }
}

}  // namespace shapelab
