#include "shapelab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

ConvexBase ConvexBase::interval(double lo, double hi) {
    if (!(hi > lo)) throw GeometryError("interval base needs hi > lo");
    ConvexBase b;
    b.kind_ = Kind::interval;
    b.lo_ = lo;
    b.hi_ = hi;
    return b;
}

ConvexBase ConvexBase::polygon(std::vector<Point2> vertices) {
    // Drop collinear (and duplicate) vertices.
    std::vector<Point2> v;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 prev = vertices[(i + n - 1) % n];
        const Point2 cur = vertices[i];
        const Point2 next = vertices[(i + 1) % n];
        if (std::abs(cross(prev, cur, next)) > 1e-14) v.push_back(cur);
    }
    if (v.size() < 3) throw GeometryError("polygon base needs at least 3 non-collinear vertices");
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) <= 0.0) {
            throw GeometryError("polygon base must be strictly convex and counter-clockwise");
        }
    }
    ConvexBase b;
    b.kind_ = Kind::polygon;
    b.vertices_ = std::move(v);
    return b;
}

ConvexBase ConvexBase::disk(Point2 center, double radius) {
    if (!(radius > 0.0)) throw GeometryError("disk base needs radius > 0");
    ConvexBase b;
    b.kind_ = Kind::disk;
    b.center_ = center;
    b.radius_ = radius;
    return b;
}

double ConvexBase::measure() const {
    switch (kind_) {
        case Kind::interval:
            return hi_ - lo_;
        case Kind::disk:
            return std::numbers::pi * radius_ * radius_;
        case Kind::polygon: {
            double a = 0.0;
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                const Point2 p = vertices_[i];
                const Point2 q = vertices_[(i + 1) % vertices_.size()];
                a += p.x * q.y - q.x * p.y;
            }
            return 0.5 * a;
        }
    }
    return 0.0;
}

bool ConvexBase::contains(Point2 p) const {
    switch (kind_) {
        case Kind::interval:
            return p.x > lo_ && p.x < hi_;
        case Kind::disk: {
            const double dx = p.x - center_.x, dy = p.y - center_.y;
            return dx * dx + dy * dy < radius_ * radius_;
        }
        case Kind::polygon:
            for (std::size_t i = 0; i < vertices_.size(); ++i) {
                if (cross(vertices_[i], vertices_[(i + 1) % vertices_.size()], p) <= 0.0) return false;
            }
            return true;
    }
    return false;
}

void ConvexBase::bounds(double& xmin, double& ymin, double& xmax, double& ymax) const {
    switch (kind_) {
        case Kind::interval:
            xmin = lo_;
            xmax = hi_;
            ymin = ymax = 0.0;
            return;
        case Kind::disk:
            xmin = center_.x - radius_;
            xmax = center_.x + radius_;
            ymin = center_.y - radius_;
            ymax = center_.y + radius_;
            return;
        case Kind::polygon:
            xmin = ymin = INFINITY;
            xmax = ymax = -INFINITY;
            for (const auto& v : vertices_) {
                xmin = std::min(xmin, v.x);
                xmax = std::max(xmax, v.x);
                ymin = std::min(ymin, v.y);
                ymax = std::max(ymax, v.y);
            }
            return;
    }
}

ConvexBase ConvexBase::scaled(double t) const {
    ConvexBase b = *this;
    b.lo_ *= t;
    b.hi_ *= t;
    for (auto& v : b.vertices_) {
        v.x *= t;
        v.y *= t;
    }
    b.center_.x *= t;
    b.center_.y *= t;
    b.radius_ *= t;
    return b;
}

ConcaveProfile ConcaveProfile::scaled(double t) const {
    ConcaveProfile p = *this;
    p.base_ = base_.scaled(t);
    p.x0_ *= t;
    p.y0_ *= t;
    p.cell_w_ *= t;
    if (base_.dim() == 2) p.cell_h_ *= t;
    for (auto& v : p.values_) v *= t;
    return p;
}

ConcaveProfile::ConcaveProfile(ConvexBase base, int n) : base_(std::move(base)), n_(n) {
    if (n < 2) throw ValidationError("profile grid needs at least 2 cells per axis");
    double xmin, ymin, xmax, ymax;
    base_.bounds(xmin, ymin, xmax, ymax);
    x0_ = xmin;
    y0_ = ymin;
    cell_w_ = (xmax - xmin) / n;
    if (base_.dim() == 1) {
        cell_h_ = 1.0;
        values_.assign(n, 0.0);
        inside_.assign(n, 1);
        return;
    }
    cell_h_ = (ymax - ymin) / n;
    values_.assign(static_cast<std::size_t>(n) * n, 0.0);
    inside_.assign(values_.size(), 0);
    for (std::size_t k = 0; k < values_.size(); ++k) {
        inside_[k] = base_.contains(cell_center(k)) ? 1 : 0;
    }
}

Point2 ConcaveProfile::cell_center(std::size_t k) const {
    if (base_.dim() == 1) return {x0_ + (static_cast<double>(k) + 0.5) * cell_w_, 0.0};
    const std::size_t i = k / n_, j = k % n_;
    return {x0_ + (static_cast<double>(j) + 0.5) * cell_w_, y0_ + (static_cast<double>(i) + 0.5) * cell_h_};
}

double ConcaveProfile::sup_norm() const {
    double m = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (inside_[k]) m = std::max(m, values_[k]);
    }
    return m;
}

double ConcaveProfile::integral(double power) const {
    double s = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!inside_[k]) continue;
        const double v = values_[k];
        s += power == 1.0 ? v : (power == 3.0 ? v * v * v : std::pow(v, power));
    }
    return s * cell_area();
}

double ConcaveProfile::sampled_measure() const {
    return static_cast<double>(std::count(inside_.begin(), inside_.end(), 1)) * cell_area();
}

double ConcaveProfile::level_measure(double t) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (inside_[k] && values_[k] > t) ++c;
    }
    return static_cast<double>(c) * cell_area();
}

double ConcaveProfile::concavity_defect() const {
    double worst = 0.0;
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (inside_[a] && inside_[b] && inside_[c]) {
            worst = std::max(worst, values_[a] + values_[c] - 2.0 * values_[b]);
        }
    };
    if (base_.dim() == 1) {
        for (int j = 1; j + 1 < n_; ++j) check(j - 1, j, j + 1);
        return worst;
    }
    // Diagonals are only equally spaced for square cells.
    const bool diagonals = std::abs(cell_w_ - cell_h_) <= 1e-12 * cell_w_;
    auto at = [this](int i, int j) { return static_cast<std::size_t>(i) * n_ + j; };
    for (int i = 1; i + 1 < n_; ++i) {
        for (int j = 1; j + 1 < n_; ++j) {
            check(at(i, j - 1), at(i, j), at(i, j + 1));
            check(at(i - 1, j), at(i, j), at(i + 1, j));
            if (diagonals) {
                check(at(i - 1, j - 1), at(i, j), at(i + 1, j + 1));
                check(at(i - 1, j + 1), at(i, j), at(i + 1, j - 1));
            }
        }
    }
    return worst;
}

void ConcaveProfile::validate(double tol) const {
    bool any = false;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!inside_[k]) continue;
        any = true;
        if (!(values_[k] >= 0.0) || !std::isfinite(values_[k])) {
            throw ValidationError("profile: h must be finite and nonnegative");
        }
    }
    if (!any) throw ValidationError("profile: base has no interior samples");
    const double defect = concavity_defect();
    if (defect > tol) {
        throw ValidationError("profile: midpoint concavity violated by " + std::to_string(defect));
    }
}

}  // namespace shapelab
