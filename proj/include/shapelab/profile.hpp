#pragma once

#include <cstdint>
#include <vector>

namespace shapelab {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Convex base A of a thin domain: an interval (base dimension 1), or a
/// convex polygon / disk (base dimension 2).
class ConvexBase {
public:
    enum class Kind { interval, polygon, disk };

    static ConvexBase interval(double lo, double hi);
    /// Vertices counter-clockwise; collinear vertices are dropped.
    static ConvexBase polygon(std::vector<Point2> vertices);
    static ConvexBase disk(Point2 center, double radius);

    Kind kind() const noexcept { return kind_; }
    int dim() const noexcept { return kind_ == Kind::interval ? 1 : 2; }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    Point2 center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

    double measure() const;
    /// Strict interior test (points on the boundary are outside).
    bool contains(Point2 p) const;
    /// Axis-aligned bounding box {xmin, ymin, xmax, ymax}; for intervals y = 0.
    void bounds(double& xmin, double& ymin, double& xmax, double& ymax) const;
    /// Homothetic copy t * A about the origin.
    ConvexBase scaled(double t) const;

private:
    Kind kind_ = Kind::interval;
    double lo_ = 0.0, hi_ = 1.0;
    std::vector<Point2> vertices_;
    Point2 center_{};
    double radius_ = 0.0;
};

/// Nonnegative height function sampled at cell centres of a uniform grid
/// covering the base. In base dimension 1 the grid has n cells on [lo, hi];
/// in dimension 2 it is an n x n grid over the bounding box and only cells
/// whose centre lies inside the base carry a value.
class ConcaveProfile {
public:
    ConcaveProfile() = default;
    ConcaveProfile(ConvexBase base, int n);

    /// Samples `fn(x, y)` at every interior cell centre.
    template <class Fn>
    static ConcaveProfile sample(const ConvexBase& base, int n, Fn&& fn) {
        ConcaveProfile p(base, n);
        for (std::size_t k = 0; k < p.values_.size(); ++k) {
            if (p.inside_[k]) {
                const Point2 c = p.cell_center(k);
                p.values_[k] = fn(c.x, c.y);
            }
        }
        return p;
    }

    const ConvexBase& base() const noexcept { return base_; }
    int n() const noexcept { return n_; }
    int rows() const noexcept { return base_.dim() == 1 ? 1 : n_; }
    int cols() const noexcept { return n_; }
    double cell_area() const noexcept { return cell_w_ * cell_h_; }
    double cell_width() const noexcept { return cell_w_; }
    double cell_height() const noexcept { return cell_h_; }

    std::size_t size() const noexcept { return values_.size(); }
    bool inside(std::size_t k) const { return inside_[k] != 0; }
    double value(std::size_t k) const { return values_[k]; }
    void set_value(std::size_t k, double v) { values_[k] = v; }
    Point2 cell_center(std::size_t k) const;

    const std::vector<double>& values() const noexcept { return values_; }

    double sup_norm() const;
    /// Midpoint quadrature of h^power over the sampled base.
    double integral(double power = 1.0) const;
    /// Measure of the sampled base (interior cell count times cell area).
    double sampled_measure() const;
    /// Measure of the super-level set {h > t} from the samples.
    double level_measure(double t) const;

    /// Largest violation of the discrete midpoint inequality
    /// h(i-1) + h(i+1) <= 2 h(i) along rows, columns and both diagonals.
    double concavity_defect() const;

    /// Throws ValidationError unless h >= 0 and the profile is discretely
    /// concave within `tol`.
    void validate(double tol = 1e-9) const;

    /// Profile of the domain t * Omega: base scaled by t and heights by t.
    ConcaveProfile scaled(double t) const;

private:
    ConvexBase base_;
    int n_ = 0;
    double x0_ = 0.0, y0_ = 0.0, cell_w_ = 0.0, cell_h_ = 1.0;
    std::vector<double> values_;
    std::vector<std::uint8_t> inside_;
};

}  // namespace shapelab
