#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "shapelab/profile.hpp"

namespace shapelab {

/// Ball B_R in R^d.
struct BallSpec {
    int dim = 2;
    double radius = 1.0;
};

/// d-rectangle prod ]0, L_k[, 1 <= d <= 8.
struct RectSpec {
    std::vector<double> sides;
};

/// Disjoint union of open intervals of the given lengths (d = 1).
/// Zero lengths are allowed and ignored.
struct IntervalUnionSpec {
    std::vector<double> lengths;
};

/// Disjoint union of balls in R^d, d >= 2. Zero radii are ignored.
struct BallUnionSpec {
    int dim = 2;
    std::vector<double> radii;
};

/// Cylinder A x ]-h/2, h/2[ described by the data of its cross-section A.
struct CylinderSpec {
    double cross_measure = 1.0;                 // |A|
    std::optional<double> cross_perimeter;      // |dA|
    std::optional<double> smooth_radius;        // R of an R-smooth boundary
    double height = 1.0;                        // h
    int dim = 2;
    std::optional<double> cross_lambda;         // lambda(A)
};

/// Row-major boolean raster; true marks an interior cell.
class Mask {
public:
    Mask() = default;
    Mask(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols, 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool operator()(int i, int j) const { return cells_[index(i, j)] != 0; }
    void set(int i, int j, bool v = true) { cells_[index(i, j)] = v ? 1 : 0; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
    std::size_t count() const;
    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

    friend bool operator==(const Mask&, const Mask&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> cells_;
};

/// Rasterised planar domain: union of the closed square cells of side
/// `spacing` flagged in `mask`. The outermost ring of the mask is empty.
struct GridSpec {
    Mask mask;
    double spacing = 1.0;
};

/// Thin domain {(s,t): s in A, 0 < t < eps h(s)} over a sampled profile.
struct ThinSpec {
    ConcaveProfile profile;
    double eps = 0.1;
};

using DomainSpec =
    std::variant<BallSpec, RectSpec, IntervalUnionSpec, BallUnionSpec, CylinderSpec, GridSpec, ThinSpec>;

inline constexpr int kMaxRectDim = 8;

void validate(const BallSpec& s);
void validate(const RectSpec& s);
void validate(const IntervalUnionSpec& s);
void validate(const BallUnionSpec& s);
void validate(const CylinderSpec& s);
void validate(const GridSpec& s);
void validate(const ThinSpec& s);
void validate(const DomainSpec& s);

/// omega_d = pi^{d/2} / Gamma(d/2 + 1).
double unit_ball_volume(int d);

/// Lebesgue measure |Omega|; validates first.
double measure(const DomainSpec& s);

/// Space dimension d of the domain.
int dimension(const DomainSpec& s);

/// Short tag used in JSON ("ball", "rect", ...).
std::string_view kind_name(const DomainSpec& s);

/// The homothetic copy t * Omega (t > 0). Grid and thin domains scale their
/// spacing / base geometry.
DomainSpec scaled(const DomainSpec& s, double t);

}  // namespace shapelab
