#pragma once

#include "shapelab/domains.hpp"

namespace shapelab {

/// zeta(5) to 15 digits.
inline constexpr double kZeta5 = 1.036927755143370;

/// Closed interval [lower, upper] known to contain a torsional rigidity.
struct TorsionBracket {
    double lower;
    double upper;
    double width() const noexcept { return upper - lower; }
    double center() const noexcept { return 0.5 * (lower + upper); }
    bool contains(double v) const noexcept { return lower <= v && v <= upper; }
};

// Brackets for T(A x ]0,h[). The bound functions accept a degenerate height
// h = 0 (every bound is then 0) but otherwise require a valid cross-section.

/// T <= |A| h^3 / 12 for any A of finite measure.
double upper_bound_t1(const CylinderSpec& spec);

/// T >= |A| h^3 / 12 - 31 * 2^{(d-4)/2} zeta(5) / pi^4 * |dA| h^4 for convex A.
/// May be negative; callers decide whether to clamp at zero.
double lower_bound_t2(const CylinderSpec& spec, int d);

/// |T - |A| h^3/12 + 31 zeta(5)/(4 pi^5) |dA| h^4| <= 10^{d-2} |A| h^5 / (12 R^2)
/// for A with C^2, R-smooth boundary.
TorsionBracket two_sided_t3(const CylinderSpec& spec, int d);

/// Sharper two-sided estimate for the planar rectangle L x h:
/// |T - h^3 L/12 + 31 zeta(5) h^4/(2 pi^5)| <= h^5 / (15 L).
TorsionBracket rectangle_bracket(double L, double h);

/// Cylinder data of the planar rectangle L x h seen as ]0,L[ x ]0,h[:
/// |A| = L, |dA| = 2, R = L/2, lambda(A) = pi^2/L^2.
CylinderSpec strip_cylinder(double L, double h);

}  // namespace shapelab
