#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shapelab/domains.hpp"
#include "shapelab/functional.hpp"

namespace shapelab {

/// True iff some a_k in [0, 1] have sum a_k = B and sum a_k^p = A, that is
/// A <= floor(B) + (B - floor(B))^p. A = 0 with B > 0 is only reached in the
/// limit of many small entries.
bool feasible_AB(double A, double B, double p);

/// Entries in ]0, 1], sorted decreasingly, with |sum a - B| <= eps and
/// |sum a^p - A| <= eps. Walks the segment from (1, ..., 1, B - floor(B)) to
/// the equal split (B/N, ..., B/N) and bisects on the mixing parameter.
std::vector<double> realize_AB(double A, double B, double p, double eps = 1e-12);

/// Lower and upper boundary of the d = 1 diagram at x:
/// x^{3/2} and x^{3/2} (floor(x^{-1/2}) + frac(x^{-1/2})^3).
std::pair<double, double> region_1d(double x);

struct RegionSample {
    double x;
    double y_low;
    double y_high;
};

/// Sampled boundary of the d = 1 region.
struct Region1D {
    std::vector<RegionSample> samples;
};

/// `n` geometrically spaced abscissae in [x_min, 1] plus every corner
/// x = 1/k^2 in that range, sorted increasingly.
Region1D sample_region_1d(int n, double x_min = 1e-3);

struct Membership {
    bool inside = false;
    std::optional<IntervalUnionSpec> witness;   // lengths (1, a_2, a_3, ...)
};

/// Tests y_low <= y <= y_high and, when inside, builds an interval union
/// whose normalised coordinates are (x, y) up to ~1e-9.
Membership membership_1d(DiagramPoint point);

/// {inner_high, outer_low} for the d-dimensional diagram: every y between
/// them is attained by a union of balls, nothing lies below outer_low.
/// For d = 1 this is the exact region.
std::pair<double, double> region_bounds_d(double x, int d);

/// Polya-Szego guide y = min(1, x / F_1(ball)), from lambda T < |Omega|.
double upper_guide(double x, int d);

struct CloudPoint {
    DiagramPoint point;
    DomainSpec source;
};

/// Random unions of balls (intervals for d = 1) with a unit ball and a
/// random tail of smaller ones. Point i depends only on (seed, i).
std::vector<CloudPoint> ball_union_cloud(int d, int n_points, std::uint64_t seed, int jobs = 1);

}  // namespace shapelab
