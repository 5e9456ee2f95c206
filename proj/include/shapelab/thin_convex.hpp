#pragma once

#include <cstdint>
#include <random>

#include "shapelab/profile.hpp"

namespace shapelab {

/// First-order terms for the thin domain {(s, t): s in A, 0 < t < eps h(s)}.
struct ThinAsymptotics {
    double lambda;   // pi^2 / (eps^2 |h|_inf^2)
    double torsion;  // eps^3 / 12 * int h^3
    double f1;       // (pi^2 / 12) int h^3 / (|h|_inf^2 int h)
};

ThinAsymptotics thin_asymptotics(const ConcaveProfile& profile, double eps);

/// Cone function over `base` with apex height 1 at `peak`: the smallest
/// concave function equal to 1 at the peak and 0 on the boundary. Its
/// super-level sets are the homothets s * peak + (1 - s) * base.
ConcaveProfile cone_function(const ConvexBase& base, Point2 peak, int grid_n);

/// int h^3 / int h for h normalised to sup norm 1. For concave h over a base
/// of dimension d - 1 this lies in [cone_ratio(d), 1].
double ratio_h3_h1(const ConcaveProfile& profile);

/// 6 / ((d + 1)(d + 2)), the value of ratio_h3_h1 on any cone function.
double cone_ratio(int d);

/// Radially symmetric decreasing rearrangement on the centred ball (interval
/// or disk) of the same measure as the base, sampled on a grid of the same
/// resolution.
///
/// Base dimension 1 is exact for the piecewise-linear interpolant of the
/// samples (extended linearly to the endpoints), so the output is concave up
/// to rounding. Base dimension 2 inverts the empirical distribution of the
/// sorted samples.
ConcaveProfile radial_rearrangement(const ConcaveProfile& profile);

/// max |h(r) - |h|_inf (1 - r / R)| / |h|_inf over the cells of a radial
/// profile on a ball of radius R; zero for a cone over the ball.
double radial_affine_defect(const ConcaveProfile& radial);

/// Random concave profile: the minimum of 3 to 12 affine functions that are
/// nonnegative on the base, clipped at 1. Draws again while int h < 0.01.
ConcaveProfile random_concave_profile(const ConvexBase& base, int grid_n, std::mt19937_64& rng);

}  // namespace shapelab
