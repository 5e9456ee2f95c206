#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "shapelab/domains.hpp"

namespace shapelab {

enum class Provenance { closed_form, series, grid, asymptotic };

std::string_view to_string(Provenance p);

/// lambda(Omega), T(Omega) and |Omega| evaluated together.
///
/// Construction checks positivity of all three values and, for the exact
/// provenances (closed_form, series), the Polya-Szego product bound
/// lambda * T / |Omega| < 1. err_estimate, when present, is a relative error
/// bound on the less accurate of lambda and T.
class SpectralResult {
public:
    SpectralResult(double lambda, double torsion, double measure, Provenance provenance,
                   std::optional<double> err_estimate = std::nullopt);

    double lambda() const noexcept { return lambda_; }
    double torsion() const noexcept { return torsion_; }
    double measure() const noexcept { return measure_; }
    Provenance provenance() const noexcept { return provenance_; }
    std::optional<double> err_estimate() const noexcept { return err_estimate_; }

    /// lambda * T / |Omega|, i.e. F_1.
    double product() const noexcept { return lambda_ * torsion_ / measure_; }

private:
    double lambda_, torsion_, measure_;
    Provenance provenance_;
    std::optional<double> err_estimate_;
};

/// First positive zero j_nu of the Bessel function J_nu.
struct BesselZero {
    double order;
    double value;
};

/// J_nu(x) by its power series, evaluated in long double. Intended for
/// x <= 12 and nu >= -1/2.
double bessel_j(double nu, double x);

/// First positive zero of J_nu for -1/2 <= nu <= 4.
BesselZero first_bessel_zero(double nu);

/// j_{d/2 - 1}^2, the eigenvalue of the unit ball in R^d.
double ball_lambda_unit(int d);

/// T(B_1) = omega_d / (d (d + 2)).
double ball_torsion_unit(int d);

SpectralResult ball_spectrum(const BallSpec& spec);

/// Torsion function (R^2 - |x|^2) / (2d) of the centred ball.
double ball_torsion_function(const BallSpec& spec, std::span<const double> x);

/// pi^2 * sum 1 / L_k^2.
double rect_lambda(const RectSpec& spec);

struct SeriesValue {
    double value;
    double tail_bound;
};

inline constexpr int kDefaultSeriesTerms = 199;

/// Torsional rigidity of the rectangle L x h via the double sine series over
/// odd indices m, n <= terms, with a rigorous bound on the omitted tail.
SeriesValue rect_torsion_series(const RectSpec& spec, int terms = kDefaultSeriesTerms);

/// Rectangle spectrum: lambda exact, torsion from the series (d = 2) or
/// closed form (d = 1).
SpectralResult rect_spectrum(const RectSpec& spec, int terms = kDefaultSeriesTerms);

/// lambda = min over components, T = sum over components.
SpectralResult union_spectrum(const IntervalUnionSpec& spec);
SpectralResult union_spectrum(const BallUnionSpec& spec);

/// pi^2 / h^2 + lambda(A).
double cylinder_lambda(const CylinderSpec& spec);

}  // namespace shapelab
