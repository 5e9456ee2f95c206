#include "shapelab/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::series: return "series";
        case Provenance::grid: return "grid";
        case Provenance::asymptotic: return "asymptotic";
    }
    return "?";
}

SpectralResult::SpectralResult(double lambda, double torsion, double measure, Provenance provenance,
                               std::optional<double> err_estimate)
    : lambda_(lambda), torsion_(torsion), measure_(measure), provenance_(provenance), err_estimate_(err_estimate) {
    if (!(lambda > 0.0) || !(torsion > 0.0) || !(measure > 0.0) || !std::isfinite(lambda) ||
        !std::isfinite(torsion) || !std::isfinite(measure)) {
        throw ValidationError("spectral result: lambda, torsion and measure must be positive and finite");
    }
    if (err_estimate && !(*err_estimate >= 0.0)) {
        throw ValidationError("spectral result: err_estimate must be nonnegative");
    }
    const bool exact = provenance == Provenance::closed_form || provenance == Provenance::series;
    if (exact && !(product() < 1.0)) {
        throw ValidationError("spectral result: lambda*T/|Omega| < 1 violated (" + std::to_string(product()) + ")");
    }
}

double bessel_j(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    using ld = long double;
    const ld half = static_cast<ld>(x) / 2;
    const ld q = -half * half;
    // term_0 = (x/2)^nu / Gamma(nu + 1)
    ld term = std::pow(half, static_cast<ld>(nu)) / std::tgamma(static_cast<ld>(nu) + 1);
    ld sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<ld>(k) * (static_cast<ld>(k) + nu));
        sum += term;
        if (std::abs(term) < 1e-22L * std::abs(sum) && k > half) break;
    }
    return static_cast<double>(sum);
}

BesselZero first_bessel_zero(double nu) {
    if (!(nu >= -0.5 && nu <= 4.0)) throw DomainError("first_bessel_zero: -1/2 <= nu <= 4 required");
    // The first zero lies in [nu + 1, nu + 4]; scan for the first sign change
    // there so the bracket never straddles a later zero.
    double a = nu + 1.0;
    double fa = bessel_j(nu, a);
    double b = a;
    double fb = fa;
    const double step = 0.125;
    while (b < nu + 4.0) {
        b = std::min(nu + 4.0, a + step);
        fb = bessel_j(nu, b);
        if ((fa > 0.0) != (fb > 0.0)) break;
        a = b;
        fa = fb;
    }
    if ((fa > 0.0) == (fb > 0.0)) throw NumericalError("first_bessel_zero: no sign change in bracket");
    while (b - a > 1e-13) {
        const double m = 0.5 * (a + b);
        const double fm = bessel_j(nu, m);
        if (fm == 0.0) {
            a = b = m;
            break;
        }
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    const double root = 0.5 * (a + b);
    if (std::abs(bessel_j(nu, root)) > 1e-12) throw NumericalError("first_bessel_zero: residual too large");
    return {nu, root};
}

double ball_lambda_unit(int d) {
    if (d < 1) throw DomainError("ball_lambda_unit: d >= 1 required");
    const double j = first_bessel_zero(0.5 * d - 1.0).value;
    return j * j;
}

double ball_torsion_unit(int d) { return unit_ball_volume(d) / (d * (d + 2.0)); }

SpectralResult ball_spectrum(const BallSpec& spec) {
    validate(spec);
    const int d = spec.dim;
    const double R = spec.radius;
    return SpectralResult(ball_lambda_unit(d) / (R * R), ball_torsion_unit(d) * std::pow(R, d + 2),
                          unit_ball_volume(d) * std::pow(R, d), Provenance::closed_form);
}

double ball_torsion_function(const BallSpec& spec, std::span<const double> x) {
    validate(spec);
    if (x.size() != static_cast<std::size_t>(spec.dim)) throw DomainError("ball_torsion_function: point has wrong dimension");
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    const double R2 = spec.radius * spec.radius;
    if (r2 > R2 * (1.0 + 1e-15)) throw DomainError("ball_torsion_function: point outside the ball");
    return std::max(0.0, R2 - r2) / (2.0 * spec.dim);
}

double rect_lambda(const RectSpec& spec) {
    validate(spec);
    double s = 0.0;
    for (double L : spec.sides) s += 1.0 / (L * L);
    return kPi * kPi * s;
}

SeriesValue rect_torsion_series(const RectSpec& spec, int terms) {
    validate(spec);
    if (spec.sides.size() != 2) throw UnsupportedError("rect_torsion_series: only d = 2 is supported");
    if (terms < 1) throw DomainError("rect_torsion_series: terms >= 1 required");
    const double L = spec.sides[0], h = spec.sides[1];
    const double iL2 = 1.0 / (L * L), ih2 = 1.0 / (h * h);
    // Sum smallest terms first for accuracy.
    const int N = terms % 2 == 0 ? terms - 1 : terms;
    double sum = 0.0;
    for (int m = N; m >= 1; m -= 2) {
        const double m2 = static_cast<double>(m) * m;
        double row = 0.0;
        for (int n = N; n >= 1; n -= 2) {
            const double n2 = static_cast<double>(n) * n;
            row += 1.0 / (n2 * (m2 * iL2 + n2 * ih2));
        }
        sum += row / m2;
    }
    const double prefactor = 64.0 * L * h / std::pow(kPi, 6);
    // Omitted terms have m > N or n > N. Bound each by L^2/(m^4 n^2) resp.
    // h^2/(m^2 n^4); sum_{n odd} n^-2 = pi^2/8 and sum_{m odd > N} m^-4 <= 1/(6 N^3).
    const double tail = prefactor * (kPi * kPi / 8.0) * (L * L + h * h) / (6.0 * std::pow(static_cast<double>(N), 3));
    return {prefactor * sum, tail};
}

SpectralResult rect_spectrum(const RectSpec& spec, int terms) {
    validate(spec);
    const double lambda = rect_lambda(spec);
    if (spec.sides.size() == 1) {
        const double L = spec.sides[0];
        return SpectralResult(lambda, L * L * L / 12.0, L, Provenance::closed_form);
    }
    if (spec.sides.size() != 2) throw UnsupportedError("rect_spectrum: torsion available for d <= 2 only");
    const SeriesValue t = rect_torsion_series(spec, terms);
    return SpectralResult(lambda, t.value, spec.sides[0] * spec.sides[1], Provenance::series, t.tail_bound / t.value);
}

SpectralResult union_spectrum(const IntervalUnionSpec& spec) {
    validate(spec);
    double amax = 0.0, cubes = 0.0, total = 0.0;
    for (double a : spec.lengths) {
        if (a <= 0.0) continue;
        amax = std::max(amax, a);
        cubes += a * a * a;
        total += a;
    }
    return SpectralResult(kPi * kPi / (amax * amax), cubes / 12.0, total, Provenance::closed_form);
}

SpectralResult union_spectrum(const BallUnionSpec& spec) {
    validate(spec);
    const int d = spec.dim;
    double rmax = 0.0, tors = 0.0, vol = 0.0;
    for (double r : spec.radii) {
        if (r <= 0.0) continue;
        rmax = std::max(rmax, r);
        tors += std::pow(r, d + 2);
        vol += std::pow(r, d);
    }
    return SpectralResult(ball_lambda_unit(d) / (rmax * rmax), ball_torsion_unit(d) * tors,
                          unit_ball_volume(d) * vol, Provenance::closed_form);
}

double cylinder_lambda(const CylinderSpec& spec) {
    validate(spec);
    if (!spec.cross_lambda) throw MissingDataError("cylinder_lambda: cross_lambda is required");
    return kPi * kPi / (spec.height * spec.height) + *spec.cross_lambda;
}

}  // namespace shapelab
