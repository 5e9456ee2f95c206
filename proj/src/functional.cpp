#include "shapelab/functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int d) {
    if (d < 1 || d > 8) throw DomainError("dimension must satisfy 1 <= d <= 8");
}

}  // namespace

double measure_exponent(double q, int d) { return (d * q + 2.0 * q - 2.0) / d; }

double FunctionalValue::recompute() const {
    return components.lambda() * std::pow(components.torsion(), q) /
           std::pow(components.measure(), measure_exponent(q, d));
}

FunctionalValue f_q(const SpectralResult& result, double q, int d) {
    if (!(q > 0.0)) throw DomainError("f_q: q > 0 required");
    check_dim(d);
    FunctionalValue v{q, d, 0.0, result};
    v.value = v.recompute();
    return v;
}

double f_q_ball(double q, int d) {
    if (!(q > 0.0)) throw DomainError("f_q_ball: q > 0 required");
    check_dim(d);
    return ball_lambda_unit(d) * std::pow(d * (d + 2.0), -q) * std::pow(unit_ball_volume(d), 2.0 * (1.0 - q) / d);
}

DiagramPoint normalized_coords(const SpectralResult& r, int d) {
    check_dim(d);
    const double w = unit_ball_volume(d);
    const double x = std::pow(w / r.measure(), 2.0 / d) * ball_lambda_unit(d) / r.lambda();
    const double y = std::pow(w / r.measure(), (d + 2.0) / d) * r.torsion() / ball_torsion_unit(d);
    return {x, y};
}

double g_q(std::span<const double> a, double q) {
    if (!(q > 0.0)) throw DomainError("g_q: q > 0 required");
    double amax = 0.0;
    for (double v : a) {
        if (!(v >= 0.0)) throw ValidationError("g_q: entries must be nonnegative");
        amax = std::max(amax, v);
    }
    if (!(amax > 0.0)) throw ValidationError("g_q: at least one positive entry required");
    // Normalise by the largest entry; G_q is scale invariant.
    double cubes = 0.0, sum = 0.0;
    for (double v : a) {
        const double t = v / amax;
        cubes += t * t * t;
        sum += t;
    }
    return std::pow(cubes, q) / std::pow(sum, 3.0 * q - 2.0);
}

double conjectured_c_plus() { return kPi * kPi / 12.0; }

double conjectured_c_minus(int d) { return kPi * kPi / 12.0 * 6.0 / ((d + 1.0) * (d + 2.0)); }

double ball_torsion_ratio(int d) {
    check_dim(d);
    return 1.0 / (d * (d + 2.0) * std::pow(unit_ball_volume(d), 2.0 / d));
}

std::string_view to_string(QClass c) {
    switch (c) {
        case QClass::kohler_jobin: return "q<=2/(d+2)";
        case QClass::sub_unit: return "q<1";
        case QClass::unit: return "q=1";
        case QClass::super_unit: return "q>1";
    }
    return "?";
}

std::string_view to_string(InfKind k) {
    switch (k) {
        case InfKind::attained_ball: return "min=F_q(ball)";
        case InfKind::zero: return "inf=0";
        case InfKind::positive_unknown: return "inf>0";
    }
    return "?";
}

std::string_view to_string(SupKind k) {
    switch (k) {
        case SupKind::infinite: return "sup=+inf";
        case SupKind::one: return "sup=1";
        case SupKind::finite_bound: return "sup<+inf";
        case SupKind::below_one: return "sup<1";
    }
    return "?";
}

RegimeBounds regime_table(double q, int d, bool convex) {
    if (!(q > 0.0)) throw DomainError("regime_table: q > 0 required");
    check_dim(d);
    // (T(B)/|B|^{1+2/d})^{q-1} = (d(d+2) omega_d^{2/d})^{1-q}
    const double ball_factor = std::pow(ball_torsion_ratio(d), q - 1.0);
    if (!convex) {
        if (q <= 2.0 / (d + 2.0)) {
            return {QClass::kohler_jobin, InfKind::attained_ball, SupKind::infinite, f_q_ball(q, d), std::nullopt};
        }
        if (q < 1.0) return {QClass::sub_unit, InfKind::zero, SupKind::infinite, 0.0, std::nullopt};
        if (q == 1.0) return {QClass::unit, InfKind::zero, SupKind::one, 0.0, 1.0};
        return {QClass::super_unit, InfKind::zero, SupKind::finite_bound, 0.0, ball_factor};
    }
    if (q < 1.0) {
        return {QClass::sub_unit, InfKind::positive_unknown, SupKind::infinite, conjectured_c_minus(d) * ball_factor,
                std::nullopt, true};
    }
    if (q == 1.0) {
        return {QClass::unit, InfKind::positive_unknown, SupKind::below_one, conjectured_c_minus(d),
                conjectured_c_plus(), true};
    }
    return {QClass::super_unit, InfKind::zero, SupKind::finite_bound, 0.0, conjectured_c_plus() * ball_factor, true};
}

std::pair<std::optional<double>, std::optional<double>> inradius_ratio_bounds(double q, int d) {
    if (!(q > 0.0)) throw DomainError("inradius_ratio_bounds: q > 0 required");
    if (q == 1.0) throw DomainError("inradius_ratio_bounds: no bound for q = 1");
    check_dim(d);
    const double j = first_bessel_zero(0.5 * d - 1.0).value;
    if (q > 1.0) {
        if (d < 2) throw DomainError("inradius_ratio_bounds: maximiser bound needs d >= 2");
        const double lead =
            unit_ball_volume(d - 1) * std::pow(kPi, d) / (d * unit_ball_volume(d) * std::pow(2.0, d));
        const double v = lead * std::pow(d * (d + 2.0), d * q / (2.0 * (1.0 - q))) * std::pow(j, d / (q - 1.0));
        return {v, std::nullopt};
    }
    const double v = kPi * std::pow(2.0, (5.0 * q - 4.0) / (2.0 * (1.0 - q))) * std::pow(j, 1.0 / (q - 1.0));
    return {std::nullopt, v};
}

}  // namespace shapelab
