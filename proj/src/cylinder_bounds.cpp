#include "shapelab/cylinder_bounds.hpp"

#include <cmath>
#include <string>
#include <numbers>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

constexpr double kPi = std::numbers::pi;

void check_cross_section(const CylinderSpec& spec) {
    if (!(spec.cross_measure > 0.0)) throw ValidationError("cylinder: cross_measure > 0");
    if (!(spec.height >= 0.0)) throw ValidationError("cylinder: height >= 0");
    if (spec.cross_perimeter && !(*spec.cross_perimeter >= 0.0)) throw ValidationError("cylinder: cross_perimeter >= 0");
    if (spec.smooth_radius && !(*spec.smooth_radius > 0.0)) throw ValidationError("cylinder: smooth_radius > 0");
}

double perimeter_of(const CylinderSpec& spec, const char* who) {
    if (!spec.cross_perimeter) throw MissingDataError(std::string(who) + ": cross_perimeter is required");
    return *spec.cross_perimeter;
}

}  // namespace

double upper_bound_t1(const CylinderSpec& spec) {
    check_cross_section(spec);
    const double h = spec.height;
    return spec.cross_measure * h * h * h / 12.0;
}

double lower_bound_t2(const CylinderSpec& spec, int d) {
    check_cross_section(spec);
    if (d < 2) throw DomainError("lower_bound_t2: d >= 2 required");
    const double P = perimeter_of(spec, "lower_bound_t2");
    const double h = spec.height;
    const double c = 31.0 * std::pow(2.0, 0.5 * (d - 4)) * kZeta5 / std::pow(kPi, 4);
    return upper_bound_t1(spec) - c * P * h * h * h * h;
}

TorsionBracket two_sided_t3(const CylinderSpec& spec, int d) {
    check_cross_section(spec);
    if (d < 2) throw DomainError("two_sided_t3: d >= 2 required");
    const double P = perimeter_of(spec, "two_sided_t3");
    if (!spec.smooth_radius) throw MissingDataError("two_sided_t3: smooth_radius is required");
    const double R = *spec.smooth_radius;
    const double h = spec.height;
    const double h4 = h * h * h * h;
    const double center = upper_bound_t1(spec) - 31.0 * kZeta5 / (4.0 * std::pow(kPi, 5)) * P * h4;
    const double half = std::pow(10.0, d - 2) * spec.cross_measure * h4 * h / (12.0 * R * R);
    return {center - half, center + half};
}

TorsionBracket rectangle_bracket(double L, double h) {
    if (!(L > 0.0) || !(h > 0.0)) throw ValidationError("rectangle_bracket: sides > 0");
    const double h4 = h * h * h * h;
    const double center = h * h * h * L / 12.0 - 31.0 * kZeta5 * h4 / (2.0 * std::pow(kPi, 5));
    const double half = h4 * h / (15.0 * L);
    return {center - half, center + half};
}

CylinderSpec strip_cylinder(double L, double h) {
    CylinderSpec s;
    s.cross_measure = L;
    s.cross_perimeter = 2.0;
    s.smooth_radius = L / 2.0;
    s.height = h;
    s.dim = 2;
    s.cross_lambda = kPi * kPi / (L * L);
    return s;
}

}  // namespace shapelab
