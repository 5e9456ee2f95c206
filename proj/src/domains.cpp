#include "shapelab/domains.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "shapelab/errors.hpp"

namespace shapelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* what) {
    if (!ok) throw ValidationError(what);
}

bool all_nonnegative_one_positive(const std::vector<double>& v) {
    bool positive = false;
    for (double x : v) {
        if (!(x >= 0.0) || !std::isfinite(x)) return false;
        positive = positive || x > 0.0;
    }
    return positive;
}

}  // namespace

std::size_t Mask::count() const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), 1));
}

void validate(const BallSpec& s) {
    require(s.dim >= 1, "ball: dim >= 1");
    require(s.radius > 0.0 && std::isfinite(s.radius), "ball: radius > 0");
}

void validate(const RectSpec& s) {
    require(!s.sides.empty() && s.sides.size() <= kMaxRectDim, "rect: 1 <= d <= 8");
    for (double L : s.sides) require(L > 0.0 && std::isfinite(L), "rect: all sides > 0");
}

void validate(const IntervalUnionSpec& s) {
    require(all_nonnegative_one_positive(s.lengths), "intervals: lengths >= 0 with max > 0");
}

void validate(const BallUnionSpec& s) {
    require(s.dim >= 2, "balls: dim >= 2");
    require(all_nonnegative_one_positive(s.radii), "balls: radii >= 0 with max > 0");
}

void validate(const CylinderSpec& s) {
    require(s.dim >= 2, "cylinder: dim >= 2");
    require(s.cross_measure > 0.0, "cylinder: cross_measure > 0");
    require(s.height > 0.0, "cylinder: height > 0");
    require(!s.cross_perimeter || *s.cross_perimeter >= 0.0, "cylinder: cross_perimeter >= 0");
    require(!s.smooth_radius || *s.smooth_radius > 0.0, "cylinder: smooth_radius > 0");
    require(!s.cross_lambda || *s.cross_lambda > 0.0, "cylinder: cross_lambda > 0");
}

void validate(const GridSpec& s) {
    require(s.spacing > 0.0 && std::isfinite(s.spacing), "grid: spacing > 0");
    const Mask& m = s.mask;
    require(m.rows() >= 3 && m.cols() >= 3 &&
                m.cells().size() == static_cast<std::size_t>(m.rows()) * m.cols(),
            "grid: mask must be rectangular with at least 3x3 cells");
    for (int j = 0; j < m.cols(); ++j) {
        require(!m(0, j) && !m(m.rows() - 1, j), "grid: boundary ring of the mask must be empty");
    }
    for (int i = 0; i < m.rows(); ++i) {
        require(!m(i, 0) && !m(i, m.cols() - 1), "grid: boundary ring of the mask must be empty");
    }
    require(m.count() > 0, "grid: at least one interior cell");
}

void validate(const ThinSpec& s) {
    require(s.eps > 0.0, "thin: eps > 0");
    s.profile.validate();
    require(s.profile.integral() > 0.0, "thin: profile integral > 0");
}

void validate(const DomainSpec& s) {
    std::visit([](const auto& v) { validate(v); }, s);
}

double unit_ball_volume(int d) {
    if (d < 1) throw DomainError("unit_ball_volume: d >= 1 required");
    return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double measure(const DomainSpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const BallSpec& s) { return unit_ball_volume(s.dim) * std::pow(s.radius, s.dim); },
            [](const RectSpec& s) {
                return std::accumulate(s.sides.begin(), s.sides.end(), 1.0, std::multiplies<>());
            },
            [](const IntervalUnionSpec& s) { return std::accumulate(s.lengths.begin(), s.lengths.end(), 0.0); },
            [](const BallUnionSpec& s) {
                double sum = 0.0;
                for (double r : s.radii) sum += std::pow(r, s.dim);
                return unit_ball_volume(s.dim) * sum;
            },
            [](const CylinderSpec& s) { return s.cross_measure * s.height; },
            [](const GridSpec& s) { return static_cast<double>(s.mask.count()) * s.spacing * s.spacing; },
            [](const ThinSpec& s) { return s.eps * s.profile.integral(); },
        },
        spec);
}

int dimension(const DomainSpec& spec) {
    return std::visit(overloaded{
                          [](const BallSpec& s) { return s.dim; },
                          [](const RectSpec& s) { return static_cast<int>(s.sides.size()); },
                          [](const IntervalUnionSpec&) { return 1; },
                          [](const BallUnionSpec& s) { return s.dim; },
                          [](const CylinderSpec& s) { return s.dim; },
                          [](const GridSpec&) { return 2; },
                          [](const ThinSpec& s) { return s.profile.base().dim() + 1; },
                      },
                      spec);
}

std::string_view kind_name(const DomainSpec& spec) {
    return std::visit(overloaded{
                          [](const BallSpec&) { return std::string_view("ball"); },
                          [](const RectSpec&) { return std::string_view("rect"); },
                          [](const IntervalUnionSpec&) { return std::string_view("intervals"); },
                          [](const BallUnionSpec&) { return std::string_view("balls"); },
                          [](const CylinderSpec&) { return std::string_view("cylinder"); },
                          [](const GridSpec&) { return std::string_view("grid"); },
                          [](const ThinSpec&) { return std::string_view("thin"); },
                      },
                      spec);
}

DomainSpec scaled(const DomainSpec& spec, double t) {
    if (!(t > 0.0)) throw DomainError("scaled: t > 0 required");
    return std::visit(
        overloaded{
            [t](BallSpec s) -> DomainSpec {
                s.radius *= t;
                return s;
            },
            [t](RectSpec s) -> DomainSpec {
                for (auto& L : s.sides) L *= t;
                return s;
            },
            [t](IntervalUnionSpec s) -> DomainSpec {
                for (auto& a : s.lengths) a *= t;
                return s;
            },
            [t](BallUnionSpec s) -> DomainSpec {
                for (auto& r : s.radii) r *= t;
                return s;
            },
            [t](CylinderSpec s) -> DomainSpec {
                const int m = s.dim - 1;
                s.cross_measure *= std::pow(t, m);
                if (s.cross_perimeter) *s.cross_perimeter *= std::pow(t, m - 1);
                if (s.smooth_radius) *s.smooth_radius *= t;
                if (s.cross_lambda) *s.cross_lambda /= t * t;
                s.height *= t;
                return s;
            },
            [t](GridSpec s) -> DomainSpec {
                s.spacing *= t;
                return s;
            },
            [t](const ThinSpec& s) -> DomainSpec { return ThinSpec{s.profile.scaled(t), s.eps}; },
        },
        spec);
}

}  // namespace shapelab
