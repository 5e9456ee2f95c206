#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "shapelab/closed_form.hpp"

namespace shapelab {

/// F_q = lambda T^q / |Omega|^{(dq + 2q - 2)/d} together with its inputs.
struct FunctionalValue {
    double q;
    int d;
    double value;
    SpectralResult components;

    /// Recomputes F_q from `components`.
    double recompute() const;
};

/// Normalised Blaschke-Santalo coordinates; (1, 1) is the ball.
struct DiagramPoint {
    double x;
    double y;
};

/// Exponent (dq + 2q - 2) / d of |Omega| in F_q.
double measure_exponent(double q, int d);

FunctionalValue f_q(const SpectralResult& result, double q, int d);

/// F_q of any ball in R^d: j^2 (d(d+2))^{-q} omega_d^{2(1-q)/d}.
double f_q_ball(double q, int d);

/// x = omega_d^{2/d} lambda(B_1) / (|Omega|^{2/d} lambda),
/// y = omega_d^{(d+2)/d} T / (|Omega|^{(d+2)/d} T(B_1)).
DiagramPoint normalized_coords(const SpectralResult& result, int d);

/// G_q(a) = (sum a^3)^q / ((max a)^2 (sum a)^{3q-2}); F_q of the interval
/// union with lengths a equals (pi^2 / 12^q) G_q(a).
double g_q(std::span<const double> a, double q);

// Conjectured optimal constants for F_1 over convex domains.
double conjectured_c_plus();
double conjectured_c_minus(int d);

/// T(B) / |B|^{1 + 2/d} = 1 / (d (d+2) omega_d^{2/d}).
double ball_torsion_ratio(int d);

enum class QClass { kohler_jobin, sub_unit, unit, super_unit };
enum class InfKind { attained_ball, zero, positive_unknown };
enum class SupKind { infinite, one, finite_bound, below_one };

std::string_view to_string(QClass c);
std::string_view to_string(InfKind k);
std::string_view to_string(SupKind k);

/// One row of the inf/sup tables for F_q over all (or convex) domains.
struct RegimeBounds {
    QClass q_class;
    InfKind inf_kind;
    SupKind sup_kind;
    std::optional<double> inf_value;   // exact minimum or proven/conjectured lower bound
    std::optional<double> sup_value;   // proven/conjectured upper bound
    bool conjectural = false;          // values rest on the conjectured C_d^+/-
};

RegimeBounds regime_table(double q, int d, bool convex);

/// Lower bounds on inradius / diameter of the optimal convex domain:
/// the maximiser for q > 1 (first) or the minimiser for q < 1 (second).
std::pair<std::optional<double>, std::optional<double>> inradius_ratio_bounds(double q, int d);

}  // namespace shapelab
