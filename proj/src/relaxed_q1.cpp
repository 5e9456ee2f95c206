#include "shapelab/relaxed_q1.hpp"

#include <cmath>

#include "shapelab/closed_form.hpp"
#include "shapelab/errors.hpp"

namespace shapelab {

void RelaxedParams::validate() const {
    if (d < 2 || d > 8) throw ValidationError("relaxed: 2 <= d <= 8");
    if (!(c >= 0.0) || !std::isfinite(c)) throw ValidationError("relaxed: c >= 0");
    if (delta == 0.0) throw DomainError("relaxed: delta = 0");
    if (!(delta > 0.0 && delta < 1.0)) throw ValidationError("relaxed: 0 < delta < 1");
}

double lambda_c(const RelaxedParams& p) {
    p.validate();
    return p.c + ball_lambda_unit(p.d);
}

double t_c_lower(const RelaxedParams& p) {
    p.validate();
    return unit_ball_volume(p.d) * std::pow(1.0 - p.delta, 2 * p.d) / (1.0 / (p.delta * p.delta) + p.c);
}

double product_bound(const RelaxedParams& p) {
    p.validate();
    return (p.c + ball_lambda_unit(p.d)) * std::pow(1.0 - p.delta, 2 * p.d) / (1.0 / (p.delta * p.delta) + p.c);
}

RelaxedParams sup_demonstration(int d, double target) {
    if (!(target > 0.0 && target < 1.0)) throw DomainError("sup_demonstration: 0 < target < 1 required");
    RelaxedParams p{d, 0.0, 1.0 - std::pow(target, 1.0 / (4.0 * d))};
    for (int k = 0; k < 60; ++k) {
        p.c = std::pow(p.delta, -4.0);
        if (product_bound(p) > target) return p;
        p.delta *= 0.5;
    }
    throw NumericalError("sup_demonstration: no admissible (c, delta) found");
}

}  // namespace shapelab
