#pragma once

namespace shapelab {

/// Unit ball D in R^d with the uniform relaxation density c (units of
/// length^-2) and the cut-off width delta of the test function.
struct RelaxedParams {
    int d = 2;
    double c = 0.0;
    double delta = 0.5;

    void validate() const;
};

/// lambda_c(D) = c + lambda(D).
double lambda_c(const RelaxedParams& p);

/// Lower bound omega_d (1 - delta)^{2d} / (delta^-2 + c) on T_c(D).
double t_c_lower(const RelaxedParams& p);

/// lambda_c T_c / |D| >= (c + lambda(D)) (1 - delta)^{2d} / (delta^-2 + c).
double product_bound(const RelaxedParams& p);

/// Parameters with product_bound > target: delta = 1 - target^{1/(4d)} so
/// that (1 - delta)^{2d} = sqrt(target), and c = delta^-4. delta is halved
/// until the bound is verified.
RelaxedParams sup_demonstration(int d, double target);

}  // namespace shapelab
