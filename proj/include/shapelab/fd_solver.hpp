#pragma once

#include <span>
#include <vector>

#include "shapelab/closed_form.hpp"
#include "shapelab/domains.hpp"

namespace shapelab {

struct SolveOptions {
    double cg_tol = 1e-10;   // relative residual of each linear solve
    double eig_tol = 1e-9;   // relative change of the Rayleigh quotient
    int max_iter = 50000;    // CG iterations per linear solve
    int max_outer = 2000;    // inverse-iteration steps

    void validate() const;
};

/// Scalar field on the raster of a GridSpec; zero on masked-out cells.
struct GridField {
    int rows = 0;
    int cols = 0;
    double spacing = 1.0;
    std::vector<double> values;

    double operator()(int i, int j) const { return values[static_cast<std::size_t>(i) * cols + j]; }
};

/// Five-point Dirichlet Laplacian on the cells of a mask, cell-centred:
/// the zero boundary condition is imposed on the faces separating interior
/// and exterior cells, so a domain made of whole cells is discretised with
/// second-order accuracy.
///
/// Vectors passed to the kernel are indexed by interior cell (row-major
/// order) and have size() + 1 entries; the last entry is a zero sentinel.
class GridLaplacian {
public:
    explicit GridLaplacian(const GridSpec& grid);

    std::size_t size() const noexcept { return cells_.size(); }
    double spacing() const noexcept { return spacing_; }
    std::vector<double> make_vector(double fill = 0.0) const;

    /// y = A x.
    void apply(std::span<const double> x, std::span<double> y) const;

    /// Discrete Dirichlet integral: sum over interior edges of (v_i - v_j)^2
    /// plus 2 v_i^2 per boundary face. Equals h^2 v^T A v.
    double dirichlet_energy(std::span<const double> v) const;

    /// Discrete integral h^2 * sum v.
    double integral(std::span<const double> v) const;
    double l2_norm_sq(std::span<const double> v) const;

    /// Dirichlet integral over L2 norm squared.
    double rayleigh_quotient(std::span<const double> v) const;

    GridField to_field(std::span<const double> v) const;
    std::vector<double> from_field(const GridField& f) const;

    /// Unpreconditioned conjugate gradient for A x = b starting from x.
    /// Stops when ||b - A x|| <= tol ||b||; returns the iteration count.
    int conjugate_gradient(std::span<const double> b, std::span<double> x, double tol, int max_iter) const;

private:
    int rows_ = 0, cols_ = 0;
    double spacing_ = 1.0;
    std::vector<std::size_t> cells_;         // linear mask index per unknown
    std::vector<int> neighbors_;             // 4 per unknown, sentinel = size()
    std::vector<double> diag_;               // 4 + number of exterior neighbours
};

struct TorsionSolution {
    GridField field;
    double torsion;
    int iterations;
};

struct EigenSolution {
    GridField field;     // unit discrete L2 norm
    double lambda;
    double residual;     // ||A u - lambda u|| / (lambda ||u||)
    int outer_iterations;
};

/// Solves -Delta w = 1 with zero Dirichlet data; T = h^2 sum w.
TorsionSolution solve_torsion(const GridSpec& grid, const SolveOptions& opts = {});

/// Smallest eigenvalue of the discrete Dirichlet Laplacian by inverse power
/// iteration seeded with the torsion function.
EigenSolution solve_lambda(const GridSpec& grid, const SolveOptions& opts = {});

/// Both solves bundled. With `richardson`, the mask is also solved at half
/// spacing (the same pixel domain), the finer values are returned, and
/// err_estimate is the second-order Richardson estimate
/// max(|dlambda|/lambda, |dT|/T) / 3.
SpectralResult spectrum_of_grid(const GridSpec& grid, const SolveOptions& opts = {}, bool richardson = false);

/// Number of 4-connected components of the interior cells.
int count_components(const Mask& mask);

/// Same pixel domain with every cell split into factor x factor cells.
GridSpec refine(const GridSpec& grid, int factor = 2);

}  // namespace shapelab
