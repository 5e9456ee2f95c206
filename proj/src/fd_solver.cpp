#include "shapelab/fd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "shapelab/errors.hpp"
#include "shapelab/log.hpp"

namespace shapelab {

namespace {

double dot(std::span<const double> a, std::span<const double> b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

void SolveOptions::validate() const {
    if (!(cg_tol > 0.0 && cg_tol < 1.0)) throw ValidationError("solve options: cg_tol in (0, 1)");
    if (!(eig_tol > 0.0 && eig_tol < 1.0)) throw ValidationError("solve options: eig_tol in (0, 1)");
    if (max_iter < 1 || max_outer < 1) throw ValidationError("solve options: iteration limits >= 1");
}

GridLaplacian::GridLaplacian(const GridSpec& grid)
    : rows_(grid.mask.rows()), cols_(grid.mask.cols()), spacing_(grid.spacing) {
    validate(grid);
    const Mask& m = grid.mask;
    std::vector<int> id(m.cells().size(), -1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (m(i, j)) {
                id[m.index(i, j)] = static_cast<int>(cells_.size());
                cells_.push_back(m.index(i, j));
            }
        }
    }
    const int sentinel = static_cast<int>(cells_.size());
    neighbors_.resize(4 * cells_.size());
    diag_.resize(cells_.size());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        const std::size_t c = cells_[k];
        const std::size_t nb[4] = {c - 1, c + 1, c - cols_, c + cols_};
        int exterior = 0;
        for (int s = 0; s < 4; ++s) {
            const int v = id[nb[s]];
            neighbors_[4 * k + s] = v >= 0 ? v : sentinel;
            exterior += v < 0;
        }
        diag_[k] = 4.0 + exterior;
    }
}

std::vector<double> GridLaplacian::make_vector(double fill) const {
    std::vector<double> v(size() + 1, fill);
    v.back() = 0.0;
    return v;
}

void GridLaplacian::apply(std::span<const double> x, std::span<double> y) const {
    const double ih2 = 1.0 / (spacing_ * spacing_);
    const std::size_t n = size();
    const int* nb = neighbors_.data();
    for (std::size_t k = 0; k < n; ++k, nb += 4) {
        y[k] = (diag_[k] * x[k] - x[nb[0]] - x[nb[1]] - x[nb[2]] - x[nb[3]]) * ih2;
    }
    y[n] = 0.0;
}

double GridLaplacian::dirichlet_energy(std::span<const double> v) const {
    const std::size_t n = size();
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (int d = 0; d < 4; ++d) {
            const int j = neighbors_[4 * k + d];
            if (j == static_cast<int>(n)) {
                s += 2.0 * v[k] * v[k];
            } else if (static_cast<std::size_t>(j) > k) {
                const double g = v[k] - v[j];
                s += g * g;
            }
        }
    }
    return s;
}

double GridLaplacian::integral(std::span<const double> v) const {
    return spacing_ * spacing_ * std::accumulate(v.begin(), v.begin() + size(), 0.0);
}

double GridLaplacian::l2_norm_sq(std::span<const double> v) const {
    return spacing_ * spacing_ * dot(v, v, size());
}

double GridLaplacian::rayleigh_quotient(std::span<const double> v) const {
    return dirichlet_energy(v) / l2_norm_sq(v);
}

GridField GridLaplacian::to_field(std::span<const double> v) const {
    GridField f{rows_, cols_, spacing_, std::vector<double>(static_cast<std::size_t>(rows_) * cols_, 0.0)};
    for (std::size_t k = 0; k < size(); ++k) f.values[cells_[k]] = v[k];
    return f;
}

std::vector<double> GridLaplacian::from_field(const GridField& f) const {
    if (f.rows != rows_ || f.cols != cols_) throw ValidationError("grid field: shape mismatch");
    auto v = make_vector();
    for (std::size_t k = 0; k < size(); ++k) v[k] = f.values[cells_[k]];
    return v;
}

int GridLaplacian::conjugate_gradient(std::span<const double> b, std::span<double> x, double tol,
                                      int max_iter) const {
    const std::size_t n = size();
    auto r = make_vector(), p = make_vector(), ap = make_vector();
    apply(x, ap);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - ap[i];
    const double bnorm = std::sqrt(dot(b, b, n));
    const double target = tol * (bnorm > 0.0 ? bnorm : 1.0);
    double rr = dot(r, r, n);
    if (std::sqrt(rr) <= target) return 0;
    std::copy(r.begin(), r.end(), p.begin());
    for (int it = 1; it <= max_iter; ++it) {
        apply(p, ap);
        const double alpha = rr / dot(p, ap, n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_new = dot(r, r, n);
        if (std::sqrt(rr_new) <= target) return it;
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    throw IterationLimitError("conjugate gradient did not converge", max_iter, std::sqrt(rr) / (bnorm > 0 ? bnorm : 1));
}

namespace {

struct RawTorsion {
    std::vector<double> w;
    double torsion;
    int iterations;
};

RawTorsion torsion_kernel(const GridLaplacian& A, const SolveOptions& opts) {
    auto b = A.make_vector(1.0);
    auto w = A.make_vector();
    const int its = A.conjugate_gradient(b, w, opts.cg_tol, opts.max_iter);
    const double T = A.integral(w);
    return {std::move(w), T, its};
}

struct RawEigen {
    std::vector<double> u;
    double lambda;
    double residual;
    int outer;
};

RawEigen eigen_kernel(const GridLaplacian& A, std::vector<double> seed, const SolveOptions& opts) {
    const std::size_t n = A.size();
    auto normalize = [&](std::vector<double>& v) {
        const double s = 1.0 / std::sqrt(A.l2_norm_sq(v));
        for (std::size_t i = 0; i < n; ++i) v[i] *= s;
    };
    auto v = std::move(seed);
    normalize(v);
    auto x = A.make_vector();
    auto av = A.make_vector();
    // Returns lambda = <v, Av> / <v, v> and ||Av - lambda v|| / (lambda ||v||).
    auto rayleigh = [&](double& residual) {
        A.apply(v, av);
        double vav = 0.0, vv = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            vav += v[i] * av[i];
            vv += v[i] * v[i];
        }
        const double lambda = vav / vv;
        double rr = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = av[i] - lambda * v[i];
            rr += e * e;
        }
        residual = std::sqrt(rr / vv) / lambda;
        return lambda;
    };
    double residual = 0.0;
    double lambda = rayleigh(residual);
    for (int outer = 1; outer <= opts.max_outer; ++outer) {
        // Warm start x = v / lambda has relative residual `residual`; the
        // inner solve only needs to gain about one digit on it.
        for (std::size_t i = 0; i < n; ++i) x[i] = v[i] / lambda;
        const double inner_tol = std::clamp(0.05 * residual, opts.cg_tol, 1e-2);
        A.conjugate_gradient(v, x, inner_tol, opts.max_iter);
        std::swap(v, x);
        normalize(v);
        const double next = rayleigh(residual);
        const double change = std::abs(next - lambda);
        lambda = next;
        if (change <= opts.eig_tol * lambda) {
            log_debug("inverse iteration converged: outer=" + std::to_string(outer) +
                      " lambda=" + std::to_string(lambda) + " residual=" + std::to_string(residual));
            return {std::move(v), lambda, residual, outer};
        }
    }
    throw IterationLimitError("inverse iteration did not converge", opts.max_outer, residual);
}

}  // namespace

TorsionSolution solve_torsion(const GridSpec& grid, const SolveOptions& opts) {
    opts.validate();
    const GridLaplacian A(grid);
    auto t = torsion_kernel(A, opts);
    return {A.to_field(t.w), t.torsion, t.iterations};
}

EigenSolution solve_lambda(const GridSpec& grid, const SolveOptions& opts) {
    opts.validate();
    const GridLaplacian A(grid);
    auto t = torsion_kernel(A, opts);
    auto e = eigen_kernel(A, std::move(t.w), opts);
    return {A.to_field(e.u), e.lambda, e.residual, e.outer};
}

namespace {

std::pair<double, double> solve_pair(const GridSpec& grid, const SolveOptions& opts) {
    const GridLaplacian A(grid);
    auto t = torsion_kernel(A, opts);
    const double T = t.torsion;
    auto e = eigen_kernel(A, std::move(t.w), opts);
    return {e.lambda, T};
}

}  // namespace

SpectralResult spectrum_of_grid(const GridSpec& grid, const SolveOptions& opts, bool richardson) {
    opts.validate();
    validate(grid);
    const double area = static_cast<double>(grid.mask.count()) * grid.spacing * grid.spacing;
    const int components = count_components(grid.mask);
    log_info("grid solve: cells=" + std::to_string(grid.mask.count()) +
             " components=" + std::to_string(components));
    auto [lambda, T] = solve_pair(grid, opts);
    if (!richardson) return SpectralResult(lambda, T, area, Provenance::grid);
    auto [lambda_f, T_f] = solve_pair(refine(grid, 2), opts);
    const double err = std::max(std::abs(lambda - lambda_f) / lambda_f, std::abs(T - T_f) / T_f) / 3.0;
    return SpectralResult(lambda_f, T_f, area, Provenance::grid, err);
}

int count_components(const Mask& mask) {
    std::vector<int> label(mask.cells().size(), 0);
    std::vector<std::size_t> stack;
    int count = 0;
    for (int i = 0; i < mask.rows(); ++i) {
        for (int j = 0; j < mask.cols(); ++j) {
            if (!mask(i, j) || label[mask.index(i, j)]) continue;
            ++count;
            stack.push_back(mask.index(i, j));
            label[mask.index(i, j)] = count;
            while (!stack.empty()) {
                const std::size_t c = stack.back();
                stack.pop_back();
                const int ci = static_cast<int>(c / mask.cols()), cj = static_cast<int>(c % mask.cols());
                const int di[4] = {-1, 1, 0, 0}, dj[4] = {0, 0, -1, 1};
                for (int s = 0; s < 4; ++s) {
                    const int ni = ci + di[s], nj = cj + dj[s];
                    if (ni < 0 || nj < 0 || ni >= mask.rows() || nj >= mask.cols()) continue;
                    const std::size_t nc = mask.index(ni, nj);
                    if (mask(ni, nj) && !label[nc]) {
                        label[nc] = count;
                        stack.push_back(nc);
                    }
                }
            }
        }
    }
    return count;
}

GridSpec refine(const GridSpec& grid, int factor) {
    validate(grid);
    if (factor < 1) throw DomainError("refine: factor >= 1");
    const Mask& m = grid.mask;
    Mask out((m.rows() - 2) * factor + 2, (m.cols() - 2) * factor + 2);
    for (int i = 1; i + 1 < m.rows(); ++i) {
        for (int j = 1; j + 1 < m.cols(); ++j) {
            if (!m(i, j)) continue;
            for (int a = 0; a < factor; ++a) {
                for (int b = 0; b < factor; ++b) out.set(1 + (i - 1) * factor + a, 1 + (j - 1) * factor + b);
            }
        }
    }
    return {std::move(out), grid.spacing / factor};
}

}  // namespace shapelab
