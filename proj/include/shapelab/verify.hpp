#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "shapelab/closed_form.hpp"
#include "shapelab/domains.hpp"
#include "shapelab/fd_solver.hpp"

namespace shapelab {

struct CaseResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_passed() const;
};

struct VerifyOptions {
    int grid = 128;            // cells per unit length for raster domains
    std::uint64_t seed = 1;
    int jobs = 1;
    int samples = 1000;        // random cases per family
};

/// kohler-jobin, polya-szego, saint-venant, faber-krahn, theorem-2-2,
/// pconvthin, g-q-regimes, relaxed-q1.
const std::vector<std::string>& suite_names();

/// Runs one suite; unknown names raise ValidationError.
SuiteReport run_suite(std::string_view name, const VerifyOptions& opts);

struct NamedGrid {
    std::string name;
    GridSpec grid;
};

/// 25 planar raster domains inside the unit box: squares and rectangles,
/// disks, L-shapes, random blobs and disjoint pairs.
std::vector<NamedGrid> grid_corpus(int per_unit);

/// Solves every domain with the Richardson estimate, fanning out over
/// `jobs` threads; results are in input order.
std::vector<SpectralResult> solve_corpus(const std::vector<NamedGrid>& corpus, int jobs,
                                         const SolveOptions& opts = {});

/// Runs fn(i) for i in [0, n) on `jobs` threads (chunked by index).
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace shapelab
