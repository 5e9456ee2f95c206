#pragma once

#include "shapelab/closed_form.hpp"
#include "shapelab/domains.hpp"
#include "shapelab/fd_solver.hpp"

namespace shapelab {

struct SpectrumOptions {
    SolveOptions solve;
    bool richardson = false;   // grid domains: add the half-spacing solve
    int series_terms = kDefaultSeriesTerms;
};

/// lambda, T and |Omega| of any supported domain: closed forms for balls,
/// intervals and ball unions, the series for planar rectangles, the grid
/// solver for rasters and the first-order asymptotics for thin domains.
/// Cylinders (only bounds are known) raise UnsupportedError.
SpectralResult spectrum(const DomainSpec& spec, const SpectrumOptions& opts = {});

}  // namespace shapelab
