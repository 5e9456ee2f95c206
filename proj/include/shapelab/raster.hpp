#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>

#include "shapelab/domains.hpp"

namespace shapelab {

// Rasterisers for planar test domains. `per_unit` is the number of cells per
// unit length (spacing = 1 / per_unit); a cell is interior when its centre
// lies inside the shape. Every mask gets the empty outer ring.

/// Cells of the box [0, width] x [0, height] whose centre satisfies `inside`.
GridSpec raster_predicate(double width, double height, int per_unit,
                          const std::function<bool(double, double)>& inside);

/// Axis-aligned rectangle; sides are rounded to whole cells.
GridSpec raster_rect(double width, double height, int per_unit);
GridSpec raster_disk(double radius, int per_unit);
/// Square of the given side with its upper-right quadrant removed.
GridSpec raster_lshape(double side, int per_unit);
/// Random star-shaped blob of mean radius `radius` (a few low Fourier modes).
GridSpec raster_blob(std::uint64_t seed, double radius, int per_unit);
/// Two disjoint squares of sides a and b separated by a gap of a/4.
GridSpec raster_square_pair(double a, double b, int per_unit);
/// Disk of radius r next to a square of side s.
GridSpec raster_disk_square(double r, double s, int per_unit);

/// Plain-text portable bitmap (P1); '1' marks an interior cell. A one-cell
/// empty ring is added around the image.
GridSpec read_pbm(std::istream& in, double spacing);
/// Writes the mask without its empty outer ring.
void write_pbm(std::ostream& out, const Mask& mask);

}  // namespace shapelab
