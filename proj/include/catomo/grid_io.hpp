#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "catomo/analysis.hpp"
#include "catomo/tomogram.hpp"

namespace catomo::io {

/// One double with 17 significant digits (lossless text round-trip).
std::string fmt17(double v);

/// CSV layout: header "# theta1, x1, omega", one row per grid point,
/// theta-major order, 17 significant digits.
void write_grid_csv(const tomo::TomogramGrid& grid, std::ostream& os);

/// Rebuild a grid from the CSV layout above. Axes are recovered from the row
/// ordering; metadata is not stored in the file, so the returned grid carries
/// placeholder source parameters.
tomo::TomogramGrid read_grid_csv(std::istream& is);

/// 8-bit binary PGM, theta on the horizontal axis, X increasing downward from
/// the top row at x_max, values scaled by the grid maximum.
void write_grid_pgm(const tomo::TomogramGrid& grid, std::ostream& os);

/// CSV with header "# phi, q". Degenerate points are skipped.
void write_qcurve_csv(const std::vector<analysis::QPoint>& curve, std::ostream& os);

}  // namespace catomo::io
