#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "enet/search.hpp"

namespace enet {

// Axis mapping of the contour plot: alpha linear on x, log10(lambda) on y.
// Exposed so consumers (and tests) can place overlays with the exact same
// transform the emitter uses.
struct ContourLayout {
  double alpha_lo = 0.0, alpha_hi = 1.0;     // data range, half-cell padded
  double loglam_lo = -1.0, loglam_hi = 0.0;  // log10(lambda) range, padded
  double px0 = 0.0, px1 = 0.0;               // plot box, pixels
  double py0 = 0.0, py1 = 0.0;               // py0 = top edge
  double width = 0.0, height = 0.0;

  double x_of_alpha(double alpha) const;
  double y_of_log10_lambda(double loglam) const;
};

ContourLayout contour_layout(const ZSurface& surface);

// Filled-cell contour of the lambda-alpha plane colored by log10(Z) with a
// 10-level viridis scale, a legend, and the global minimum marked by a red
// dot (id "min-marker"). Self-contained SVG 1.1.
std::string contour_svg(const ZSurface& surface);
void emit_contour_svg(const ZSurface& surface, const std::filesystem::path& path);

// Minimum cvm against the number of nonzero coefficients, point-and-line.
std::string nzero_svg(const std::vector<CvRecord>& by_nzero);
void emit_nzero_svg(const std::vector<CvRecord>& by_nzero, const std::filesystem::path& path);

}  // namespace enet
