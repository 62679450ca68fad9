#pragma once

#include <optional>
#include <string>
#include <vector>

#include "figcmp/figure.hpp"

namespace figcmp {

struct RenderOptions {
  double x0 = -5.0, y0 = -5.0, x1 = 5.0, y1 = 5.0;
  int width = 640, height = 640;
  long truncation = 40;                 // orbit realization depth
  std::optional<Isometry> witness;      // draw p -> f(p) arrows when present
};

/// Deterministic SVG 1.1 rendering of the figures: stable element order,
/// fixed number formatting, dashed strokes for excluded boundaries.
/// Half-plane-model figures are drawn in the disc via the model map;
/// elliptic figures in orthographic top-down projection.  Rendering is
/// presentation only and never feeds back into any verdict.
std::string render_svg(const std::vector<SymbolicFigure>& figures,
                       const RenderOptions& opts);

}  // namespace figcmp
