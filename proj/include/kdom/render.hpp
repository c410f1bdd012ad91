#pragma once

#include <string>

#include "kdom/grid.hpp"
#include "kdom/vertex_set.hpp"

namespace kdom {

struct RenderOptions {
  /// ASCII: mark uncovered grid vertices with 'x'.
  bool coverage = false;
  /// SVG: outline the radius-k diamond of every point.
  bool diamonds = false;
};

/// North at the top. '#' = set point, '.' = grid vertex, ' ' = margin cell.
/// The k-margin is drawn only when some point lies outside the grid.
std::string render_ascii(const GridDims& dims, Radius k, const VertexSet& s,
                         const RenderOptions& opts = {});

/// Grid lines over Y, Y's boundary in green, the grid boundary in red, set
/// points as filled circles.
std::string render_svg(const GridDims& dims, Radius k, const VertexSet& s,
                       const RenderOptions& opts = {});

}  // namespace kdom
