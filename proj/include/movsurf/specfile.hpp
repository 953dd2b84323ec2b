#pragma once

#include <optional>
#include <string_view>

#include "movsurf/resultant.hpp"
#include "movsurf/surface.hpp"

namespace movsurf {

// Line-oriented key=value document:
//   case=tensor|triangular, m=, n=, x1..x4= (surface) or f1..f3= (resultant triple).
// Blank lines and lines starting with '#' are ignored.
struct SpecFile {
  Shape shape;
  std::optional<std::array<SparsePoly, 4>> x;
  std::optional<Triple> f;
};

SpecFile parse_spec(std::string_view text);

// Requires x1..x4.
ParamSurface parse_surface_spec(std::string_view text);
// Requires f1..f3; returns the shape alongside.
std::pair<Shape, Triple> parse_triple_spec(std::string_view text);

Patch parse_patch(std::string_view name);

}  // namespace movsurf
