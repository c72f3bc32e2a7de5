#pragma once

#include <string>

#include "tlg/polyhedra.hpp"

namespace tlg {

struct SvgViewport {
  Int xmin, xmax, ymin, ymax;
};

/// Lattice box around the minimal-face points and the origin, padded by one
/// unit, or by two when there are rays.
SvgViewport viewport_for(const Polyhedron& P);

/// The polyhedron cut down to the viewport box, as a counterclockwise vertex list.
std::vector<RatVector> clipped_polygon(const Polyhedron& P, const SvgViewport& box);

/// Deterministic drawing of a 2-D polyhedron: lattice grid, origin marker, the
/// clipped region, facet edges, labelled vertices and ray arrows. 40 px per
/// unit, y axis up. Throws InputError unless dim = 2 and P is nonempty.
std::string render_svg(const Polyhedron& P);

}  // namespace tlg
