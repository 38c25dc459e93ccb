#pragma once

#include <iosfwd>
#include <string>

#include "curveslide/bands.hpp"

namespace curveslide {

// Text formats. Triangulation: a header line `triangles T` followed by
// exactly 3T/2 lines `glue t s t' s'` with 0-based indices; edge indices
// follow line order. Coloring: one line of E space-separated nonnegative
// integers in edge order.

Triangulation read_triangulation(std::istream& in, const std::string& name = "<input>");
Triangulation read_triangulation_file(const std::string& path);
void write_triangulation(std::ostream& out, const Triangulation& tri);

// Length is validated; admissibility is checked when `tri` is given.
Coloring read_coloring(std::istream& in, const Triangulation& tri,
                       const std::string& name = "<input>");
Coloring read_coloring_file(const std::string& path, const Triangulation& tri);
void write_coloring(std::ostream& out, const Coloring& f);
std::string coloring_str(const Coloring& f);

// Deterministic SVG schematic of the vertex link: one sector per corner
// labeled with its corner number, gaps highlighted, edge ends marked
// between sectors, and one arc per maximal band labeled with its class.
std::string render_link(const Triangulation& tri, const Coloring& f);

}  // namespace curveslide
