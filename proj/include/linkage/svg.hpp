#pragma once

#include <string>

#include "linkage/catalog.hpp"
#include "linkage/geometry.hpp"

namespace linkage {

// 512x512 SVG 1.1 documents with fixed-precision coordinates, so equal inputs
// give identical bytes.

// Polygon in the top half, arrow diagram in the bottom half.
std::string svg_configuration(const LengthVector& l, const AngleConfig& a);

// Vertices on a circle, arcs as curves; parallel arcs fan out.
std::string svg_graph(const AnnotatedGraph& g);

}  // namespace linkage
