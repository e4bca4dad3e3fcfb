#pragma once

#include <optional>
#include <string>

#include "gallery/visibility.hpp"

namespace gallery {

// Batch figure description: the polygon plus optional triangulation
// diagonals (dashed), vertex coloring (vertex fill colors), guard
// markers, and shaded blindspot cells. Output coordinates flip the y
// axis so +y renders upward.
struct RenderSpec {
    SimplePolygon polygon;
    std::optional<Triangulation> triangulation;
    std::optional<Coloring> coloring;
    std::vector<int> guards;
    std::vector<Cell> blindspots;
    int canvas = 640;  // pixel extent of the longer side
};

// Well-formed deterministic SVG 1.1 text for the spec.
// Throws InvalidGuardIndex / std::invalid_argument on index mismatches.
std::string render_svg(const RenderSpec& spec);

}  // namespace gallery
