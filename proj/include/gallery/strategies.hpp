#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gallery/visibility.hpp"

namespace gallery {

// The two readings of "every third vertex" when 3 does not divide n:
// Strict stops at floor(n/3) guards, Generous keeps going and stops just
// before wrapping past the start, placing ceil(n/3).
enum class Interpretation { Strict, Generous };

// Traversal direction in terms of the stored vertex order: CW follows the
// listed order (the bundled nonagon is listed clockwise), CCW reverses it.
enum class Direction { CW, CCW };

struct EveryThirdOrigin {
    int start;
    Direction dir;
};

enum class StrategyKind { EveryThird, Fisk, Explicit };

struct GuardPlacement {
    std::vector<int> guards;  // sorted ascending, no duplicates
    StrategyKind kind = StrategyKind::Explicit;
    // EveryThird only: all (start, direction) pairs generating this set.
    Interpretation interpretation = Interpretation::Strict;
    std::vector<EveryThirdOrigin> origins;
    // Fisk only.
    Color fisk_color = Color::R;
};

struct StrategyVerdict {
    GuardPlacement placement;
    CoverageReport report;
};

// All every-third-vertex placements over n starts and both directions,
// deduplicated by guard set (first occurrence wins; later generators are
// appended to `origins`). When 3 | n both interpretations coincide and
// the result is exactly the three residue classes.
std::vector<GuardPlacement> every_third_placements(int n, Interpretation interp);

// One coverage verdict per placement, in placement order.
std::vector<StrategyVerdict> evaluate_strategy(const SimplePolygon& poly,
                                               Interpretation interp);

// First covering placement in deterministic order, if any.
std::optional<GuardPlacement> exists_good_start(const SimplePolygon& poly,
                                                Interpretation interp);

// Triangulate, Fisk-color, and take the smallest color class (ties by
// R < G < B). Never more than floor(n/3) guards; always covers.
GuardPlacement fisk_placement(const SimplePolygon& poly);

// Smallest k <= max_k such that some k-subset of vertices covers the
// polygon, with the lexicographically first witness; exhaustive.
std::optional<std::pair<int, GuardPlacement>> min_vertex_guards(const SimplePolygon& poly,
                                                                int max_k);

// First triangle of t (in construction order) none of whose vertices has
// color `missing`, if any.
std::optional<std::array<int, 3>> triangle_missing_color(const Triangulation& t,
                                                         const Coloring& coloring,
                                                         Color missing);

enum class TriangleBoundaryClass { AllBoundaryInterior, HasBoundaryEdge };

// Classifies whether any two vertices of the triple are adjacent on the
// polygon boundary. Requires 3 | n.
TriangleBoundaryClass color_sequence_check(const SimplePolygon& poly,
                                           const std::array<int, 3>& triangle);

}  // namespace gallery
