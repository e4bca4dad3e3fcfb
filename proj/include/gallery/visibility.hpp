#pragma once

#include <vector>

#include "gallery/polygon.hpp"

namespace gallery {

// True iff the closed segment pq lies entirely in the closed polygon.
// Grazing along an edge or passing exactly through a vertex without
// exiting counts as visible. Exact: the segment is split at every
// boundary intersection and each open subsegment's midpoint is located.
// Throws PointOutsidePolygon if either endpoint is outside.
bool visible(const SimplePolygon& poly, const Point& p, const Point& q);

// A maximal segment along which visibility from a fixed guard can
// change: the sight ray from the guard grazes `pivot` and continues
// inside the polygon until its first boundary hit. The emitted set is a
// superset of the true visibility-polygon windows; extra segments only
// refine the subdivision.
struct WindowSegment {
    int guard;
    int pivot;
    Segment segment;  // from the pivot vertex to the first hit beyond it
};

std::vector<WindowSegment> window_segments(const SimplePolygon& poly, int guard);

// Triangular cell with its exact centroid (guaranteed interior).
struct Cell {
    Point a, b, c;
    Point centroid;

    Rational area() const { return triangle_area(a, b, c); }
};

// Arrangement of the polygon edges plus window segments, restricted to
// the polygon and triangulated. Cells partition the polygon exactly;
// `vertices` and `edges` are the arrangement skeleton (edges are the
// split subsegments, interiors free of further intersections).
struct Subdivision {
    SimplePolygon polygon;
    std::vector<Cell> cells;
    std::vector<Point> vertices;
    std::vector<Segment> edges;

    Rational cell_area_sum() const;
};

Subdivision build_subdivision(const SimplePolygon& poly,
                              const std::vector<WindowSegment>& windows);

// The finite point set on which per-guard visibility decides coverage of
// the whole closed polygon: cell centroids, arrangement vertices, and
// arrangement edge midpoints.
std::vector<Point> coverage_samples(const Subdivision& sub);

struct CoverageReport {
    bool covered = false;
    std::vector<Cell> blindspot_cells;
    Rational blindspot_area;
    // One representative per connected blindspot component, plus any
    // uncovered arrangement vertices and edge midpoints.
    std::vector<Point> witnesses;
};

// Exact coverage verdict for a set of vertex guards. Builds the
// subdivision from all guards' windows; visibility from each guard is
// constant on every open cell and open arrangement edge, so testing the
// finite sample set decides the whole closed polygon.
CoverageReport coverage(const SimplePolygon& poly, const std::vector<int>& guards);

// Brute-force sampling oracle used by tests: a resolution x resolution
// rational lattice over the bounding box, restricted to points strictly
// inside the polygon.
struct GridSample {
    Point point;
    bool covered;
};

std::vector<GridSample> grid_oracle(const SimplePolygon& poly,
                                    const std::vector<int>& guards,
                                    int resolution);

}  // namespace gallery
