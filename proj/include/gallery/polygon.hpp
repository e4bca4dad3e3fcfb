#pragma once

#include <array>
#include <utility>
#include <vector>

#include "gallery/errors.hpp"
#include "gallery/geometry.hpp"

namespace gallery {

enum class Winding { Clockwise, CounterClockwise };

// A validated simple polygon. Vertex order and indices are preserved
// exactly as given (never reordered or normalized), so vertex labels in
// input files stay stable; the winding of the stored list is recorded.
//
// Validity: at least 3 vertices, all distinct, no three consecutive
// collinear, and no two non-adjacent edges touching (adjacent edges meet
// only at their shared vertex).
class SimplePolygon {
public:
    // Validates and constructs; throws ValidationError naming the
    // offending indices otherwise.
    static SimplePolygon validate(std::vector<Point> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    const Point& vertex(int i) const;
    const std::vector<Point>& vertices() const { return vertices_; }
    Winding winding() const { return winding_; }

    int next(int i) const { return (i + 1) % size(); }
    int prev(int i) const { return (i + size() - 1) % size(); }

    bool operator==(const SimplePolygon& o) const { return vertices_ == o.vertices_; }

private:
    explicit SimplePolygon(std::vector<Point> vertices, Winding w)
        : vertices_(std::move(vertices)), winding_(w) {}

    std::vector<Point> vertices_;
    Winding winding_;
};

PointLocation point_in_polygon(const Point& q, const SimplePolygon& poly);

// Exact unsigned area (shoelace), independent of stored winding.
Rational polygon_area(const SimplePolygon& poly);

// Ear test per the interior-diagonal definition: the open segment joining
// the neighbors of vertex i lies strictly inside the polygon, and the
// closed ear triangle contains no polygon vertex beyond its three corners.
bool is_ear(const SimplePolygon& poly, int i);

// Deletes ear vertex i, preserving the order of the others.
// Throws WouldDegenerate when n == 3 and NotAnEar otherwise if i fails is_ear.
SimplePolygon remove_ear(const SimplePolygon& poly, int i);

// True iff the open ear triangles at i and j are disjoint.
// Both indices must pass is_ear.
bool non_overlapping(const SimplePolygon& poly, int i, int j);

// Triangulation by deterministic ear clipping (lowest original index
// first). Triangles are index triples into the original vertex list;
// the weak dual tree links triangles sharing a diagonal.
struct Triangulation {
    SimplePolygon polygon;
    std::vector<std::array<int, 3>> triangles;     // n-2 triples
    std::vector<std::pair<int, int>> diagonals;    // n-3 pairs, each sorted
    std::vector<std::vector<int>> dual;            // adjacency: triangle -> triangles
};

Triangulation triangulate(const SimplePolygon& poly);

// Ear tips revealed by the triangulation: for each leaf of the dual tree,
// the vertex of that triangle not shared with its neighbor. Empty for a
// bare triangle (n == 3); length >= 2 whenever n >= 4.
std::vector<int> dual_leaves(const Triangulation& t);

enum class Color { R, G, B };

struct Coloring {
    enum class Kind { Fisk, Cyclic };
    std::vector<Color> colors;  // indexed by vertex
    Kind kind;
};

// Proper 3-coloring in which every triangle of t sees all three colors.
// Deterministic: the dual tree is rooted at the triangle containing
// vertex 0 (ties by lowest sorted triple), whose vertices get R,G,B in
// index order; colors propagate across shared diagonals.
Coloring fisk_coloring(const Triangulation& t);

// color(i) = {R,G,B}[i mod 3]. Requires 3 | n (NotDivisibleBy3 otherwise);
// the three color classes are the three every-third-vertex guard sets.
Coloring cyclic_coloring(const SimplePolygon& poly);

// Internal ear-clipping on a raw ring, shared with the subdivision code.
// `ring` must be a simple cycle in counterclockwise order with no
// repeated points; collinear runs are tolerated (skipped as ear tips
// only). Returns index triples into `ring`.
std::vector<std::array<int, 3>> triangulate_ring(const std::vector<Point>& ring);

}  // namespace gallery
