#pragma once

#include <optional>
#include <vector>

#include "gallery/rational.hpp"

namespace gallery {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // Lexicographic (x, then y); used for ordered containers and dedup.
    bool operator<(const Point& o) const {
        int c = cmp(x, o.x);
        if (c != 0) return c < 0;
        return cmp(y, o.y) < 0;
    }
};

Point midpoint(const Point& a, const Point& b);

// Closed segment with distinct endpoints.
struct Segment {
    Point a;
    Point b;

    Segment() = default;
    Segment(Point pa, Point pb);  // throws std::invalid_argument if pa == pb

    bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
};

enum class Orientation { Left, Right, Collinear };

// Sign of the cross product (q-p) x (r-p): +1, -1 or 0. Exact.
int orientation_sign(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

// Exact intersection of two closed segments. `proper` is true only for a
// transversal crossing interior to both segments; endpoint touches and
// collinear overlaps report proper = false.
struct IntersectionResult {
    enum class Kind { Empty, Point, Overlap } kind = Kind::Empty;
    gallery::Point point;     // valid when kind == Point
    gallery::Segment overlap; // valid when kind == Overlap
    bool proper = false;

    bool empty() const { return kind == Kind::Empty; }
};

IntersectionResult segment_intersection(const Segment& s1, const Segment& s2);

enum class PointLocation { Inside, OnBoundary, Outside };

// Raw-ring predicates shared by the polygon layer. `ring` is a cyclic
// vertex list; no validity assumptions beyond >= 3 distinct points.
PointLocation point_in_ring(const Point& q, const std::vector<Point>& ring);
Rational ring_signed_area(const std::vector<Point>& ring);  // shoelace / 2
Rational triangle_area(const Point& a, const Point& b, const Point& c);

}  // namespace gallery
