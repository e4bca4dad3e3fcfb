#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <vector>

#include "gallery/polygon.hpp"

namespace test_support {

using namespace gallery;

inline std::vector<Point> nonagon_points() {
    return {{0, 0}, {1, 5}, {0, 8}, {2, 4}, {6, 11}, {4, 7}, {15, -1}, {9, 3}, {6, 4}};
}

inline SimplePolygon nonagon() { return SimplePolygon::validate(nonagon_points()); }

inline SimplePolygon l_hexagon() {
    return SimplePolygon::validate({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

inline SimplePolygon unit_square() {
    return SimplePolygon::validate({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline SimplePolygon convex_hexagon() {
    return SimplePolygon::validate({{1, 0}, {3, 0}, {4, 2}, {3, 4}, {1, 4}, {0, 2}});
}

inline SimplePolygon convex_heptagon() {
    return SimplePolygon::validate({{2, 0}, {4, 0}, {6, 2}, {6, 4}, {4, 6}, {2, 6}, {0, 4}});
}

inline SimplePolygon convex_octagon() {
    return SimplePolygon::validate(
        {{2, 0}, {4, 0}, {6, 2}, {6, 4}, {4, 6}, {2, 6}, {0, 4}, {0, 2}});
}

// Thin trapezoid: every vertex is an ear; adjacent ear triangles overlap,
// opposite ones are disjoint.
inline SimplePolygon thin_trapezoid() {
    return SimplePolygon::validate({{0, 0}, {16, 0}, {15, 1}, {1, 1}});
}

// Hexagon with exactly three ears 2, 3, 5: the pair (2,3) overlaps while
// 5 is clear of both (found by seeded search, frozen).
inline SimplePolygon three_ears_hexagon() {
    return SimplePolygon::validate({{40, 27}, {27, 41}, {10, 63}, {2, 38}, {34, 3}, {53, 58}});
}

// Octagon whose deterministic triangulation has a path dual with leaf
// tips 1 and 6 (found by seeded search, frozen).
inline SimplePolygon path_dual_octagon() {
    return SimplePolygon::validate(
        {{16, 28}, {2, 38}, {10, 63}, {27, 41}, {40, 27}, {53, 58}, {59, 22}, {34, 3}});
}

inline std::vector<Point> rotated(const std::vector<Point>& pts, int k) {
    std::vector<Point> out;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) out.push_back(pts[(i + k) % n]);
    return out;
}

inline std::vector<Point> reversed(const std::vector<Point>& pts) {
    return std::vector<Point>(pts.rbegin(), pts.rend());
}

// Independent ear test: a strictly convex corner whose closed triangle
// contains no other vertex. Equivalent to the interior-segment definition
// for validated simple polygons; used as the second route in tests.
inline bool ear_oracle(const SimplePolygon& poly, int i) {
    const int n = poly.size();
    if (n == 3) return false;
    const Point& a = poly.vertex(poly.prev(i));
    const Point& b = poly.vertex(i);
    const Point& c = poly.vertex(poly.next(i));
    int want = poly.winding() == Winding::CounterClockwise ? 1 : -1;
    if (orientation_sign(a, b, c) != want) return false;
    for (int v = 0; v < n; ++v) {
        if (v == i || v == poly.prev(i) || v == poly.next(i)) continue;
        const Point& p = poly.vertex(v);
        int s1 = orientation_sign(a, b, p);
        int s2 = orientation_sign(b, c, p);
        int s3 = orientation_sign(c, a, p);
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) return false;
    }
    return true;
}

// Sampling refuter for visibility: probes interior points of pq at k
// evenly spaced parameters. Returning false is definitive; true only
// means no sampled point escaped.
inline bool visible_sampling_oracle(const SimplePolygon& poly, const Point& p, const Point& q,
                                    int samples = 257) {
    for (int k = 1; k < samples; ++k) {
        Rational t(k, samples);
        Point s(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
        if (point_in_polygon(s, poly) == PointLocation::Outside) return false;
    }
    return true;
}

}  // namespace test_support
