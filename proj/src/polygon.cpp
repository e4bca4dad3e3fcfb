#include "gallery/polygon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gallery {

namespace {

// Inside-or-boundary test against the (nondegenerate) triangle abc.
bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int s1 = orientation_sign(a, b, p);
    int s2 = orientation_sign(b, c, p);
    int s3 = orientation_sign(c, a, p);
    return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

}  // namespace

SimplePolygon SimplePolygon::validate(std::vector<Point> vertices) {
    const int n = static_cast<int>(vertices.size());
    if (n < 3)
        throw ValidationError(ValidationError::Kind::TooFewVertices,
                              "polygon needs at least 3 vertices, got " + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vertices[i] == vertices[j])
                throw ValidationError(ValidationError::Kind::DuplicateVertex,
                                      "vertices " + std::to_string(i) + " and " +
                                          std::to_string(j) + " coincide",
                                      i, j);
    for (int i = 0; i < n; ++i) {
        const Point& a = vertices[(i + n - 1) % n];
        const Point& b = vertices[i];
        const Point& c = vertices[(i + 1) % n];
        if (orientation_sign(a, b, c) == 0)
            throw ValidationError(ValidationError::Kind::CollinearRun,
                                  "vertex " + std::to_string(i) +
                                      " is collinear with its neighbors",
                                  i);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Segment ei(vertices[i], vertices[(i + 1) % n]);
            Segment ej(vertices[j], vertices[(j + 1) % n]);
            IntersectionResult r = segment_intersection(ei, ej);
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                const Point& shared = (j == i + 1) ? vertices[j] : vertices[0];
                if (r.kind == IntersectionResult::Kind::Overlap ||
                    (r.kind == IntersectionResult::Kind::Point && r.point != shared))
                    throw ValidationError(ValidationError::Kind::SelfIntersection,
                                          "edges " + std::to_string(i) + " and " +
                                              std::to_string(j) + " touch beyond their shared vertex",
                                          i, j);
            } else if (!r.empty()) {
                throw ValidationError(ValidationError::Kind::SelfIntersection,
                                      "edges " + std::to_string(i) + " and " +
                                          std::to_string(j) + " intersect",
                                      i, j);
            }
        }
    }
    Rational signed_area = ring_signed_area(vertices);
    Winding w = sgn(signed_area) > 0 ? Winding::CounterClockwise : Winding::Clockwise;
    return SimplePolygon(std::move(vertices), w);
}

const Point& SimplePolygon::vertex(int i) const {
    if (i < 0 || i >= size())
        throw IndexOutOfRange("vertex index " + std::to_string(i) + " out of range");
    return vertices_[i];
}

PointLocation point_in_polygon(const Point& q, const SimplePolygon& poly) {
    return point_in_ring(q, poly.vertices());
}

Rational polygon_area(const SimplePolygon& poly) {
    return abs(ring_signed_area(poly.vertices()));
}

bool is_ear(const SimplePolygon& poly, int i) {
    const int n = poly.size();
    if (i < 0 || i >= n)
        throw IndexOutOfRange("vertex index " + std::to_string(i) + " out of range");
    if (n == 3) return false;  // the neighbor segment is an edge, not interior

    const int ip = poly.prev(i), in = poly.next(i);
    const Point& a = poly.vertex(ip);
    const Point& b = poly.vertex(i);
    const Point& c = poly.vertex(in);
    Segment diag(a, c);

    // The neighbor segment may touch the boundary only at a and c.
    for (int e = 0; e < n; ++e) {
        int e2 = poly.next(e);
        Segment edge(poly.vertex(e), poly.vertex(e2));
        IntersectionResult r = segment_intersection(diag, edge);
        if (r.empty()) continue;
        if (r.kind == IntersectionResult::Kind::Overlap) return false;
        bool touches_endpoint = (e == ip || e2 == ip || e == in || e2 == in);
        if (!touches_endpoint || (r.point != a && r.point != c)) return false;
    }
    if (point_in_ring(midpoint(a, c), poly.vertices()) != PointLocation::Inside)
        return false;
    // Ear triangle closure must be empty of other vertices.
    for (int v = 0; v < n; ++v) {
        if (v == i || v == ip || v == in) continue;
        if (in_closed_triangle(poly.vertex(v), a, b, c)) return false;
    }
    return true;
}

SimplePolygon remove_ear(const SimplePolygon& poly, int i) {
    if (i < 0 || i >= poly.size())
        throw IndexOutOfRange("vertex index " + std::to_string(i) + " out of range");
    if (poly.size() == 3) throw WouldDegenerate();
    if (!is_ear(poly, i)) throw NotAnEar(i);
    std::vector<Point> rest;
    rest.reserve(poly.size() - 1);
    for (int v = 0; v < poly.size(); ++v)
        if (v != i) rest.push_back(poly.vertex(v));
    return SimplePolygon::validate(std::move(rest));
}

namespace {

// Intersection of two triangles by half-plane clipping; positive area
// means the open interiors meet.
std::vector<Point> ccw_triangle(const Point& a, const Point& b, const Point& c) {
    if (orientation_sign(a, b, c) > 0) return {a, b, c};
    return {a, c, b};
}

std::vector<Point> clip_by_halfplane(const std::vector<Point>& subject,
                                     const Point& ha, const Point& hb) {
    std::vector<Point> out;
    const std::size_t m = subject.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Point& s = subject[k];
        const Point& e = subject[(k + 1) % m];
        int ss = orientation_sign(ha, hb, s);
        int se = orientation_sign(ha, hb, e);
        if (ss >= 0) out.push_back(s);
        if ((ss > 0 && se < 0) || (ss < 0 && se > 0)) {
            Rational rx = e.x - s.x, ry = e.y - s.y;
            Rational dx = hb.x - ha.x, dy = hb.y - ha.y;
            Rational denom = rx * dy - ry * dx;
            Rational t = ((ha.x - s.x) * dy - (ha.y - s.y) * dx) / denom;
            out.push_back(Point(s.x + t * rx, s.y + t * ry));
        }
    }
    return out;
}

bool triangles_interiors_intersect(const Point& a1, const Point& b1, const Point& c1,
                                   const Point& a2, const Point& b2, const Point& c2) {
    std::vector<Point> subject = ccw_triangle(a1, b1, c1);
    std::vector<Point> clip = ccw_triangle(a2, b2, c2);
    for (std::size_t k = 0; k < 3 && !subject.empty(); ++k)
        subject = clip_by_halfplane(subject, clip[k], clip[(k + 1) % 3]);
    if (subject.size() < 3) return false;
    return sgn(ring_signed_area(subject)) != 0;
}

}  // namespace

bool non_overlapping(const SimplePolygon& poly, int i, int j) {
    if (!is_ear(poly, i)) throw NotAnEar(i);
    if (!is_ear(poly, j)) throw NotAnEar(j);
    const Point& a1 = poly.vertex(poly.prev(i));
    const Point& b1 = poly.vertex(i);
    const Point& c1 = poly.vertex(poly.next(i));
    const Point& a2 = poly.vertex(poly.prev(j));
    const Point& b2 = poly.vertex(j);
    const Point& c2 = poly.vertex(poly.next(j));
    return !triangles_interiors_intersect(a1, b1, c1, a2, b2, c2);
}

namespace {

bool ring_ear_at(const std::vector<Point>& pts, const std::vector<int>& active,
                 std::size_t pos) {
    const std::size_t m = active.size();
    const Point& a = pts[active[(pos + m - 1) % m]];
    const Point& b = pts[active[pos]];
    const Point& c = pts[active[(pos + 1) % m]];
    if (orientation_sign(a, b, c) <= 0) return false;  // reflex or straight
    for (std::size_t k = 0; k < m; ++k) {
        if (k == pos || k == (pos + m - 1) % m || k == (pos + 1) % m) continue;
        if (in_closed_triangle(pts[active[k]], a, b, c)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::array<int, 3>> triangulate_ring(const std::vector<Point>& ring) {
    std::vector<int> active(ring.size());
    for (std::size_t k = 0; k < ring.size(); ++k) active[k] = static_cast<int>(k);
    std::vector<std::array<int, 3>> tris;
    while (active.size() > 3) {
        const std::size_t m = active.size();
        std::size_t found = m;
        for (std::size_t pos = 0; pos < m; ++pos) {
            if (ring_ear_at(ring, active, pos)) {
                found = pos;
                break;
            }
        }
        if (found == m) throw std::logic_error("no ear found in simple ring");
        const std::size_t pp = (found + m - 1) % m, pn = (found + 1) % m;
        tris.push_back({active[pp], active[found], active[pn]});
        active.erase(active.begin() + static_cast<long>(found));
    }
    // Final triangle; skip if it is a straight residue (cannot happen for
    // positive-area rings, but collinear-tolerant callers get a clean error).
    if (orientation_sign(ring[active[0]], ring[active[1]], ring[active[2]]) == 0)
        throw std::logic_error("degenerate final triangle in ring");
    tris.push_back({active[0], active[1], active[2]});
    return tris;
}

Triangulation triangulate(const SimplePolygon& poly) {
    const int n = poly.size();
    const std::vector<Point>& pts = poly.vertices();

    // Work on the vertex cycle in counterclockwise direction, keeping
    // original labels.
    std::vector<int> active(n);
    for (int k = 0; k < n; ++k)
        active[k] = poly.winding() == Winding::CounterClockwise ? k : (n - 1 - k);

    std::vector<std::array<int, 3>> tris;
    std::vector<std::pair<int, int>> diagonals;

    while (active.size() > 3) {
        const std::size_t m = active.size();
        // Lowest original index that is an ear of the current ring.
        std::vector<std::size_t> by_index(m);
        for (std::size_t k = 0; k < m; ++k) by_index[k] = k;
        std::sort(by_index.begin(), by_index.end(),
                  [&](std::size_t x, std::size_t y) { return active[x] < active[y]; });
        std::size_t found = m;
        for (std::size_t pos : by_index) {
            if (ring_ear_at(pts, active, pos)) {
                found = pos;
                break;
            }
        }
        if (found == m) throw std::logic_error("no ear found in simple polygon");
        const std::size_t pp = (found + m - 1) % m, pn = (found + 1) % m;
        tris.push_back({active[pp], active[found], active[pn]});
        diagonals.emplace_back(std::min(active[pp], active[pn]),
                               std::max(active[pp], active[pn]));
        active.erase(active.begin() + static_cast<long>(found));
    }
    tris.push_back({active[0], active[1], active[2]});

    // Weak dual: triangles sharing a diagonal.
    std::map<std::pair<int, int>, std::vector<int>> by_diag;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        for (int e = 0; e < 3; ++e) {
            int u = tris[t][e], v = tris[t][(e + 1) % 3];
            by_diag[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(t));
        }
    }
    std::vector<std::vector<int>> dual(tris.size());
    for (const auto& d : diagonals) {
        const std::vector<int>& owners = by_diag.at(d);
        if (owners.size() != 2) throw std::logic_error("diagonal not shared by two triangles");
        dual[owners[0]].push_back(owners[1]);
        dual[owners[1]].push_back(owners[0]);
    }
    for (auto& nbrs : dual) std::sort(nbrs.begin(), nbrs.end());

    return Triangulation{poly, std::move(tris), std::move(diagonals), std::move(dual)};
}

std::vector<int> dual_leaves(const Triangulation& t) {
    std::vector<int> tips;
    if (t.polygon.size() == 3) return tips;
    for (std::size_t i = 0; i < t.triangles.size(); ++i) {
        if (t.dual[i].size() != 1) continue;
        const std::array<int, 3>& leaf = t.triangles[i];
        const std::array<int, 3>& nbr = t.triangles[t.dual[i][0]];
        for (int v : leaf)
            if (std::find(nbr.begin(), nbr.end(), v) == nbr.end()) tips.push_back(v);
    }
    return tips;
}

Coloring fisk_coloring(const Triangulation& t) {
    const int n = t.polygon.size();
    const int tcount = static_cast<int>(t.triangles.size());

    auto sorted_triple = [&](int idx) {
        std::array<int, 3> s = t.triangles[idx];
        std::sort(s.begin(), s.end());
        return s;
    };

    int root = -1;
    for (int i = 0; i < tcount; ++i) {
        std::array<int, 3> s = sorted_triple(i);
        if (std::find(s.begin(), s.end(), 0) == s.end()) continue;
        if (root == -1 || s < sorted_triple(root)) root = i;
    }
    if (root == -1) throw std::logic_error("no triangle contains vertex 0");

    constexpr int kUncolored = -1;
    std::vector<int> color(n, kUncolored);
    std::array<int, 3> rs = sorted_triple(root);
    color[rs[0]] = 0;
    color[rs[1]] = 1;
    color[rs[2]] = 2;

    std::vector<bool> visited(tcount, false);
    std::vector<int> queue{root};
    visited[root] = true;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.erase(queue.begin());
        for (int nb : t.dual[cur]) {
            if (visited[nb]) continue;
            visited[nb] = true;
            int missing_vertex = -1, used = 0;
            for (int v : t.triangles[nb]) {
                if (color[v] == kUncolored)
                    missing_vertex = v;
                else
                    used |= 1 << color[v];
            }
            if (missing_vertex != -1) {
                int free_color = 0;
                while (used & (1 << free_color)) ++free_color;
                color[missing_vertex] = free_color;
            }
            queue.push_back(nb);
        }
    }

    Coloring out;
    out.kind = Coloring::Kind::Fisk;
    out.colors.resize(n);
    for (int v = 0; v < n; ++v) {
        if (color[v] == kUncolored) throw std::logic_error("uncolored vertex after propagation");
        out.colors[v] = static_cast<Color>(color[v]);
    }
    for (const auto& tri : t.triangles) {
        int mask = 0;
        for (int v : tri) mask |= 1 << color[v];
        if (mask != 0b111) throw std::logic_error("triangle without all three colors");
    }
    return out;
}

Coloring cyclic_coloring(const SimplePolygon& poly) {
    const int n = poly.size();
    if (n % 3 != 0) throw NotDivisibleBy3(n);
    Coloring out;
    out.kind = Coloring::Kind::Cyclic;
    out.colors.resize(n);
    for (int v = 0; v < n; ++v) out.colors[v] = static_cast<Color>(v % 3);
    return out;
}

}  // namespace gallery
