#include "gallery/visibility.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "gallery/parallel.hpp"

namespace gallery {

namespace {

// Parameter of p along the segment from a to b (p must be on the line).
Rational param_along(const Point& a, const Point& b, const Point& p) {
    Rational dx = b.x - a.x;
    if (sgn(dx) != 0) return (p.x - a.x) / dx;
    return (p.y - a.y) / (b.y - a.y);
}

Point lerp(const Point& a, const Point& b, const Rational& t) {
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y));
}

std::vector<int> checked_guards(const SimplePolygon& poly, const std::vector<int>& guards) {
    if (guards.empty()) throw std::invalid_argument("guard set must be nonempty");
    std::vector<int> out = guards;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int g : out)
        if (g < 0 || g >= poly.size()) throw InvalidGuardIndex(g);
    return out;
}

}  // namespace

bool visible(const SimplePolygon& poly, const Point& p, const Point& q) {
    if (point_in_polygon(p, poly) == PointLocation::Outside)
        throw PointOutsidePolygon("first point lies outside the polygon");
    if (point_in_polygon(q, poly) == PointLocation::Outside)
        throw PointOutsidePolygon("second point lies outside the polygon");
    if (p == q) return true;

    Segment pq(p, q);
    std::vector<Rational> ts{Rational(0), Rational(1)};
    const int n = poly.size();
    for (int i = 0; i < n; ++i) {
        Segment edge(poly.vertex(i), poly.vertex(poly.next(i)));
        IntersectionResult r = segment_intersection(pq, edge);
        switch (r.kind) {
            case IntersectionResult::Kind::Empty:
                break;
            case IntersectionResult::Kind::Point:
                // A transversal crossing through the open edge leaves the
                // polygon; anything else becomes a split point.
                if (r.proper) return false;
                ts.push_back(param_along(p, q, r.point));
                break;
            case IntersectionResult::Kind::Overlap:
                ts.push_back(param_along(p, q, r.overlap.a));
                ts.push_back(param_along(p, q, r.overlap.b));
                break;
        }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        Rational mid = (ts[k] + ts[k + 1]) / 2;
        if (point_in_ring(lerp(p, q, mid), poly.vertices()) == PointLocation::Outside)
            return false;
    }
    return true;
}

std::vector<WindowSegment> window_segments(const SimplePolygon& poly, int guard) {
    const int n = poly.size();
    if (guard < 0 || guard >= n) throw InvalidGuardIndex(guard);
    const Point& g = poly.vertex(guard);

    std::vector<WindowSegment> out;
    for (int r = 0; r < n; ++r) {
        if (r == guard) continue;
        const Point& pivot = poly.vertex(r);
        if (!visible(poly, g, pivot)) continue;

        // Walk the ray g -> pivot past the pivot; collect boundary hits at
        // parameter s > 0 measured from the pivot in units of (pivot - g).
        Rational dx = pivot.x - g.x, dy = pivot.y - g.y;
        std::optional<Rational> first;
        auto consider = [&](const Point& hit) {
            Rational s = sgn(dx) != 0 ? (hit.x - pivot.x) / dx : (hit.y - pivot.y) / dy;
            if (sgn(s) > 0 && (!first || s < *first)) first = s;
        };
        for (int e = 0; e < n; ++e) {
            const Point& a = poly.vertex(e);
            const Point& b = poly.vertex(poly.next(e));
            int sa = orientation_sign(g, pivot, a);
            int sb = orientation_sign(g, pivot, b);
            if (sa == 0 && sb == 0) {
                consider(a);
                consider(b);
            } else if (sa == 0) {
                consider(a);
            } else if (sb == 0) {
                consider(b);
            } else if (sa != sb) {
                Rational ex = b.x - a.x, ey = b.y - a.y;
                Rational denom = ex * dy - ey * dx;
                Rational u = ((g.x - a.x) * dy - (g.y - a.y) * dx) / denom;
                consider(lerp(a, b, u));
            }
        }
        if (!first) continue;  // ray exits at the pivot for good
        Point hit(pivot.x + *first * dx, pivot.y + *first * dy);
        // Emit only when the extension actually runs through the interior;
        // a stretch lying on the boundary adds nothing to the arrangement.
        if (point_in_ring(midpoint(pivot, hit), poly.vertices()) == PointLocation::Inside)
            out.push_back(WindowSegment{guard, r, Segment(pivot, hit)});
    }
    return out;
}

Rational Subdivision::cell_area_sum() const {
    Rational sum = 0;
    for (const Cell& c : cells) sum += c.area();
    return sum;
}

namespace {

// Pseudo-angle ordering of direction vectors: counterclockwise starting
// from the positive x axis. Exact, no trigonometry.
bool direction_less(const Point& d1, const Point& d2) {
    auto half = [](const Point& d) {
        return (sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0)) ? 0 : 1;
    };
    int h1 = half(d1), h2 = half(d2);
    if (h1 != h2) return h1 < h2;
    Rational cross = d1.x * d2.y - d1.y * d2.x;
    return sgn(cross) > 0;
}

}  // namespace

Subdivision build_subdivision(const SimplePolygon& poly,
                              const std::vector<WindowSegment>& windows) {
    // Unique input segments: polygon edges plus windows.
    std::vector<Segment> segs;
    std::set<std::pair<Point, Point>> seg_seen;
    auto add_seg = [&](const Point& u, const Point& v) {
        auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
        if (seg_seen.insert(key).second) segs.push_back(Segment(key.first, key.second));
    };
    for (int i = 0; i < poly.size(); ++i) add_seg(poly.vertex(i), poly.vertex(poly.next(i)));
    for (const WindowSegment& w : windows) add_seg(w.segment.a, w.segment.b);

    // Split every segment at every pairwise intersection.
    const std::size_t m = segs.size();
    std::vector<std::vector<Rational>> cut_params(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            IntersectionResult r = segment_intersection(segs[i], segs[j]);
            if (r.kind == IntersectionResult::Kind::Point) {
                cut_params[i].push_back(param_along(segs[i].a, segs[i].b, r.point));
                cut_params[j].push_back(param_along(segs[j].a, segs[j].b, r.point));
            } else if (r.kind == IntersectionResult::Kind::Overlap) {
                for (const Point* pt : {&r.overlap.a, &r.overlap.b}) {
                    cut_params[i].push_back(param_along(segs[i].a, segs[i].b, *pt));
                    cut_params[j].push_back(param_along(segs[j].a, segs[j].b, *pt));
                }
            }
        }
    }

    std::vector<Point> pts;
    std::map<Point, int> vid;
    auto id_of = [&](const Point& p) {
        auto it = vid.find(p);
        if (it != vid.end()) return it->second;
        int id = static_cast<int>(pts.size());
        vid.emplace(p, id);
        pts.push_back(p);
        return id;
    };

    std::set<std::pair<int, int>> sub_seen;
    std::vector<std::pair<int, int>> subsegs;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Rational>& ps = cut_params[i];
        ps.push_back(Rational(0));
        ps.push_back(Rational(1));
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
            int u = id_of(lerp(segs[i].a, segs[i].b, ps[k]));
            int v = id_of(lerp(segs[i].a, segs[i].b, ps[k + 1]));
            auto key = std::minmax(u, v);
            if (sub_seen.insert({key.first, key.second}).second)
                subsegs.push_back({key.first, key.second});
        }
    }

    const int nv = static_cast<int>(pts.size());
    std::vector<std::vector<int>> adj(nv);
    for (const auto& [u, v] : subsegs) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < nv; ++v) {
        if (adj[v].size() < 2) throw std::logic_error("dangling arrangement vertex");
        std::sort(adj[v].begin(), adj[v].end(), [&](int x, int y) {
            Point dxp(pts[x].x - pts[v].x, pts[x].y - pts[v].y);
            Point dyp(pts[y].x - pts[v].x, pts[y].y - pts[v].y);
            return direction_less(dxp, dyp);
        });
    }
    std::vector<std::map<int, int>> pos_in_adj(nv);
    for (int v = 0; v < nv; ++v)
        for (std::size_t k = 0; k < adj[v].size(); ++k) pos_in_adj[v][adj[v][k]] = static_cast<int>(k);

    // Face tracing, interior kept on the left: bounded faces come out
    // counterclockwise, the single unbounded face clockwise.
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (const auto& [a, b] : subsegs) {
        for (auto [su, sv] : {std::pair<int, int>{a, b}, std::pair<int, int>{b, a}}) {
            if (used.count({su, sv})) continue;
            std::vector<int> ring;
            int u = su, v = sv;
            do {
                used.insert({u, v});
                ring.push_back(u);
                int deg = static_cast<int>(adj[v].size());
                int k = pos_in_adj[v].at(u);
                int w = adj[v][(k - 1 + deg) % deg];
                u = v;
                v = w;
            } while (!(u == su && v == sv));
            faces.push_back(std::move(ring));
        }
    }

    Rational total = polygon_area(poly);
    Rational positive_sum = 0;
    int outer_faces = 0;
    Subdivision sub{poly, {}, std::move(pts), {}, };
    for (const auto& [u, v] : subsegs)
        sub.edges.push_back(Segment(sub.vertices[u], sub.vertices[v]));

    for (const std::vector<int>& face : faces) {
        std::vector<Point> ring;
        ring.reserve(face.size());
        for (int id : face) ring.push_back(sub.vertices[id]);
        {
            std::vector<int> sorted_ids = face;
            std::sort(sorted_ids.begin(), sorted_ids.end());
            if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
                throw std::logic_error("pinched face in arrangement");
        }
        Rational area = ring_signed_area(ring);
        int s = sgn(area);
        if (s == 0) throw std::logic_error("zero-area face in arrangement");
        if (s < 0) {
            ++outer_faces;
            if (area != -total)
                throw std::logic_error("outer face does not match polygon area");
            continue;
        }
        positive_sum += area;

        // Triangulate the face; merge collinear chains first so the ear
        // clipper sees only genuine corners.
        std::vector<Point> corners;
        const std::size_t fs = ring.size();
        for (std::size_t k = 0; k < fs; ++k) {
            const Point& prev = ring[(k + fs - 1) % fs];
            const Point& cur = ring[k];
            const Point& next = ring[(k + 1) % fs];
            if (orientation_sign(prev, cur, next) != 0) corners.push_back(cur);
        }
        for (const std::array<int, 3>& t : triangulate_ring(corners)) {
            Cell c;
            c.a = corners[t[0]];
            c.b = corners[t[1]];
            c.c = corners[t[2]];
            c.centroid = Point((c.a.x + c.b.x + c.c.x) / 3, (c.a.y + c.b.y + c.c.y) / 3);
            sub.cells.push_back(std::move(c));
        }
    }
    if (outer_faces != 1) throw std::logic_error("arrangement must have exactly one outer face");
    if (positive_sum != total) throw std::logic_error("cell areas do not sum to polygon area");
    return sub;
}

std::vector<Point> coverage_samples(const Subdivision& sub) {
    std::vector<Point> out;
    out.reserve(sub.cells.size() + sub.vertices.size() + sub.edges.size());
    for (const Cell& c : sub.cells) out.push_back(c.centroid);
    for (const Point& p : sub.vertices) out.push_back(p);
    for (const Segment& e : sub.edges) out.push_back(midpoint(e.a, e.b));
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool cells_share_edge(const Cell& c1, const Cell& c2) {
    const Point* t1[3][2] = {{&c1.a, &c1.b}, {&c1.b, &c1.c}, {&c1.c, &c1.a}};
    const Point* t2[3][2] = {{&c2.a, &c2.b}, {&c2.b, &c2.c}, {&c2.c, &c2.a}};
    for (auto& e1 : t1)
        for (auto& e2 : t2) {
            IntersectionResult r = segment_intersection(Segment(*e1[0], *e1[1]),
                                                        Segment(*e2[0], *e2[1]));
            if (r.kind == IntersectionResult::Kind::Overlap) return true;
        }
    return false;
}

}  // namespace

CoverageReport coverage(const SimplePolygon& poly, const std::vector<int>& guards_in) {
    std::vector<int> guards = checked_guards(poly, guards_in);

    std::vector<WindowSegment> windows;
    for (int g : guards) {
        std::vector<WindowSegment> ws = window_segments(poly, g);
        windows.insert(windows.end(), ws.begin(), ws.end());
    }
    Subdivision sub = build_subdivision(poly, windows);

    std::vector<Point> gpts;
    gpts.reserve(guards.size());
    for (int g : guards) gpts.push_back(poly.vertex(g));
    auto covered_from_any = [&](const Point& pt) {
        for (const Point& gp : gpts)
            if (visible(poly, gp, pt)) return true;
        return false;
    };

    std::vector<char> cell_cov(sub.cells.size());
    parallel_for(sub.cells.size(),
                 [&](std::size_t i) { cell_cov[i] = covered_from_any(sub.cells[i].centroid); });
    std::vector<char> vert_cov(sub.vertices.size());
    parallel_for(sub.vertices.size(),
                 [&](std::size_t i) { vert_cov[i] = covered_from_any(sub.vertices[i]); });
    std::vector<Point> mids;
    mids.reserve(sub.edges.size());
    for (const Segment& e : sub.edges) mids.push_back(midpoint(e.a, e.b));
    std::vector<char> mid_cov(mids.size());
    parallel_for(mids.size(), [&](std::size_t i) { mid_cov[i] = covered_from_any(mids[i]); });

    CoverageReport rep;
    rep.blindspot_area = 0;
    std::vector<int> dark;  // indices into sub.cells
    for (std::size_t i = 0; i < sub.cells.size(); ++i) {
        if (cell_cov[i]) continue;
        dark.push_back(static_cast<int>(i));
        rep.blindspot_cells.push_back(sub.cells[i]);
        rep.blindspot_area += sub.cells[i].area();
    }

    // One witness per connected blindspot component (cells joined when
    // their triangles share a positive-length edge).
    UnionFind uf(static_cast<int>(dark.size()));
    for (std::size_t a = 0; a < dark.size(); ++a)
        for (std::size_t b = a + 1; b < dark.size(); ++b)
            if (cells_share_edge(sub.cells[dark[a]], sub.cells[dark[b]]))
                uf.unite(static_cast<int>(a), static_cast<int>(b));
    std::set<int> roots_done;
    for (std::size_t a = 0; a < dark.size(); ++a) {
        int root = uf.find(static_cast<int>(a));
        if (roots_done.insert(root).second)
            rep.witnesses.push_back(sub.cells[dark[a]].centroid);
    }
    for (std::size_t i = 0; i < sub.vertices.size(); ++i)
        if (!vert_cov[i]) rep.witnesses.push_back(sub.vertices[i]);
    for (std::size_t i = 0; i < mids.size(); ++i)
        if (!mid_cov[i]) rep.witnesses.push_back(mids[i]);

    rep.covered = rep.blindspot_cells.empty() && rep.witnesses.empty();
    return rep;
}

std::vector<GridSample> grid_oracle(const SimplePolygon& poly,
                                    const std::vector<int>& guards_in,
                                    int resolution) {
    if (resolution < 2) throw std::invalid_argument("grid resolution must be >= 2");
    std::vector<int> guards = checked_guards(poly, guards_in);
    std::vector<Point> gpts;
    for (int g : guards) gpts.push_back(poly.vertex(g));

    Rational xmin = poly.vertex(0).x, xmax = xmin;
    Rational ymin = poly.vertex(0).y, ymax = ymin;
    for (const Point& p : poly.vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Rational w = xmax - xmin, h = ymax - ymin;
    Rational steps(resolution - 1);

    std::vector<std::vector<GridSample>> rows(resolution);
    parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t j) {
        Rational y = ymin + h * Rational(static_cast<long>(j)) / steps;
        for (int i = 0; i < resolution; ++i) {
            Point p(xmin + w * Rational(i) / steps, y);
            if (point_in_ring(p, poly.vertices()) != PointLocation::Inside) continue;
            bool cov = false;
            for (const Point& gp : gpts) {
                if (visible(poly, gp, p)) {
                    cov = true;
                    break;
                }
            }
            rows[j].push_back(GridSample{std::move(p), cov});
        }
    });
    std::vector<GridSample> out;
    for (auto& row : rows)
        for (GridSample& s : row) out.push_back(std::move(s));
    return out;
}

}  // namespace gallery
