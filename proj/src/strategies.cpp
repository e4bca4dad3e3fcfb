#include "gallery/strategies.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "gallery/parallel.hpp"

namespace gallery {

std::vector<GuardPlacement> every_third_placements(int n, Interpretation interp) {
    if (n < 3) throw std::invalid_argument("need at least 3 vertices");
    const int count = interp == Interpretation::Strict ? n / 3 : (n + 2) / 3;

    std::vector<GuardPlacement> placements;
    std::map<std::vector<int>, std::size_t> by_set;
    for (int start = 0; start < n; ++start) {
        for (Direction dir : {Direction::CW, Direction::CCW}) {
            int step = dir == Direction::CW ? 3 : n - 3;
            std::vector<int> guards;
            guards.reserve(count);
            for (int k = 0; k < count; ++k) guards.push_back((start + k * step) % n);
            std::sort(guards.begin(), guards.end());
            guards.erase(std::unique(guards.begin(), guards.end()), guards.end());

            auto it = by_set.find(guards);
            if (it != by_set.end()) {
                placements[it->second].origins.push_back({start, dir});
                continue;
            }
            GuardPlacement p;
            p.guards = guards;
            p.kind = StrategyKind::EveryThird;
            p.interpretation = interp;
            p.origins = {{start, dir}};
            by_set.emplace(std::move(guards), placements.size());
            placements.push_back(std::move(p));
        }
    }
    return placements;
}

std::vector<StrategyVerdict> evaluate_strategy(const SimplePolygon& poly,
                                               Interpretation interp) {
    std::vector<StrategyVerdict> out;
    for (GuardPlacement& p : every_third_placements(poly.size(), interp)) {
        CoverageReport report = coverage(poly, p.guards);
        out.push_back(StrategyVerdict{std::move(p), std::move(report)});
    }
    return out;
}

std::optional<GuardPlacement> exists_good_start(const SimplePolygon& poly,
                                                Interpretation interp) {
    for (GuardPlacement& p : every_third_placements(poly.size(), interp)) {
        if (coverage(poly, p.guards).covered) return std::move(p);
    }
    return std::nullopt;
}

GuardPlacement fisk_placement(const SimplePolygon& poly) {
    Triangulation t = triangulate(poly);
    Coloring c = fisk_coloring(t);
    int counts[3] = {0, 0, 0};
    for (Color col : c.colors) ++counts[static_cast<int>(col)];
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (counts[k] < counts[best]) best = k;

    GuardPlacement p;
    p.kind = StrategyKind::Fisk;
    p.fisk_color = static_cast<Color>(best);
    for (int v = 0; v < poly.size(); ++v)
        if (c.colors[v] == p.fisk_color) p.guards.push_back(v);
    return p;
}

std::optional<std::pair<int, GuardPlacement>> min_vertex_guards(const SimplePolygon& poly,
                                                                int max_k) {
    const int n = poly.size();
    if (max_k < 1 || max_k > n) throw std::invalid_argument("max_k must be in 1..n");

    // One subdivision refined by every vertex's windows decides coverage
    // for every subset: per-vertex visibility is constant on its cells,
    // arrangement edges and vertices, so a subset covers the polygon iff
    // the union of its guards' sample bitsets is full.
    std::vector<WindowSegment> windows;
    for (int v = 0; v < n; ++v) {
        std::vector<WindowSegment> ws = window_segments(poly, v);
        windows.insert(windows.end(), ws.begin(), ws.end());
    }
    Subdivision sub = build_subdivision(poly, windows);
    std::vector<Point> samples = coverage_samples(sub);
    const std::size_t ns = samples.size();
    const std::size_t words = (ns + 63) / 64;

    std::vector<std::vector<std::uint64_t>> sees(n, std::vector<std::uint64_t>(words, 0));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t v) {
        const Point& gp = poly.vertex(static_cast<int>(v));
        for (std::size_t s = 0; s < ns; ++s)
            if (visible(poly, gp, samples[s])) sees[v][s / 64] |= std::uint64_t(1) << (s % 64);
    });
    std::vector<std::uint64_t> full(words, ~std::uint64_t(0));
    if (ns % 64 != 0) full[words - 1] = (std::uint64_t(1) << (ns % 64)) - 1;

    std::vector<std::uint64_t> acc(words);
    for (int k = 1; k <= max_k; ++k) {
        // Lexicographic k-subsets of 0..n-1.
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int i : idx)
                for (std::size_t w = 0; w < words; ++w) acc[w] |= sees[i][w];
            if (acc == full) {
                GuardPlacement p;
                p.kind = StrategyKind::Explicit;
                p.guards = idx;
                return std::make_pair(k, std::move(p));
            }
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

std::optional<std::array<int, 3>> triangle_missing_color(const Triangulation& t,
                                                         const Coloring& coloring,
                                                         Color missing) {
    if (coloring.colors.size() != static_cast<std::size_t>(t.polygon.size()))
        throw std::invalid_argument("coloring does not match the triangulated polygon");
    for (const std::array<int, 3>& tri : t.triangles) {
        bool has = false;
        for (int v : tri)
            if (coloring.colors[v] == missing) has = true;
        if (!has) return tri;
    }
    return std::nullopt;
}

TriangleBoundaryClass color_sequence_check(const SimplePolygon& poly,
                                           const std::array<int, 3>& triangle) {
    const int n = poly.size();
    if (n % 3 != 0) throw NotDivisibleBy3(n);
    for (int v : triangle)
        if (v < 0 || v >= n) throw IndexOutOfRange("triangle vertex out of range");
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            int d = std::abs(triangle[i] - triangle[j]);
            if (std::min(d, n - d) == 1) return TriangleBoundaryClass::HasBoundaryEdge;
        }
    }
    return TriangleBoundaryClass::AllBoundaryInterior;
}

}  // namespace gallery
