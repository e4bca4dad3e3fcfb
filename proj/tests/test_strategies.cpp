#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "gallery/harness.hpp"
#include "support.hpp"

using namespace gallery;
using namespace test_support;

namespace {

int cyclic_distance(int a, int b, int n) {
    int d = std::abs(a - b) % n;
    return std::min(d, n - d);
}

std::set<std::vector<int>> guard_sets(const std::vector<GuardPlacement>& ps) {
    std::set<std::vector<int>> out;
    for (const GuardPlacement& p : ps) out.insert(p.guards);
    return out;
}

}  // namespace

TEST_CASE("every-third placements when 3 divides n") {
    for (Interpretation interp : {Interpretation::Strict, Interpretation::Generous}) {
        std::vector<GuardPlacement> ps = every_third_placements(9, interp);
        REQUIRE(ps.size() == 3);
        CHECK(guard_sets(ps) == std::set<std::vector<int>>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
        // The three classes partition the vertex set.
        std::set<int> all;
        for (const GuardPlacement& p : ps) all.insert(p.guards.begin(), p.guards.end());
        CHECK(all.size() == 9);
        // Each set is generated by all 3 starts x 2 directions.
        for (const GuardPlacement& p : ps) CHECK(p.origins.size() == 6);
    }
}

TEST_CASE("every-third placements on the octagon") {
    std::vector<GuardPlacement> strict = every_third_placements(8, Interpretation::Strict);
    CHECK(strict.size() == 8);
    for (const GuardPlacement& p : strict) {
        REQUIRE(p.guards.size() == 2);
        CHECK(cyclic_distance(p.guards[0], p.guards[1], 8) == 3);
    }
    for (int v = 0; v < 8; ++v) {
        std::vector<int> want{v, (v + 3) % 8};
        std::sort(want.begin(), want.end());
        CHECK(guard_sets(strict).count(want) == 1);
    }

    std::vector<GuardPlacement> generous = every_third_placements(8, Interpretation::Generous);
    CHECK(generous.size() == 8);
    for (const GuardPlacement& p : generous) CHECK(p.guards.size() == 3);
    // For a fixed v, the three ways of putting a guard on v all appear:
    // start at v cw, start at v ccw, and v as the second guard.
    const int v = 5;
    for (std::vector<int> want : {std::vector<int>{v, (v + 3) % 8, (v + 6) % 8},
                                  {v, (v + 5) % 8, (v + 2) % 8},
                                  {(v + 5) % 8, v, (v + 3) % 8}}) {
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        CHECK(guard_sets(generous).count(want) == 1);
    }
}

TEST_CASE("placement sizes and spacing for n in 3..12") {
    for (int n = 3; n <= 12; ++n) {
        for (Interpretation interp : {Interpretation::Strict, Interpretation::Generous}) {
            int expect = interp == Interpretation::Strict ? n / 3 : (n + 2) / 3;
            for (const GuardPlacement& p : every_third_placements(n, interp)) {
                CHECK(static_cast<int>(p.guards.size()) == expect);
                // Guards sit at cyclic distance >= 2 except the generous
                // wrap pair at distance n mod 3 (3 when 3 | n).
                int close_pairs = 0;
                for (std::size_t i = 0; i < p.guards.size(); ++i)
                    for (std::size_t j = i + 1; j < p.guards.size(); ++j)
                        if (cyclic_distance(p.guards[i], p.guards[j], n) < 2) ++close_pairs;
                if (interp == Interpretation::Strict || n % 3 != 1)
                    CHECK(close_pairs == 0);
                else
                    CHECK(close_pairs <= 1);
            }
        }
    }
}

TEST_CASE("evaluate_strategy on the nonagon: all three classes fail") {
    std::vector<StrategyVerdict> verdicts = evaluate_strategy(nonagon(), Interpretation::Generous);
    REQUIRE(verdicts.size() == 3);
    std::map<std::vector<int>, Rational> areas;
    for (const StrategyVerdict& v : verdicts) {
        CHECK_FALSE(v.report.covered);
        CHECK(v.report.blindspot_area > 0);
        areas[v.placement.guards] = v.report.blindspot_area;
    }
    CHECK(areas[{0, 3, 6}] == rational(3, 4));
    CHECK(areas[{1, 4, 7}] == rational(73, 15));
    CHECK(areas[{2, 5, 8}] == rational(4, 15));
}

TEST_CASE("evaluate_strategy on convex polygons: every placement covers") {
    for (Interpretation interp : {Interpretation::Strict, Interpretation::Generous}) {
        for (const StrategyVerdict& v : evaluate_strategy(convex_hexagon(), interp))
            CHECK(v.report.covered);
        for (const StrategyVerdict& v : evaluate_strategy(convex_octagon(), interp))
            CHECK(v.report.covered);
    }
}

TEST_CASE("heptagons admit a covering strict placement") {
    CHECK(exists_good_start(convex_heptagon(), Interpretation::Strict).has_value());
    for (std::uint64_t s = 0; s < 40; ++s) {
        SimplePolygon p = random_polygon(7, RngSeed{s + 7000});
        auto found = exists_good_start(p, Interpretation::Strict);
        CHECK(found.has_value());
        if (found) CHECK(found->guards.size() == 2);
    }
}

TEST_CASE("exists_good_start") {
    CHECK_FALSE(exists_good_start(nonagon(), Interpretation::Generous).has_value());
    CHECK_FALSE(exists_good_start(nonagon(), Interpretation::Strict).has_value());

    auto hex = exists_good_start(convex_hexagon(), Interpretation::Generous);
    REQUIRE(hex.has_value());
    CHECK(hex->guards.size() == 2);

    for (std::uint64_t s = 0; s < 30; ++s) {
        SimplePolygon p = random_polygon(8, RngSeed{s + 8000});
        CHECK(exists_good_start(p, Interpretation::Generous).has_value());
    }
}

TEST_CASE("fisk placement") {
    GuardPlacement tri = fisk_placement(SimplePolygon::validate({{0, 0}, {3, 0}, {0, 3}}));
    CHECK(tri.guards.size() == 1);

    GuardPlacement nona = fisk_placement(nonagon());
    CHECK(nona.guards == std::vector<int>{3, 7});
    CHECK(nona.fisk_color == Color::B);
    CHECK(nona.guards.size() <= 3);
    CHECK(coverage(nonagon(), nona.guards).covered);

    GuardPlacement hept = fisk_placement(convex_heptagon());
    CHECK(hept.guards.size() <= 2);
    CHECK(coverage(convex_heptagon(), hept.guards).covered);
}

TEST_CASE("fisk placement covers a random corpus within the bound") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        int n = 4 + static_cast<int>(s % 9);
        SimplePolygon p = random_polygon(n, RngSeed{s * 3 + 11});
        GuardPlacement fp = fisk_placement(p);
        CHECK(static_cast<int>(fp.guards.size()) <= n / 3);
        CHECK(coverage(p, fp.guards).covered);
    }
}

TEST_CASE("minimum vertex guards") {
    auto hex = min_vertex_guards(convex_hexagon(), 2);
    REQUIRE(hex.has_value());
    CHECK(hex->first == 1);
    CHECK(hex->second.guards == std::vector<int>{0});

    auto nona = min_vertex_guards(nonagon(), 3);
    REQUIRE(nona.has_value());
    CHECK(nona->first == 2);
    CHECK(nona->second.guards == std::vector<int>{1, 5});
    CHECK(coverage(nonagon(), nona->second.guards).covered);

    // No single vertex sees the whole nonagon.
    CHECK_FALSE(min_vertex_guards(nonagon(), 1).has_value());

    for (int k = 1; k <= 3; ++k) {
        auto r = min_vertex_guards(comb(k), k);
        REQUIRE(r.has_value());
        CHECK(r->first == k);
    }
    CHECK_FALSE(min_vertex_guards(comb(3), 2).has_value());

    CHECK_THROWS_AS(min_vertex_guards(convex_hexagon(), 0), std::invalid_argument);
    CHECK_THROWS_AS(min_vertex_guards(convex_hexagon(), 7), std::invalid_argument);
}

TEST_CASE("min guards never beats fisk") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        int n = 4 + static_cast<int>(s % 9);
        SimplePolygon p = random_polygon(n, RngSeed{s * 5 + 21});
        GuardPlacement fp = fisk_placement(p);
        auto mg = min_vertex_guards(p, static_cast<int>(fp.guards.size()));
        REQUIRE(mg.has_value());
        CHECK(mg->first <= static_cast<int>(fp.guards.size()));
    }
}

TEST_CASE("triangle_missing_color") {
    SimplePolygon nona = nonagon();
    Triangulation t = triangulate(nona);

    // Fisk colorings never leave a triangle without one of the colors.
    Coloring fisk = fisk_coloring(t);
    for (Color c : {Color::R, Color::G, Color::B})
        CHECK_FALSE(triangle_missing_color(t, fisk, c).has_value());

    // The cyclic coloring must miss a class somewhere, because each class
    // fails to guard the nonagon. Frozen first hits for this triangulation:
    Coloring cyc = cyclic_coloring(nona);
    auto missing_g = triangle_missing_color(t, cyc, Color::G);
    REQUIRE(missing_g.has_value());
    CHECK(*missing_g == std::array<int, 3>{3, 0, 8});
    auto missing_b = triangle_missing_color(t, cyc, Color::B);
    REQUIRE(missing_b.has_value());
    CHECK(*missing_b == std::array<int, 3>{3, 1, 0});
    auto missing_r = triangle_missing_color(t, cyc, Color::R);
    REQUIRE(missing_r.has_value());
    CHECK(*missing_r == std::array<int, 3>{8, 7, 5});
    for (auto result : {missing_g, missing_b, missing_r})
        for (int v : *result) CHECK(v >= 0);

    SimplePolygon tri_poly = SimplePolygon::validate({{0, 0}, {3, 0}, {0, 3}});
    Triangulation tt = triangulate(tri_poly);
    Coloring tc = cyclic_coloring(tri_poly);
    for (Color c : {Color::R, Color::G, Color::B})
        CHECK_FALSE(triangle_missing_color(tt, tc, c).has_value());
}

TEST_CASE("color_sequence_check") {
    SimplePolygon nona = nonagon();
    CHECK(color_sequence_check(nona, {3, 5, 8}) == TriangleBoundaryClass::AllBoundaryInterior);
    CHECK(color_sequence_check(nona, {3, 4, 8}) == TriangleBoundaryClass::HasBoundaryEdge);
    CHECK(color_sequence_check(nona, {0, 4, 8}) == TriangleBoundaryClass::HasBoundaryEdge);
    CHECK(color_sequence_check(convex_hexagon(), {0, 2, 4}) ==
          TriangleBoundaryClass::AllBoundaryInterior);
    CHECK_THROWS_AS(color_sequence_check(convex_octagon(), {0, 2, 4}), NotDivisibleBy3);
    CHECK_THROWS_AS(color_sequence_check(nona, {0, 2, 9}), IndexOutOfRange);
}

TEST_CASE("relabeling the start vertex permutes placements, not verdicts") {
    std::vector<Point> pts = nonagon_points();
    auto verdict_multiset = [](const SimplePolygon& poly) {
        std::multiset<std::pair<bool, Rational>> out;
        for (const StrategyVerdict& v : evaluate_strategy(poly, Interpretation::Generous))
            out.insert({v.report.covered, v.report.blindspot_area});
        return out;
    };
    auto base = verdict_multiset(SimplePolygon::validate(pts));
    for (int k : {1, 4}) {
        auto rotated_verdicts = verdict_multiset(SimplePolygon::validate(rotated(pts, k)));
        CHECK(rotated_verdicts == base);
    }
}
