#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gallery/strategies.hpp"

namespace gallery {

struct RngSeed {
    std::uint64_t value = 0;
};

// The bundled nine-vertex gallery on which placing guards at every third
// vertex fails for all three starting classes.
SimplePolygon counterexample_nonagon();

// Comb-shaped polygon with `teeth` spikes and exactly 3*teeth vertices.
// Every spike tip is visible only from that spike's own three vertices,
// so covering it takes one guard per tooth.
SimplePolygon comb(int teeth);

// Octagon on which every Strict every-third placement fails. Derived by
// seeded search (not a published coordinate list) and frozen here;
// counterexample_octagon_seed/trials rediscover it deterministically.
SimplePolygon counterexample_octagon();
RngSeed counterexample_octagon_seed();
int counterexample_octagon_trials();

// Deterministic random simple polygon: n distinct lattice points in a
// 64x64 box, made simple by 2-opt uncrossing of a random permutation.
// Throws GenerationFailed after bounded resampling.
SimplePolygon random_polygon(int n, RngSeed seed);

struct SearchResult {
    std::optional<SimplePolygon> found;
    int trials_run = 0;
    Interpretation interpretation = Interpretation::Strict;
    int n = 0;
    RngSeed seed;
};

// Random search for a polygon on which every placement of the strategy
// fails coverage. Deterministic: trial t draws from seed.value ^ t.
SearchResult search_counterexample(int n, Interpretation interp, int trials, RngSeed seed);

struct ClaimCheck {
    std::string name;
    bool pass = false;
    std::string details;
    double seconds = 0.0;
};

struct VerifyConfig {
    int trials = 500;            // polygons per statistical property
    int two_ears_trials = 1000;
    int agreement_pairs = 100;
    int grid_resolution = 200;
    std::uint64_t seed = 1729;
    bool include_comb5 = false;  // extend the comb bound check to 5 teeth
};

struct VerifyReport {
    std::vector<ClaimCheck> checks;
    bool all_pass() const;
};

// Runs the built-in claim checklist and reports one pass/fail per claim.
VerifyReport verify_claims(const VerifyConfig& config = VerifyConfig{});

}  // namespace gallery
