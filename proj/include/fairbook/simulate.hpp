#pragma once

#include <cstdint>
#include <utility>

#include "fairbook/odds_core.hpp"

// Monte Carlo oracle for the revenue-scheme identities. Trials are driven
// by a counter-based SplitMix64 stream: the uniform for trial i depends
// only on (seed, i), so any chunking of the trial range reproduces the
// single-pass result exactly.

namespace fairbook {

struct SimConfig {
    std::uint64_t trials;  // >= 1
    std::uint64_t seed;
    TwoOutcomeScheme scheme;
};

struct SimResult {
    double sample_mean;      // dollars
    double sample_variance;  // dollars^2, n-1 divisor
    double standard_error;   // sqrt(sample_variance / trials)
    std::uint64_t trials;
};

// Uniform in [0, 1) for one trial; output i of the SplitMix64 stream
// seeded with `seed`.
double trial_uniform(std::uint64_t seed, std::uint64_t trial_index);

// Number of house-pays outcomes among trials [first, first + count).
std::uint64_t count_wins(const SimConfig& cfg, std::uint64_t first,
                         std::uint64_t count);

// Exact sample statistics of a two-valued sample given its win count.
SimResult stats_from_win_count(const TwoOutcomeScheme& scheme,
                               std::uint64_t wins, std::uint64_t trials);

// House-side sample statistics over cfg.trials seeded draws.
SimResult simulate_scheme(const SimConfig& cfg);

// (house, player) statistics from the same draws; per-trial player revenue
// is the exact negation of the house revenue.
std::pair<SimResult, SimResult> simulate_player_vs_house(const SimConfig& cfg);

}  // namespace fairbook
