#include "fairbook/simulate.hpp"

#include <cmath>
#include <stdexcept>

namespace fairbook {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function (Steele, Lea & Flood 2014).
std::uint64_t splitmix64_output(std::uint64_t state) {
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

double trial_uniform(std::uint64_t seed, std::uint64_t trial_index) {
    std::uint64_t bits = splitmix64_output(seed + (trial_index + 1) * kGolden);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t count_wins(const SimConfig& cfg, std::uint64_t first,
                         std::uint64_t count) {
    double p = cfg.scheme.win_prob.value();
    std::uint64_t wins = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (trial_uniform(cfg.seed, first + i) < p) ++wins;
    }
    return wins;
}

SimResult stats_from_win_count(const TwoOutcomeScheme& scheme,
                               std::uint64_t wins, std::uint64_t trials) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    double n = static_cast<double>(trials);
    double k = static_cast<double>(wins);
    double win_value = -scheme.payout;
    double lose_value = TwoOutcomeScheme::receive;

    double mean = (win_value * k + lose_value * (n - k)) / n;
    double variance = 0.0;
    if (trials > 1) {
        double dw = win_value - mean;
        double dl = lose_value - mean;
        variance = (k * dw * dw + (n - k) * dl * dl) / (n - 1.0);
    }
    return SimResult{mean, variance, std::sqrt(variance / n), trials};
}

SimResult simulate_scheme(const SimConfig& cfg) {
    if (cfg.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    std::uint64_t wins = count_wins(cfg, 0, cfg.trials);
    return stats_from_win_count(cfg.scheme, wins, cfg.trials);
}

std::pair<SimResult, SimResult> simulate_player_vs_house(const SimConfig& cfg) {
    SimResult house = simulate_scheme(cfg);
    // Negating every trial value negates the mean and preserves the
    // variance.
    SimResult player{-house.sample_mean, house.sample_variance,
                     house.standard_error, house.trials};
    return {house, player};
}

}  // namespace fairbook
