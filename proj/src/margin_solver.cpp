#include "fairbook/margin_solver.hpp"

#include <cmath>
#include <sstream>

#include "fairbook/rounding.hpp"

namespace fairbook {

double margin_residual(double epsilon, const OutcomeTriple& announced) {
    double total = 0.0;
    for (double p : {announced.home, announced.draw, announced.away}) {
        total += epsilon * p * p / (1.0 + epsilon * p);
    }
    return total;
}

MarginEstimate solve_epsilon(const OutcomeTriple& announced, double delta,
                             double tol) {
    if (!(tol > 0.0)) {
        throw SolverError("tolerance must be positive");
    }
    if (!(delta > 0.0)) {
        throw SolverError("no positive margin: overround is zero or negative");
    }
    if (delta >= announced.sum()) {
        std::ostringstream msg;
        msg << "unreachable delta " << delta << ": residual is bounded by "
            << announced.sum();
        throw SolverError(msg.str());
    }

    constexpr int kMaxIterations = 200;
    int iterations = 0;

    double lo = 0.0;
    double hi = 1.0;
    while (margin_residual(hi, announced) < delta) {
        hi *= 2.0;
        if (++iterations >= kMaxIterations) {
            throw SolverError("bracket expansion exceeded iteration cap");
        }
    }

    // Bisect until the residual meets the tolerance and the bracket has
    // collapsed, so the root itself is pinned, not just the residual.
    constexpr double kBracketWidth = 1e-13;
    double mid = hi;
    double f_mid = margin_residual(mid, announced);
    while (std::abs(f_mid - delta) > tol || hi - lo > kBracketWidth) {
        if (++iterations >= kMaxIterations) {
            std::ostringstream msg;
            msg << "bisection exceeded " << kMaxIterations
                << " iterations; bracket [" << lo << ", " << hi << "], residual "
                << (f_mid - delta);
            throw SolverError(msg.str());
        }
        mid = 0.5 * (lo + hi);
        f_mid = margin_residual(mid, announced);
        if (f_mid < delta) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    MarginEstimate est;
    est.epsilon = mid;
    est.residual = f_mid - delta;
    est.iterations = iterations;
    est.bracket_low = lo;
    est.bracket_high = hi;
    return est;
}

std::string match_key(const MatchRecord& rec) {
    std::ostringstream key;
    key << rec.date.year << '-';
    if (rec.date.month < 10) key << '0';
    key << rec.date.month << '-';
    if (rec.date.day < 10) key << '0';
    key << rec.date.day << ' ' << rec.home_team << " v " << rec.away_team;
    return key.str();
}

SeasonMargins solve_season(const std::vector<MatchRecord>& records,
                           const std::string& bookmaker,
                           const SolveSeasonOptions& opts) {
    bool known = false;
    std::string known_list;
    for (const auto& map : default_column_maps()) {
        if (!known_list.empty()) known_list += ", ";
        known_list += map.bookmaker;
        if (map.bookmaker == bookmaker) known = true;
    }
    if (!known) {
        throw SolverError("unknown bookmaker '" + bookmaker +
                          "'; known: " + known_list);
    }

    SeasonMargins out;
    for (const auto& rec : records) {
        std::string key = match_key(rec);
        auto it = rec.odds_by_house.find(bookmaker);
        if (it == rec.odds_by_house.end()) {
            out.skipped.push_back({key, "odds missing for " + bookmaker});
            continue;
        }
        OutcomeTriple probs = implied_triple(it->second);
        if (opts.paper_rounding) {
            probs = OutcomeTriple(round_half_up(probs.home, 2),
                                  round_half_up(probs.draw, 2),
                                  round_half_up(probs.away, 2));
        }
        double delta = opts.paper_rounding ? round_half_up(probs.sum(), 2) - 1.0
                                           : probs.sum() - 1.0;
        if (!(delta > 0.0)) {
            out.skipped.push_back({key, "non-positive overround"});
            continue;
        }
        MarginEstimate est = solve_epsilon(probs, delta, opts.tol);
        est.bookmaker = bookmaker;
        est.match_key = key;
        out.estimates.push_back(std::move(est));
    }
    return out;
}

}  // namespace fairbook
