#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fairbook/ingest.hpp"
#include "fairbook/margin_solver.hpp"

using namespace fairbook;

namespace {

// Independent oracle: the imputed-cost equation evaluated from scratch and
// a fixed 200-step bisection. Shares no code with the solver under test.
double oracle_equation(double eps, double p1, double p2, double p3) {
    return eps * p1 * p1 / (1.0 + eps * p1) + eps * p2 * p2 / (1.0 + eps * p2) +
           eps * p3 * p3 / (1.0 + eps * p3);
}

double oracle_bisect(double p1, double p2, double p3, double delta) {
    double lo = 0.0, hi = 1.0;
    while (oracle_equation(hi, p1, p2, p3) < delta) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (oracle_equation(mid, p1, p2, p3) < delta) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

FairProbs random_fair(std::mt19937& rng) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    double a = unif(rng), b = unif(rng), c = unif(rng);
    double s = a + b + c;
    return FairProbs(OutcomeTriple(a / s, b / s, c / s));
}

}  // namespace

TEST_CASE("residual basics") {
    OutcomeTriple t(0.5, 0.25, 0.25);
    CHECK(margin_residual(0.0, t) == 0.0);
    CHECK(margin_residual(1e9, t) == doctest::Approx(1.0).epsilon(1e-8));

    OutcomeTriple printed(0.50, 0.28, 0.25);
    CHECK(margin_residual(0.065, printed) ==
          doctest::Approx(0.024740949391342).epsilon(1e-10));
}

TEST_CASE("residual is strictly increasing in eps") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> unif(0.05, 0.9);
    for (int i = 0; i < 100; ++i) {
        OutcomeTriple t(unif(rng), unif(rng), unif(rng));
        double prev = -1.0;
        for (double eps = 0.0; eps <= 2.0; eps += 0.1) {
            double f = margin_residual(eps, t);
            CHECK(f > prev);
            prev = f;
        }
    }
}

TEST_CASE("solve_epsilon on the hand-worked instances") {
    // Printed-table inputs.
    OutcomeTriple printed(0.50, 0.25, 0.28);
    auto est = solve_epsilon(printed, 0.03);
    CHECK(std::abs(est.residual) <= 1e-10);
    CHECK(est.epsilon ==
          doctest::Approx(oracle_bisect(0.50, 0.25, 0.28, 0.03)).epsilon(1e-9));
    CHECK(est.epsilon == doctest::Approx(0.0793).epsilon(1e-3));
    CHECK(est.bracket_low <= est.epsilon);
    CHECK(est.epsilon <= est.bracket_high);

    // Full-precision inputs for the same match.
    OutcomeTriple full(0.5, 1.0 / 3.6, 0.25);
    double delta = full.sum() - 1.0;
    auto est2 = solve_epsilon(full, delta);
    CHECK(est2.epsilon == doctest::Approx(0.0735).epsilon(1e-3));
    CHECK(est2.epsilon ==
          doctest::Approx(oracle_bisect(0.5, 1.0 / 3.6, 0.25, delta)).epsilon(1e-9));
}

TEST_CASE("solve_epsilon error contracts") {
    OutcomeTriple t(0.5, 0.25, 0.28);
    CHECK_THROWS_WITH_AS(solve_epsilon(t, 0.0), doctest::Contains("no positive margin"),
                         SolverError);
    CHECK_THROWS_AS(solve_epsilon(t, -0.1), SolverError);
    CHECK_THROWS_WITH_AS(solve_epsilon(t, 1.1), doctest::Contains("unreachable"),
                         SolverError);
    CHECK_THROWS_AS(solve_epsilon(t, 0.03, 0.0), SolverError);
}

TEST_CASE("oracle equivalence on random instances") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unif(0.05, 0.9);
    std::uniform_real_distribution<double> frac(0.01, 0.9);
    for (int i = 0; i < 100; ++i) {
        OutcomeTriple t(unif(rng), unif(rng), unif(rng));
        double delta = frac(rng) * t.sum();
        auto est = solve_epsilon(t, delta);
        CHECK(std::abs(est.residual) <= 1e-10);
        double oracle = oracle_bisect(t.home, t.draw, t.away, delta);
        CHECK(std::abs(est.epsilon - oracle) <= 1e-9);
    }
}

TEST_CASE("round trip through announced_probs_from_margin") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        FairProbs fair = random_fair(rng);
        double max_p = std::max({fair.probs.home, fair.probs.draw, fair.probs.away});
        double eps = unif(rng) * (1.0 / max_p - 1.0) * 0.9 + 1e-6;
        auto announced = announced_probs_from_margin(fair, eps);
        double delta = announced.sum() - 1.0;
        auto est = solve_epsilon(announced, delta);
        CHECK(std::abs(est.epsilon - eps) <= 1e-9);
        // Reproduce the announced triple from the recovered margin.
        auto rebuilt = announced_probs_from_margin(fair, est.epsilon);
        CHECK(rebuilt.home == doctest::Approx(announced.home).epsilon(1e-9));
        CHECK(rebuilt.draw == doctest::Approx(announced.draw).epsilon(1e-9));
        CHECK(rebuilt.away == doctest::Approx(announced.away).epsilon(1e-9));
    }
}

TEST_CASE("linear regime: eps ~ delta / sum(P^2) for small delta") {
    std::mt19937 rng(43);
    std::uniform_real_distribution<double> unif(0.1, 0.6);
    for (int i = 0; i < 50; ++i) {
        OutcomeTriple t(unif(rng), unif(rng), unif(rng));
        double delta = 1e-4;
        auto est = solve_epsilon(t, delta);
        double sum_sq = t.home * t.home + t.draw * t.draw + t.away * t.away;
        CHECK(est.epsilon == doctest::Approx(delta / sum_sq).epsilon(0.05));
    }
}

TEST_CASE("solve_season over the bundled sample") {
    auto season = parse_season_file(std::string(FAIRBOOK_DATA_DIR) + "/sample10.csv",
                                    default_column_maps());
    REQUIRE(season.records.size() == 10);

    auto margins = solve_season(season.records, "B365");
    CHECK(margins.estimates.size() == 10);
    CHECK(margins.skipped.empty());
    for (const auto& est : margins.estimates) {
        CHECK(std::abs(est.residual) <= 1e-10);
        CHECK(est.bookmaker == "B365");
        auto probs = implied_triple(
            season.records[&est - margins.estimates.data()].odds_by_house.at("B365"));
        double oracle = oracle_bisect(probs.home, probs.draw, probs.away,
                                      probs.sum() - 1.0);
        CHECK(std::abs(est.epsilon - oracle) <= 1e-9);
    }

    // WH odds are missing for several matches; they must show up as skips.
    auto wh = solve_season(season.records, "WH");
    CHECK(wh.estimates.size() + wh.skipped.size() == 10);
    CHECK(!wh.skipped.empty());
    for (const auto& skip : wh.skipped) CHECK(!skip.reason.empty());

    CHECK_THROWS_WITH_AS(solve_season(season.records, "XX"),
                         doctest::Contains("B365"), SolverError);
}

TEST_CASE("paper rounding mode uses 2-dp inputs") {
    auto season = parse_season_file(std::string(FAIRBOOK_DATA_DIR) + "/sample10.csv",
                                    default_column_maps());
    SolveSeasonOptions opts;
    opts.paper_rounding = true;
    auto margins = solve_season(season.records, "B365", opts);
    REQUIRE(!margins.estimates.empty());
    // First match rounds to (0.50, 0.28, 0.25) with delta 0.03.
    CHECK(margins.estimates.front().epsilon ==
          doctest::Approx(oracle_bisect(0.50, 0.28, 0.25, 0.03)).epsilon(1e-9));
}
