#include <doctest.h>

#include <cmath>
#include <random>

#include "fairbook/margin_solver.hpp"
#include "fairbook/match_model.hpp"

using namespace fairbook;

namespace {

FairProbs random_fair(std::mt19937& rng) {
    std::uniform_real_distribution<double> unif(0.05, 1.0);
    double a = unif(rng), b = unif(rng), c = unif(rng);
    double s = a + b + c;
    return FairProbs(OutcomeTriple(a / s, b / s, c / s));
}

}  // namespace

TEST_CASE("triple and match odds invariants") {
    CHECK_THROWS_AS(OutcomeTriple(0.0, 0.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(OutcomeTriple(0.5, -1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(MatchOdds("X", OutcomeTriple(1.0, 2.0, 2.0)), std::domain_error);
    CHECK_THROWS_AS(FairProbs(OutcomeTriple(0.5, 0.3, 0.3)), std::domain_error);
}

TEST_CASE("implied triple and sum") {
    MatchOdds m("B365", OutcomeTriple(2.00, 3.60, 4.00));
    auto probs = implied_triple(m);
    CHECK(probs.home == doctest::Approx(0.50));
    CHECK(probs.draw == doctest::Approx(1.0 / 3.6).epsilon(1e-12));
    CHECK(probs.away == doctest::Approx(0.25));
    CHECK(probs.sum() == doctest::Approx(1.0278).epsilon(1e-4));

    MatchOdds fair("X", OutcomeTriple(2, 4, 4));
    CHECK(implied_triple(fair).sum() == doctest::Approx(1.0));

    MatchOdds row2("B365", OutcomeTriple(1.36, 5.00, 11.00));
    CHECK(implied_triple(row2).sum() ==
          doctest::Approx(1.0 / 1.36 + 0.2 + 1.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("overround") {
    CHECK(overround(MatchOdds("B365", OutcomeTriple(2.00, 3.60, 4.00))) ==
          doctest::Approx(0.0278).epsilon(1e-2));
    CHECK(overround(MatchOdds("X", OutcomeTriple(2, 4, 4))) ==
          doctest::Approx(0.0));
    CHECK(overround(MatchOdds("IW", OutcomeTriple(2.10, 3.30, 3.30))) ==
          doctest::Approx(1.0 / 2.1 + 2.0 / 3.3 - 1.0).epsilon(1e-12));
}

TEST_CASE("per-outcome schemes reproduce the worked expected revenues") {
    FairProbs fair(OutcomeTriple(0.6, 0.25, 0.15));
    MatchOdds announced("X", OutcomeTriple(1.57, 3.87, 6.57));

    auto home = outcome_scheme(fair, announced, Outcome::home);
    CHECK(home.payout == doctest::Approx(0.57).epsilon(1e-12));
    CHECK(expected_revenue(home) == doctest::Approx(0.058).epsilon(1e-12));

    auto away = outcome_scheme(fair, announced, Outcome::away);
    CHECK(expected_revenue(away) == doctest::Approx(0.0145).epsilon(1e-10));

    auto draw = outcome_scheme(fair, announced, Outcome::draw);
    CHECK(expected_revenue(draw) == doctest::Approx(0.0325).epsilon(1e-10));
}

TEST_CASE("announced probabilities under an additive margin") {
    FairProbs fair(OutcomeTriple(0.5, 0.25, 0.25));
    auto announced = announced_probs_from_margin(fair, 0.1);
    CHECK(announced.home == doctest::Approx(0.5263157894736842).epsilon(1e-12));
    CHECK(announced.draw == doctest::Approx(0.25641025641025644).epsilon(1e-12));
    CHECK(announced.away == doctest::Approx(0.25641025641025644).epsilon(1e-12));
    CHECK(announced.sum() == doctest::Approx(1.039136302294197).epsilon(1e-12));

    // eps -> 0 limit: announced -> fair
    auto tiny = announced_probs_from_margin(fair, 1e-12);
    CHECK(tiny.home == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(tiny.sum() == doctest::Approx(1.0).epsilon(1e-9));

    // eps must leave announced odds above 1
    CHECK_THROWS_AS(announced_probs_from_margin(fair, 1.0), std::domain_error);
    CHECK_THROWS_AS(announced_probs_from_margin(fair, 0.0), std::domain_error);
}

TEST_CASE("dominance and overround positivity") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        FairProbs fair = random_fair(rng);
        double max_p = std::max({fair.probs.home, fair.probs.draw, fair.probs.away});
        double eps = unif(rng) * (1.0 / max_p - 1.0) * 0.999 + 1e-9;
        auto announced = announced_probs_from_margin(fair, eps);
        CHECK(announced.home > fair.probs.home);
        CHECK(announced.draw > fair.probs.draw);
        CHECK(announced.away > fair.probs.away);
        CHECK(announced.sum() > 1.0);
    }
}

TEST_CASE("overround of the announced book equals the solver residual") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        FairProbs fair = random_fair(rng);
        double max_p = std::max({fair.probs.home, fair.probs.draw, fair.probs.away});
        double eps = unif(rng) * (1.0 / max_p - 1.0) * 0.9 + 1e-6;
        auto announced = announced_probs_from_margin(fair, eps);
        MatchOdds book("X", OutcomeTriple(1.0 / announced.home, 1.0 / announced.draw,
                                          1.0 / announced.away));
        double delta = overround(book);
        CHECK(std::abs(delta - margin_residual(eps, announced)) <= 1e-12);
    }
}
