#pragma once

#include <string>

#include "fairbook/odds_core.hpp"

// Three-outcome (home/draw/away) match odds: implied probabilities,
// overround, and the announced probabilities implied by an additive
// per-match margin.

namespace fairbook {

enum class Outcome { home, draw, away };

// A (home, draw, away) triple. Depending on context the components are
// probabilities or decimal odds; all must be finite and positive.
struct OutcomeTriple {
    double home;
    double draw;
    double away;

    OutcomeTriple(double h, double d, double a);

    double component(Outcome o) const;
    double sum() const { return home + draw + away; }
};

// One bookmaker's announced decimal odds for one match.
struct MatchOdds {
    std::string bookmaker;
    OutcomeTriple odds;  // each component > 1

    MatchOdds(std::string house, OutcomeTriple decimal_odds);
};

// Fair probabilities of the three mutually exclusive outcomes; must sum
// to 1 within 1e-9.
struct FairProbs {
    OutcomeTriple probs;

    explicit FairProbs(OutcomeTriple p);
};

// Componentwise reciprocal of the announced decimal odds. The sum may
// exceed 1.
OutcomeTriple implied_triple(const MatchOdds& m);

// Sum of implied probabilities minus 1.
double overround(const MatchOdds& m);

// House revenue scheme for a single announced outcome: win probability is
// the fair probability, payout is the announced decimal odd minus 1.
TwoOutcomeScheme outcome_scheme(const FairProbs& fair, const MatchOdds& announced,
                                Outcome outcome);

// Announced probabilities under the additive model: P* = P / (1 - eps P),
// componentwise. Each P* strictly exceeds P and the sum strictly exceeds 1.
// Throws std::domain_error if eps pushes any announced decimal odd to 1 or
// below.
OutcomeTriple announced_probs_from_margin(const FairProbs& fair, double epsilon);

}  // namespace fairbook
