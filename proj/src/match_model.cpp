#include "fairbook/match_model.hpp"

#include <cmath>
#include <utility>

namespace fairbook {

OutcomeTriple::OutcomeTriple(double h, double d, double a)
    : home(h), draw(d), away(a) {
    for (double v : {h, d, a}) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw std::domain_error("triple components must be finite and positive");
        }
    }
}

double OutcomeTriple::component(Outcome o) const {
    switch (o) {
        case Outcome::home: return home;
        case Outcome::draw: return draw;
        case Outcome::away: return away;
    }
    throw std::logic_error("unhandled outcome");
}

MatchOdds::MatchOdds(std::string house, OutcomeTriple decimal_odds)
    : bookmaker(std::move(house)), odds(decimal_odds) {
    for (double v : {odds.home, odds.draw, odds.away}) {
        if (v <= 1.0) {
            throw std::domain_error("decimal odds components must exceed 1");
        }
    }
}

FairProbs::FairProbs(OutcomeTriple p) : probs(p) {
    if (std::abs(p.sum() - 1.0) > 1e-9) {
        throw std::domain_error("fair probabilities must sum to 1");
    }
}

OutcomeTriple implied_triple(const MatchOdds& m) {
    return OutcomeTriple(1.0 / m.odds.home, 1.0 / m.odds.draw, 1.0 / m.odds.away);
}

double overround(const MatchOdds& m) {
    return implied_triple(m).sum() - 1.0;
}

TwoOutcomeScheme outcome_scheme(const FairProbs& fair, const MatchOdds& announced,
                                Outcome outcome) {
    double odd = announced.odds.component(outcome);
    if (odd <= 1.0) {
        throw std::domain_error("announced odd must exceed 1");
    }
    return TwoOutcomeScheme(Probability(fair.probs.component(outcome)), odd - 1.0);
}

OutcomeTriple announced_probs_from_margin(const FairProbs& fair, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::domain_error("epsilon must be positive");
    }
    auto announce = [epsilon](double p) {
        // Announced decimal odds are 1/p - eps; they must stay above 1.
        if (epsilon >= 1.0 / p - 1.0) {
            throw std::domain_error("epsilon too large: announced odds would not exceed 1");
        }
        return p / (1.0 - epsilon * p);
    };
    return OutcomeTriple(announce(fair.probs.home), announce(fair.probs.draw),
                         announce(fair.probs.away));
}

}  // namespace fairbook
