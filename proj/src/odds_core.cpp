#include "fairbook/odds_core.hpp"

#include <cmath>

namespace fairbook {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be finite");
    }
}

}  // namespace

Probability::Probability(double value) : value_(value) {
    require_finite(value, "probability");
    if (value < 0.0 || value > 1.0) {
        throw std::domain_error("probability outside [0, 1]");
    }
}

DecimalOdds::DecimalOdds(double value) : value_(value) {
    require_finite(value, "decimal odds");
    if (value <= 1.0) {
        throw std::domain_error("decimal odds must exceed 1");
    }
}

FractionalOdds::FractionalOdds(double value) : value_(value) {
    require_finite(value, "fractional odds");
    if (value < 0.0) {
        throw std::domain_error("fractional odds must be non-negative");
    }
}

TwoOutcomeScheme::TwoOutcomeScheme(Probability p, double payout_amount)
    : win_prob(p), payout(payout_amount) {
    require_finite(payout_amount, "payout");
    if (payout_amount < 0.0) {
        throw std::domain_error("payout must be non-negative");
    }
}

Probability implied_probability(DecimalOdds d) {
    return Probability(1.0 / d.value());
}

DecimalOdds to_decimal_odds(Probability p) {
    if (p.value() <= 0.0) {
        throw std::domain_error("zero probability has no finite odds");
    }
    if (p.value() >= 1.0) {
        throw std::domain_error("certain event has degenerate odds of 1");
    }
    return DecimalOdds(1.0 / p.value());
}

FractionalOdds fair_fractional_odds(Probability p) {
    if (p.value() <= 0.0) {
        throw std::domain_error("zero probability has no finite fair payout");
    }
    return FractionalOdds(1.0 / p.value() - 1.0);
}

TwoOutcomeScheme house_scheme(Probability p, double epsilon) {
    if (p.value() <= 0.0 || p.value() >= 1.0) {
        throw std::domain_error("win probability must lie strictly in (0, 1)");
    }
    require_finite(epsilon, "epsilon");
    if (epsilon < 0.0) {
        throw std::domain_error("epsilon must be non-negative");
    }
    double payout = (1.0 / p.value() - 1.0) - epsilon;
    if (payout < 0.0) {
        throw std::domain_error("epsilon exceeds the fair payout");
    }
    return TwoOutcomeScheme(p, payout);
}

double expected_revenue(const TwoOutcomeScheme& s) {
    double p = s.win_prob.value();
    return -s.payout * p + TwoOutcomeScheme::receive * (1.0 - p);
}

double revenue_variance(const TwoOutcomeScheme& s) {
    double p = s.win_prob.value();
    double second_moment = p * s.payout * s.payout + (1.0 - p);
    double mean = expected_revenue(s);
    return second_moment - mean * mean;
}

}  // namespace fairbook
