#pragma once

#include <stdexcept>

// Odds representations and the single-event revenue scheme of a betting
// house. All stakes are normalized to $1 received by the house when the
// bettor loses.

namespace fairbook {

// Probability of a single outcome, in [0, 1].
class Probability {
public:
    explicit Probability(double value);

    double value() const { return value_; }

private:
    double value_;
};

// Total payout per unit stake, stake included. Strictly greater than 1;
// an odd of exactly 1 would mean a certain event and is rejected.
class DecimalOdds {
public:
    explicit DecimalOdds(double value);

    double value() const { return value_; }

private:
    double value_;
};

// Net payout per unit stake, r = 1/p - 1. Non-negative.
class FractionalOdds {
public:
    explicit FractionalOdds(double value);

    double value() const { return value_; }

private:
    double value_;
};

// House-side revenue variable for one bet: the house pays `payout` with
// probability `win_prob` and receives $1 otherwise.
struct TwoOutcomeScheme {
    Probability win_prob;
    double payout;                // >= 0
    static constexpr double receive = 1.0;

    TwoOutcomeScheme(Probability p, double payout_amount);
};

Probability implied_probability(DecimalOdds d);
DecimalOdds to_decimal_odds(Probability p);

// Fair net payout r = 1/p - 1; the scheme (p, r) has expected revenue 0.
FractionalOdds fair_fractional_odds(Probability p);

// House scheme under the additive margin model: payout (1/p - 1) - epsilon.
// Throws std::domain_error if epsilon would drive the payout negative.
TwoOutcomeScheme house_scheme(Probability p, double epsilon);

// E(R_b) = -payout * p + (1 - p). Equals epsilon * p for house_scheme.
double expected_revenue(const TwoOutcomeScheme& s);

// Var(R_b) = p * payout^2 + (1 - p) - E(R_b)^2. Equals r (1 - p eps)^2
// for house_scheme, and plain r for the fair scheme.
double revenue_variance(const TwoOutcomeScheme& s);

}  // namespace fairbook
