#pragma once

#include <string>
#include <vector>

#include "fairbook/ingest.hpp"
#include "fairbook/match_model.hpp"

// Numerical solution of the additive imputed-cost equation
//   sum_k eps P_k^2 / (1 + eps P_k) = delta
// for the house margin eps, given announced implied probabilities P and
// overround delta. The left side is 0 at eps = 0, strictly increasing,
// and bounded by sum(P), so the root is unique when 0 < delta < sum(P).

namespace fairbook {

struct MarginEstimate {
    double epsilon = 0.0;
    double residual = 0.0;   // f(epsilon) - delta at the returned root
    int iterations = 0;
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    std::string bookmaker;
    std::string match_key;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// f(eps) = sum_k eps P_k^2 / (1 + eps P_k) over the announced triple.
double margin_residual(double epsilon, const OutcomeTriple& announced);

// Bracketed bisection on f, expanding the upper bracket until it
// straddles delta. Throws SolverError for delta <= 0 (no positive
// margin), delta >= sum(announced) (no finite root), or tol <= 0.
MarginEstimate solve_epsilon(const OutcomeTriple& announced, double delta,
                             double tol = 1e-10);

struct SkippedMatch {
    std::string match_key;
    std::string reason;
};

struct SeasonMargins {
    std::vector<MarginEstimate> estimates;  // in input record order
    std::vector<SkippedMatch> skipped;
};

struct SolveSeasonOptions {
    double tol = 1e-10;
    // Round implied probabilities and the overround to 2 decimal places
    // before solving, emulating hand computation from printed tables.
    bool paper_rounding = false;
};

// One estimate per record carrying the bookmaker's full odds with positive
// overround; everything else lands in the skip report. Throws SolverError
// for a bookmaker identifier not present in default_column_maps().
SeasonMargins solve_season(const std::vector<MatchRecord>& records,
                           const std::string& bookmaker,
                           const SolveSeasonOptions& opts = {});

std::string match_key(const MatchRecord& rec);

}  // namespace fairbook
