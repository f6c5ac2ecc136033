#pragma once

#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "fairbook/ingest.hpp"
#include "fairbook/margin_solver.hpp"

// Cross-bookmaker comparison, season summaries of the imputed cost, and
// histogram exports.

namespace fairbook {

// Bookmakers for one match ordered from fairest (smallest overround) to
// worst; ties break lexicographically by identifier.
struct FairnessRanking {
    std::string match_key;
    std::vector<std::pair<std::string, double>> entries;
};

struct SummaryStats {
    double mean;
    double median;
    double maximum;
    double minimum;
    double sd;  // sample standard deviation, n-1 divisor; 0 for a singleton
    std::size_t count;
};

// Shared right-open bins [a, b), last bin closed, starting at 0.
struct HistogramSpec {
    std::vector<double> bin_edges;
    std::map<std::string, std::vector<std::size_t>> counts;
};

struct AnalyticsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FairnessRanking rank_houses(const MatchRecord& record);

SummaryStats summarize_margins(const std::vector<MarginEstimate>& estimates);

HistogramSpec margin_histogram(
    const std::map<std::string, std::vector<MarginEstimate>>& estimates_by_house,
    double bin_width);

// Tabular report rendering. Numeric cells print at full precision in CSV
// and rounded half-up in the aligned text form.
struct Table {
    using Cell = std::variant<std::string, double>;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// RFC 4180 quoting; places < 0 means shortest round-trip precision.
std::string render_csv(const Table& table, int places = -1);

// Column-aligned plain text.
std::string render_text(const Table& table, int places = 2);

// Standalone SVG bar charts, one panel per house.
void write_histogram_svg(const HistogramSpec& hist, std::ostream& out);

}  // namespace fairbook
