#include "fairbook/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "fairbook/rounding.hpp"

namespace fairbook {

FairnessRanking rank_houses(const MatchRecord& record) {
    FairnessRanking ranking;
    ranking.match_key = match_key(record);
    for (const auto& [house, odds] : record.odds_by_house) {
        ranking.entries.emplace_back(house, overround(odds));
    }
    if (ranking.entries.empty()) {
        throw AnalyticsError("no bookmaker with full odds for " + ranking.match_key);
    }
    std::sort(ranking.entries.begin(), ranking.entries.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second < b.second;
                  return a.first < b.first;
              });
    return ranking;
}

SummaryStats summarize_margins(const std::vector<MarginEstimate>& estimates) {
    if (estimates.empty()) {
        throw AnalyticsError("cannot summarize an empty estimate list");
    }
    std::vector<double> values;
    values.reserve(estimates.size());
    for (const auto& e : estimates) values.push_back(e.epsilon);
    std::sort(values.begin(), values.end());

    std::size_t n = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    double mean = sum / static_cast<double>(n);

    double median = (n % 2 == 1) ? values[n / 2]
                                 : 0.5 * (values[n / 2 - 1] + values[n / 2]);

    double sd = 0.0;
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - mean) * (v - mean);
        sd = std::sqrt(ss / static_cast<double>(n - 1));
    }

    return SummaryStats{mean, median, values.back(), values.front(), sd, n};
}

HistogramSpec margin_histogram(
    const std::map<std::string, std::vector<MarginEstimate>>& estimates_by_house,
    double bin_width) {
    if (!(bin_width > 0.0)) {
        throw AnalyticsError("bin width must be positive");
    }
    // A value exactly on an edge belongs to the right-open bin starting
    // there, so the number of bins comes from the largest bin index any
    // value maps to, not from rounding the maximum itself.
    auto bin_index = [bin_width](double v) {
        return static_cast<std::size_t>(std::floor(v / bin_width));
    };
    std::size_t bins = 1;
    for (const auto& [house, ests] : estimates_by_house) {
        for (const auto& e : ests) bins = std::max(bins, bin_index(e.epsilon) + 1);
    }

    HistogramSpec hist;
    hist.bin_edges.reserve(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        hist.bin_edges.push_back(static_cast<double>(i) * bin_width);
    }

    for (const auto& [house, ests] : estimates_by_house) {
        std::vector<std::size_t> counts(bins, 0);
        for (const auto& e : ests) {
            ++counts[std::min(bin_index(e.epsilon), bins - 1)];
        }
        hist.counts.emplace(house, std::move(counts));
    }
    return hist;
}

namespace {

std::string format_cell(const Table::Cell& cell, int places) {
    if (std::holds_alternative<std::string>(cell)) {
        return std::get<std::string>(cell);
    }
    double v = std::get<double>(cell);
    std::ostringstream out;
    if (places < 0) {
        out << std::setprecision(17) << v;
    } else {
        out << std::fixed << std::setprecision(places) << round_half_up(v, places);
    }
    return out.str();
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void check_shape(const Table& table) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw AnalyticsError("ragged table: row width does not match header");
        }
    }
}

}  // namespace

std::string render_csv(const Table& table, int places) {
    check_shape(table);
    std::ostringstream out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ',';
        out << csv_quote(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_quote(format_cell(row[i], places));
        }
        out << '\n';
    }
    return out.str();
}

std::string render_text(const Table& table, int places) {
    check_shape(table);
    std::vector<std::vector<std::string>> cells;
    cells.push_back(table.columns);
    for (const auto& row : table.rows) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (const auto& cell : row) line.push_back(format_cell(cell, places));
        cells.push_back(std::move(line));
    }
    std::vector<std::size_t> widths(table.columns.size(), 0);
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            widths[i] = std::max(widths[i], line[i].size());
        }
    }
    std::ostringstream out;
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (i) out << "  ";
            out << std::left << std::setw(static_cast<int>(widths[i])) << line[i];
        }
        out << '\n';
    }
    return out.str();
}

void write_histogram_svg(const HistogramSpec& hist, std::ostream& out) {
    const int panel_w = 520, panel_h = 170, margin = 40;
    std::size_t bins = hist.bin_edges.size() - 1;
    std::size_t panels = hist.counts.size();
    int total_h = static_cast<int>(panels) * (panel_h + margin) + margin;
    int total_w = panel_w + 2 * margin;

    std::size_t max_count = 1;
    for (const auto& [house, counts] : hist.counts) {
        for (std::size_t c : counts) max_count = std::max(max_count, c);
    }

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total_w
        << "\" height=\"" << total_h << "\">\n";
    int y0 = margin;
    for (const auto& [house, counts] : hist.counts) {
        out << "  <text x=\"" << margin << "\" y=\"" << y0 - 8
            << "\" font-family=\"sans-serif\" font-size=\"14\">" << house
            << "</text>\n";
        double bar_w = static_cast<double>(panel_w) / static_cast<double>(bins);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            double h = panel_h * static_cast<double>(counts[i]) /
                       static_cast<double>(max_count);
            double x = margin + static_cast<double>(i) * bar_w;
            out << "  <rect x=\"" << x << "\" y=\"" << y0 + (panel_h - h)
                << "\" width=\"" << bar_w * 0.9 << "\" height=\"" << h
                << "\" fill=\"#4477aa\"/>\n";
        }
        out << "  <line x1=\"" << margin << "\" y1=\"" << y0 + panel_h
            << "\" x2=\"" << margin + panel_w << "\" y2=\"" << y0 + panel_h
            << "\" stroke=\"#000\"/>\n";
        y0 += panel_h + margin;
    }
    out << "</svg>\n";
}

}  // namespace fairbook
