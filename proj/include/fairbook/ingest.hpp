#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairbook/match_model.hpp"

// CSV ingestion for league-football fixture files in the
// football-data.co.uk layout (first row headers; Date, HomeTeam,
// AwayTeam, FTR plus per-house 1X2 odds columns).

namespace fairbook {

enum class MatchResult { home_win, draw, away_win, unknown };

struct Date {
    int year;   // four digits
    int month;  // 1..12
    int day;    // 1..31

    bool operator==(const Date&) const = default;
};

// One fixture with whatever bookmaker odds parsed cleanly.
struct MatchRecord {
    Date date;
    std::string home_team;
    std::string away_team;
    MatchResult result = MatchResult::unknown;
    std::map<std::string, MatchOdds> odds_by_house;
};

// Names the three odds columns belonging to one bookmaker.
struct BookmakerColumnMap {
    std::string bookmaker;
    std::string home_col;
    std::string draw_col;
    std::string away_col;
};

struct IngestWarning {
    std::size_t line;        // 1-based line number in the input
    std::string bookmaker;   // empty for row-level warnings
    std::string reason;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeasonData {
    std::vector<MatchRecord> records;
    std::vector<IngestWarning> warnings;
};

// The six houses the dataset carries: B365, BW, IW, LB, WH, VC.
std::vector<BookmakerColumnMap> default_column_maps();

// Streaming single-pass parse. A MatchOdds appears for a bookmaker only
// when all three of its cells parse as reals > 1; anything else becomes a
// warning, never a silent drop. Tolerates a UTF-8 BOM and CRLF endings.
// Throws ParseError when the header is missing or lacks
// Date/HomeTeam/AwayTeam.
SeasonData parse_season(std::istream& csv_stream,
                        const std::vector<BookmakerColumnMap>& maps);

SeasonData parse_season_file(const std::string& path,
                             const std::vector<BookmakerColumnMap>& maps);

}  // namespace fairbook
