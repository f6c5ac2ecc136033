#include "fairbook/ingest.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace fairbook {

namespace {

// Splits one CSV record, honoring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool in_quotes = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::optional<double> parse_real(const std::string& cell) {
    std::string t = trim(cell);
    if (t.empty()) return std::nullopt;
    double v;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
    return v;
}

// Day-first: DD/MM/YY or DD/MM/YYYY. Two-digit years are 2000-based.
std::optional<Date> parse_date(const std::string& cell) {
    std::string t = trim(cell);
    int parts[3] = {0, 0, 0};
    int idx = 0;
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t next = (k < 2) ? t.find('/', pos) : t.size();
        if (next == std::string::npos) return std::nullopt;
        std::string piece = t.substr(pos, next - pos);
        if (piece.empty() || piece.size() > 4) return std::nullopt;
        for (char c : piece) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        }
        parts[idx++] = std::stoi(piece);
        pos = next + 1;
    }
    Date d{parts[2], parts[1], parts[0]};
    if (d.year < 100) d.year += 2000;
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) return std::nullopt;
    return d;
}

MatchResult parse_result(const std::string& cell) {
    std::string t = trim(cell);
    if (t == "H") return MatchResult::home_win;
    if (t == "D") return MatchResult::draw;
    if (t == "A") return MatchResult::away_win;
    return MatchResult::unknown;
}

bool read_line(std::istream& in, std::string& out) {
    if (!std::getline(in, out)) return false;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
}

}  // namespace

std::vector<BookmakerColumnMap> default_column_maps() {
    return {
        {"B365", "B365H", "B365D", "B365A"},
        {"BW", "BWH", "BWD", "BWA"},
        {"IW", "IWH", "IWD", "IWA"},
        {"LB", "LBH", "LBD", "LBA"},
        {"WH", "WHH", "WHD", "WHA"},
        {"VC", "VCH", "VCD", "VCA"},
    };
}

SeasonData parse_season(std::istream& csv_stream,
                        const std::vector<BookmakerColumnMap>& maps) {
    std::string line;
    if (!read_line(csv_stream, line)) {
        throw ParseError("line 1: missing header row");
    }
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
    }

    std::unordered_map<std::string, std::size_t> col_index;
    {
        auto headers = split_csv_line(line);
        for (std::size_t i = 0; i < headers.size(); ++i) {
            col_index.emplace(trim(headers[i]), i);
        }
    }
    for (const char* required : {"Date", "HomeTeam", "AwayTeam"}) {
        if (!col_index.count(required)) {
            throw ParseError(std::string("line 1: header lacks required column ") + required);
        }
    }

    auto cell = [&](const std::vector<std::string>& row, const std::string& col)
        -> std::optional<std::string> {
        auto it = col_index.find(col);
        if (it == col_index.end() || it->second >= row.size()) return std::nullopt;
        return row[it->second];
    };

    SeasonData out;
    std::size_t line_no = 1;
    while (read_line(csv_stream, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto row = split_csv_line(line);

        auto date_cell = cell(row, "Date");
        auto home_cell = cell(row, "HomeTeam");
        auto away_cell = cell(row, "AwayTeam");
        auto date = date_cell ? parse_date(*date_cell) : std::nullopt;
        std::string home = home_cell ? trim(*home_cell) : "";
        std::string away = away_cell ? trim(*away_cell) : "";
        if (!date || home.empty() || away.empty()) {
            out.warnings.push_back({line_no, "", "malformed row: bad date or team fields"});
            continue;
        }
        if (home == away) {
            out.warnings.push_back({line_no, "", "malformed row: identical home and away team"});
            continue;
        }

        MatchRecord rec;
        rec.date = *date;
        rec.home_team = home;
        rec.away_team = away;
        if (auto ftr = cell(row, "FTR")) rec.result = parse_result(*ftr);

        for (const auto& map : maps) {
            auto h = cell(row, map.home_col);
            auto d = cell(row, map.draw_col);
            auto a = cell(row, map.away_col);
            if ((!h || trim(*h).empty()) && (!d || trim(*d).empty()) &&
                (!a || trim(*a).empty())) {
                out.warnings.push_back({line_no, map.bookmaker, "odds missing"});
                continue;
            }
            auto oh = h ? parse_real(*h) : std::nullopt;
            auto od = d ? parse_real(*d) : std::nullopt;
            auto oa = a ? parse_real(*a) : std::nullopt;
            if (!oh || !od || !oa) {
                out.warnings.push_back({line_no, map.bookmaker, "odds incomplete or unparsable"});
                continue;
            }
            double vh = oh.value_or(0.0);
            double vd = od.value_or(0.0);
            double va = oa.value_or(0.0);
            if (vh <= 1.0 || vd <= 1.0 || va <= 1.0) {
                out.warnings.push_back({line_no, map.bookmaker, "odds not greater than 1"});
                continue;
            }
            rec.odds_by_house.emplace(
                map.bookmaker, MatchOdds(map.bookmaker, OutcomeTriple(vh, vd, va)));
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

SeasonData parse_season_file(const std::string& path,
                             const std::vector<BookmakerColumnMap>& maps) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open input file: " + path);
    }
    return parse_season(in, maps);
}

}  // namespace fairbook
