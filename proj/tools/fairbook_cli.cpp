// fairbook: bookmaker-odds analysis from the command line.
//
// Subcommands: overround, impute, compare, summarize, hist, simulate.
// Exit codes: 0 success, 1 data error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "fairbook/analytics.hpp"
#include "fairbook/ingest.hpp"
#include "fairbook/margin_solver.hpp"
#include "fairbook/match_model.hpp"
#include "fairbook/simulate.hpp"

namespace {

constexpr const char* kVersion = "fairbook 1.0.0";
constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> known_houses() {
    std::vector<std::string> names;
    for (const auto& map : fairbook::default_column_maps()) {
        names.push_back(map.bookmaker);
    }
    return names;
}

std::string known_houses_joined() {
    std::string joined;
    for (const auto& name : known_houses()) {
        if (!joined.empty()) joined += ", ";
        joined += name;
    }
    return joined;
}

void require_known_house(const std::string& house) {
    for (const auto& name : known_houses()) {
        if (name == house) return;
    }
    throw UsageError("unknown house '" + house + "'; valid houses: " +
                     known_houses_joined());
}

fairbook::SeasonData load_season(const std::string& path) {
    try {
        return fairbook::parse_season_file(path, fairbook::default_column_maps());
    } catch (const fairbook::ParseError& e) {
        throw DataError(e.what());
    }
}

// Both renderings come from the same Table instance; format only selects
// how its cells are printed.
void emit(const fairbook::Table& table, const std::string& format,
          const std::string& out_path, std::vector<std::string>& outputs,
          int text_places = 2) {
    std::string rendered = (format == "csv")
                               ? fairbook::render_csv(table)
                               : fairbook::render_text(table, text_places);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw DataError("cannot write output file: " + out_path);
        out << rendered;
        outputs.push_back(out_path);
    }
}

void write_manifest(const std::string& manifest_path, const std::string& command,
                    const std::string& input,
                    const std::map<std::string, std::string>& params,
                    const std::vector<std::string>& outputs) {
    if (manifest_path.empty()) return;
    nlohmann::json manifest{
        {"command", command},
        {"input", input},
        {"parameters", params},
        {"tool_version", kVersion},
        {"outputs", outputs},
    };
    std::ofstream out(manifest_path);
    if (!out) throw DataError("cannot write manifest: " + manifest_path);
    out << manifest.dump(2) << '\n';
}

std::vector<std::string> selected_houses(const std::string& filter) {
    if (filter.empty()) return known_houses();
    require_known_house(filter);
    return {filter};
}

int run_overround(const std::string& input, const std::string& house,
                  const std::string& format, const std::string& out_path,
                  const std::string& manifest_path) {
    auto houses = selected_houses(house);
    auto season = load_season(input);

    fairbook::Table table;
    table.columns = {"match", "house", "p_home", "p_draw", "p_away",
                     "sum", "overround"};
    for (const auto& rec : season.records) {
        for (const auto& h : houses) {
            auto it = rec.odds_by_house.find(h);
            if (it == rec.odds_by_house.end()) continue;
            auto probs = fairbook::implied_triple(it->second);
            table.rows.push_back({fairbook::match_key(rec), h, probs.home,
                                  probs.draw, probs.away, probs.sum(),
                                  probs.sum() - 1.0});
        }
    }
    std::vector<std::string> outputs;
    emit(table, format, out_path, outputs);
    write_manifest(manifest_path, "overround", input, {{"house", house}}, outputs);
    return kExitOk;
}

int run_impute(const std::string& input, const std::string& house, double tol,
               bool paper_rounding, const std::string& format,
               const std::string& out_path, const std::string& manifest_path) {
    if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
    auto houses = selected_houses(house);
    auto season = load_season(input);

    fairbook::Table table;
    table.columns = {"match", "house", "epsilon", "residual", "iterations"};
    fairbook::Table skips;
    skips.columns = {"match", "house", "reason"};

    fairbook::SolveSeasonOptions opts;
    opts.tol = tol;
    opts.paper_rounding = paper_rounding;
    for (const auto& h : houses) {
        auto margins = fairbook::solve_season(season.records, h, opts);
        for (const auto& est : margins.estimates) {
            table.rows.push_back({est.match_key, h, est.epsilon, est.residual,
                                  std::to_string(est.iterations)});
        }
        for (const auto& skip : margins.skipped) {
            skips.rows.push_back({skip.match_key, h, skip.reason});
        }
    }

    std::vector<std::string> outputs;
    emit(table, format, out_path, outputs, 6);
    if (!skips.rows.empty()) {
        std::ostringstream report;
        report << "# skipped " << skips.rows.size() << " (match, house) pairs\n"
               << fairbook::render_text(skips, 2);
        if (out_path.empty()) {
            std::cout << report.str();
        } else {
            std::ofstream out(out_path, std::ios::app);
            out << report.str();
        }
    }
    write_manifest(manifest_path, "impute", input,
                   {{"house", house}, {"tol", std::to_string(tol)}}, outputs);
    return kExitOk;
}

int run_compare(const std::string& input, std::optional<std::size_t> row,
                const std::string& date, const std::string& home,
                const std::string& away, const std::string& format,
                const std::string& out_path, const std::string& manifest_path) {
    auto season = load_season(input);

    std::vector<const fairbook::MatchRecord*> matches;
    if (row) {
        if (*row < 1 || *row > season.records.size()) {
            throw UsageError("row index out of range 1.." +
                             std::to_string(season.records.size()));
        }
        matches.push_back(&season.records[*row - 1]);
    } else {
        if (date.empty() && home.empty() && away.empty()) {
            throw UsageError("give --row or at least one of --date/--home/--away");
        }
        for (const auto& rec : season.records) {
            std::string key = fairbook::match_key(rec);
            bool date_ok = date.empty() || key.substr(0, 10) == date;
            bool home_ok = home.empty() || rec.home_team == home;
            bool away_ok = away.empty() || rec.away_team == away;
            if (date_ok && home_ok && away_ok) matches.push_back(&rec);
        }
        if (matches.empty()) throw UsageError("selector matches no record");
        if (matches.size() > 1) {
            std::ostringstream msg;
            msg << "selector is ambiguous; it matches " << matches.size()
                << " records:";
            for (const auto* m : matches) msg << "\n  " << fairbook::match_key(*m);
            throw UsageError(msg.str());
        }
    }

    fairbook::FairnessRanking ranking;
    try {
        ranking = fairbook::rank_houses(*matches.front());
    } catch (const fairbook::AnalyticsError& e) {
        throw DataError(e.what());
    }

    fairbook::Table table;
    table.columns = {"rank", "house", "overround", "sum"};
    for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
        const auto& [house_id, ovr] = ranking.entries[i];
        table.rows.push_back({std::to_string(i + 1), house_id, ovr, 1.0 + ovr});
    }
    std::cout << "# " << ranking.match_key << '\n';
    std::vector<std::string> outputs;
    emit(table, format, out_path, outputs);
    write_manifest(manifest_path, "compare", input, {}, outputs);
    return kExitOk;
}

int run_summarize(const std::string& input, double tol,
                  const std::string& format, const std::string& out_path,
                  const std::string& manifest_path) {
    if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
    auto season = load_season(input);

    fairbook::Table table;
    table.columns = {"stat"};
    std::vector<fairbook::SummaryStats> stats;
    for (const auto& house : known_houses()) {
        auto margins =
            fairbook::solve_season(season.records, house, {.tol = tol});
        if (margins.estimates.empty()) continue;
        table.columns.push_back(house);
        stats.push_back(fairbook::summarize_margins(margins.estimates));
    }
    if (stats.empty()) throw DataError("no estimates for any house");

    auto add_row = [&](const std::string& name, auto getter) {
        std::vector<fairbook::Table::Cell> row{name};
        for (const auto& s : stats) row.push_back(getter(s));
        table.rows.push_back(std::move(row));
    };
    add_row("Mean", [](const auto& s) { return s.mean; });
    add_row("Median", [](const auto& s) { return s.median; });
    add_row("Maximum", [](const auto& s) { return s.maximum; });
    add_row("Minimum", [](const auto& s) { return s.minimum; });
    add_row("Sd", [](const auto& s) { return s.sd; });
    add_row("Count", [](const auto& s) { return static_cast<double>(s.count); });

    std::vector<std::string> outputs;
    emit(table, format, out_path, outputs);
    write_manifest(manifest_path, "summarize", input,
                   {{"tol", std::to_string(tol)}}, outputs);
    return kExitOk;
}

int run_hist(const std::string& input, double bin_width, double tol,
             const std::string& out_base, const std::string& manifest_path) {
    if (!(bin_width > 0.0)) throw UsageError("bin width must be positive");
    if (!(tol > 0.0)) throw UsageError("tolerance must be positive");
    auto season = load_season(input);

    std::map<std::string, std::vector<fairbook::MarginEstimate>> by_house;
    std::size_t total = 0;
    for (const auto& house : known_houses()) {
        auto margins =
            fairbook::solve_season(season.records, house, {.tol = tol});
        total += margins.estimates.size();
        by_house.emplace(house, std::move(margins.estimates));
    }
    if (total == 0) throw DataError("no estimates: nothing to histogram");

    auto hist = fairbook::margin_histogram(by_house, bin_width);

    fairbook::Table table;
    table.columns = {"bin_low", "bin_high"};
    for (const auto& [house, counts] : hist.counts) table.columns.push_back(house);
    for (std::size_t i = 0; i + 1 < hist.bin_edges.size(); ++i) {
        std::vector<fairbook::Table::Cell> row{hist.bin_edges[i],
                                               hist.bin_edges[i + 1]};
        for (const auto& [house, counts] : hist.counts) {
            row.push_back(static_cast<double>(counts[i]));
        }
        table.rows.push_back(std::move(row));
    }

    std::vector<std::string> outputs;
    if (out_base.empty()) {
        std::cout << fairbook::render_csv(table);
    } else {
        std::string csv_path = out_base + ".csv";
        std::string svg_path = out_base + ".svg";
        std::ofstream csv(csv_path);
        if (!csv) throw DataError("cannot write " + csv_path);
        csv << fairbook::render_csv(table);
        std::ofstream svg(svg_path);
        if (!svg) throw DataError("cannot write " + svg_path);
        fairbook::write_histogram_svg(hist, svg);
        outputs = {csv_path, svg_path};
    }
    write_manifest(manifest_path, "hist", input,
                   {{"bins", std::to_string(bin_width)}}, outputs);
    return kExitOk;
}

int run_simulate(double p, double epsilon, std::uint64_t trials,
                 std::uint64_t seed, const std::string& format,
                 const std::string& out_path, const std::string& manifest_path) {
    if (trials == 0) throw UsageError("trials must be at least 1");

    fairbook::TwoOutcomeScheme scheme = [&] {
        try {
            return fairbook::house_scheme(fairbook::Probability(p), epsilon);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
    }();
    auto [house, player] =
        fairbook::simulate_player_vs_house({trials, seed, scheme});

    double expected = fairbook::expected_revenue(scheme);
    double variance = fairbook::revenue_variance(scheme);

    fairbook::Table table;
    table.columns = {"quantity", "simulated", "closed_form"};
    table.rows = {
        {std::string("house_mean"), house.sample_mean, expected},
        {std::string("house_variance"), house.sample_variance, variance},
        {std::string("player_mean"), player.sample_mean, -expected},
        {std::string("standard_error"), house.standard_error,
         std::sqrt(variance / static_cast<double>(trials))},
    };
    std::cout << "# trials=" << trials << " seed=" << seed << " p=" << p
              << " epsilon=" << epsilon << '\n';
    std::vector<std::string> outputs;
    emit(table, format, out_path, outputs, 6);
    write_manifest(manifest_path, "simulate", "",
                   {{"p", std::to_string(p)},
                    {"epsilon", std::to_string(epsilon)},
                    {"trials", std::to_string(trials)},
                    {"seed", std::to_string(seed)}},
                   outputs);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bookmaker-odds analysis: implied probabilities, overrounds, "
                 "imputed house margins, and Monte Carlo checks"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string input, house, format = "text", out_path, manifest_path;
    std::string date, home, away;
    double tol = 1e-10, bin_width = 0.01, p = 0.5, epsilon = 0.0;
    std::uint64_t trials = 1000000, seed = 0;
    std::optional<std::size_t> row;
    bool paper_rounding = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) {
            cmd->add_option("--input", input, "input fixtures CSV")->required();
        }
        cmd->add_option("--out", out_path, "output path (default: stdout)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "text"}));
        cmd->add_option("--manifest", manifest_path, "write a run manifest JSON");
    };

    auto* cmd_overround = app.add_subcommand(
        "overround", "implied probabilities and overround per match");
    add_common(cmd_overround, true);
    cmd_overround->add_option("--house", house, "restrict to one house");

    auto* cmd_impute = app.add_subcommand(
        "impute", "solve the additive margin per match");
    add_common(cmd_impute, true);
    cmd_impute->add_option("--house", house, "restrict to one house");
    cmd_impute->add_option("--tol", tol, "residual tolerance");
    cmd_impute->add_flag("--paper-rounding", paper_rounding,
                         "round implied probabilities to 2 dp before solving");

    auto* cmd_compare = app.add_subcommand(
        "compare", "rank houses by overround for one match");
    add_common(cmd_compare, true);
    std::size_t row_value = 0;
    auto* row_opt = cmd_compare->add_option("--row", row_value,
                                            "1-based record index");
    cmd_compare->add_option("--date", date, "match date (YYYY-MM-DD)");
    cmd_compare->add_option("--home", home, "home team name");
    cmd_compare->add_option("--away", away, "away team name");

    auto* cmd_summarize = app.add_subcommand(
        "summarize", "per-house margin summary over the season");
    add_common(cmd_summarize, true);
    cmd_summarize->add_option("--tol", tol, "residual tolerance");

    auto* cmd_hist = app.add_subcommand(
        "hist", "margin histogram data and SVG per house");
    add_common(cmd_hist, true);
    cmd_hist->add_option("--bins", bin_width, "bin width");
    cmd_hist->add_option("--tol", tol, "residual tolerance");

    auto* cmd_simulate = app.add_subcommand(
        "simulate", "Monte Carlo check of the revenue identities");
    add_common(cmd_simulate, false);
    cmd_simulate->add_option("--p", p, "win probability")->required();
    cmd_simulate->add_option("--epsilon", epsilon, "house margin");
    cmd_simulate->add_option("--trials", trials, "number of trials");
    cmd_simulate->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsageError;
    }

    if (row_opt->count() > 0) row = row_value;

    try {
        if (cmd_overround->parsed()) {
            return run_overround(input, house, format, out_path, manifest_path);
        }
        if (cmd_impute->parsed()) {
            return run_impute(input, house, tol, paper_rounding, format,
                              out_path, manifest_path);
        }
        if (cmd_compare->parsed()) {
            return run_compare(input, row, date, home, away, format, out_path,
                               manifest_path);
        }
        if (cmd_summarize->parsed()) {
            return run_summarize(input, tol, format, out_path, manifest_path);
        }
        if (cmd_hist->parsed()) {
            return run_hist(input, bin_width, tol, out_path, manifest_path);
        }
        if (cmd_simulate->parsed()) {
            return run_simulate(p, epsilon, trials, seed, format, out_path,
                                manifest_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDataError;
    }
    return kExitUsageError;
}
