// sciperf: command-line pipeline over the corpus -> indicators -> analytics
// stack. Subcommands: validate, stats, rank, score, eligibility, project.
//
// Exit codes: 0 success, 1 domain failure (unknown id, fatal corpus
// violations, unsatisfiable preconditions), 2 input or I/O failure.
// Every flag has an SCIPERF_* environment-variable mirror; flags win.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sciperf/analytics.hpp"
#include "sciperf/crediting.hpp"
#include "sciperf/indicators.hpp"
#include "sciperf/ingest.hpp"
#include "sciperf/model.hpp"
#include "sciperf/report.hpp"

namespace fs = std::filesystem;
using namespace sciperf;

namespace {

struct RunConfig {
    std::string researchers_path;
    std::string publications_path;
    std::string window_spec = "2011:2020";
    std::string scheme_spec;  // empty -> per-command default
    std::string rule_set_spec = "proposed";
    double quantile = 0.25;
    std::string format = "csv";
    std::string out_dir = ".";
    std::string researcher_id;
    double minimum = 0.0;
    double rate = 0.0;
};

YearWindow parse_window(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("window '" + spec + "' must look like START:END, e.g. 2011:2020");
    try {
        YearWindow window{std::stoi(spec.substr(0, colon)), std::stoi(spec.substr(colon + 1))};
        if (window.start > window.end)
            throw ParseError("window '" + spec + "' has start after end");
        return window;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("window '" + spec + "' must contain two integers");
    }
}

std::vector<CountingScheme> parse_schemes(const std::string& spec, bool allow_both,
                                          CountingScheme fallback) {
    if (spec.empty()) {
        if (allow_both) return {CountingScheme::integer, CountingScheme::fractional};
        return {fallback};
    }
    if (spec == "both") {
        if (!allow_both) throw ParseError("--scheme both is not valid for this command");
        return {CountingScheme::integer, CountingScheme::fractional};
    }
    auto scheme = scheme_from_string(spec);
    if (!scheme) throw ParseError("unknown counting scheme '" + spec + "'");
    return {*scheme};
}

fs::path executable_dir(const char* argv0) {
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (ec) exe = fs::absolute(argv0, ec);
    return exe.parent_path();
}

// Bundled rule sets are plain data files looked up near the executable (or
// under $SCIPERF_DATA_DIR), so recalibrated minima need no rebuild.
RuleSet resolve_rule_set(const std::string& spec, const fs::path& exe_dir) {
    if (fs::exists(spec)) return load_rule_set(spec);
    const bool looks_like_path =
        spec.find('/') != std::string::npos || spec.ends_with(".json");
    if (looks_like_path) throw ParseError("rule set file '" + spec + "' not found");

    std::vector<fs::path> dirs;
    if (const char* env = std::getenv("SCIPERF_DATA_DIR")) dirs.push_back(fs::path(env) / "rulesets");
    dirs.push_back(exe_dir / "data" / "rulesets");
    dirs.push_back(exe_dir / ".." / "data" / "rulesets");
    dirs.push_back(exe_dir / ".." / "share" / "sciperf" / "rulesets");
    for (const auto& dir : dirs) {
        const fs::path candidate = dir / (spec + ".json");
        if (fs::exists(candidate)) return load_rule_set(candidate.string());
    }

    std::string known;
    for (const auto& name : bundled_rule_set_names()) known += " " + name;
    throw ParseError("unknown rule set '" + spec + "'; bundled names:" + known);
}

void write_file(const fs::path& out_dir, const std::string& name, const std::string& content) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    const fs::path path = out_dir / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
}

template <typename Writer>
std::string render_csv(Writer&& writer) {
    std::ostringstream os;
    writer(os);
    return os.str();
}

Corpus load_checked(const RunConfig& cfg, bool enforce_invariants) {
    if (cfg.researchers_path.empty() || cfg.publications_path.empty())
        throw ParseError("--researchers and --publications are required");
    LoadResult loaded =
        load_corpus(cfg.researchers_path, cfg.publications_path, parse_window(cfg.window_spec));
    if (enforce_invariants) {
        ValidationReport report = validate_corpus(loaded.corpus);
        if (report.has_fatal()) {
            for (const Violation& v : report.entries)
                if (v.severity == Severity::error) std::cerr << "fatal: " << v.message << "\n";
            throw DomainError("corpus fails validation; run 'sciperf validate' for the report");
        }
    }
    return std::move(loaded.corpus);
}

int run_validate(const RunConfig& cfg) {
    if (cfg.researchers_path.empty() || cfg.publications_path.empty())
        throw ParseError("--researchers and --publications are required");
    LoadResult loaded =
        load_corpus(cfg.researchers_path, cfg.publications_path, parse_window(cfg.window_spec));
    ValidationReport report = validate_corpus(loaded.corpus);
    report.entries.insert(report.entries.begin(), loaded.warnings.begin(),
                          loaded.warnings.end());

    write_file(cfg.out_dir, "validation_report.json",
               dump_json(validation_report_to_json(report)));

    std::size_t errors = 0;
    std::size_t warnings = 0;
    for (const Violation& v : report.entries)
        (v.severity == Severity::error ? errors : warnings)++;
    std::cout << "validation: " << errors << " error(s), " << warnings << " warning(s); report: "
              << (fs::path(cfg.out_dir) / "validation_report.json").string() << "\n";
    return report.has_fatal() ? 1 : 0;
}

int run_stats(const RunConfig& cfg) {
    const Corpus corpus = load_checked(cfg, true);
    const CoauthorshipDistribution dist = coauthorship_distribution(corpus);
    const auto summary = committee_summary(corpus);

    if (cfg.format == "csv") {
        write_file(cfg.out_dir, "coauthorship_distribution.csv",
                   render_csv([&](std::ostream& os) { write_coauthorship_csv(os, dist); }));
        write_file(cfg.out_dir, "committee_summary.csv",
                   render_csv([&](std::ostream& os) { write_summary_csv(os, summary); }));
    } else if (cfg.format == "json") {
        write_file(cfg.out_dir, "coauthorship_distribution.json",
                   dump_json(coauthorship_to_json(dist)));
        write_file(cfg.out_dir, "committee_summary.json", dump_json(summary_to_json(summary)));
    } else if (cfg.format == "plotdata") {
        write_file(cfg.out_dir, "stats_plotdata.csv", render_csv([&](std::ostream& os) {
                       write_stats_plotdata_csv(os, dist, summary);
                   }));
    } else {
        throw ParseError("unknown format '" + cfg.format + "'");
    }
    return 0;
}

int run_rank(const RunConfig& cfg, const fs::path& exe_dir) {
    const Corpus corpus = load_checked(cfg, true);
    const RuleSet rule_set = resolve_rule_set(cfg.rule_set_spec, exe_dir);
    const auto scoring = default_scoring_kinds();
    const auto schemes = parse_schemes(cfg.scheme_spec, true, CountingScheme::integer);

    std::vector<std::pair<std::string, CompositionReport>> compositions;
    std::vector<std::pair<std::string, ShareReport>> shares;

    for (CountingScheme scheme : schemes) {
        const std::string tag(to_string(scheme));
        const Ranking ranking = rank_researchers(corpus, scheme, scoring, rule_set);
        const auto group = select_top_quantile(ranking, cfg.quantile);
        const CompositionReport comp = composition(group);
        const ShareReport share = committee_share_of_top(group, corpus);
        for (Committee c : share.empty_committees)
            std::cerr << "warning: committee '" << to_string(c)
                      << "' has no members; omitted from the share report\n";

        if (cfg.format == "csv") {
            write_file(cfg.out_dir, "ranking_" + tag + ".csv", render_csv([&](std::ostream& os) {
                           write_ranking_csv(os, ranking.entries);
                       }));
            write_file(cfg.out_dir, "top_group_" + tag + ".csv",
                       render_csv([&](std::ostream& os) { write_ranking_csv(os, group); }));
            write_file(cfg.out_dir, "composition_" + tag + ".csv",
                       render_csv([&](std::ostream& os) { write_composition_csv(os, comp); }));
            write_file(cfg.out_dir, "committee_share_" + tag + ".csv",
                       render_csv([&](std::ostream& os) { write_share_csv(os, share); }));
        } else if (cfg.format == "json") {
            write_file(cfg.out_dir, "ranking_" + tag + ".json",
                       dump_json(ranking_to_json(ranking.entries)));
            write_file(cfg.out_dir, "top_group_" + tag + ".json",
                       dump_json(ranking_to_json(group)));
            write_file(cfg.out_dir, "composition_" + tag + ".json",
                       dump_json(composition_to_json(comp)));
            write_file(cfg.out_dir, "committee_share_" + tag + ".json",
                       dump_json(share_to_json(share)));
        } else if (cfg.format != "plotdata") {
            throw ParseError("unknown format '" + cfg.format + "'");
        }
        compositions.emplace_back(tag, comp);
        shares.emplace_back(tag, share);
    }

    if (cfg.format == "plotdata") {
        write_file(cfg.out_dir, "rank_plotdata.csv", render_csv([&](std::ostream& os) {
                       write_rank_plotdata_csv(os, compositions, shares);
                   }));
    }

    if (schemes.size() == 2) {
        const auto delta = top_group_delta(compositions[0].second, compositions[1].second);
        if (cfg.format == "json")
            write_file(cfg.out_dir, "delta_top_group.json", dump_json(delta_to_json(delta)));
        else
            write_file(cfg.out_dir, "delta_top_group.csv",
                       render_csv([&](std::ostream& os) { write_delta_csv(os, delta); }));
    }
    return 0;
}

int run_score(const RunConfig& cfg, const fs::path& exe_dir) {
    if (cfg.format == "plotdata")
        throw ParseError("--format plotdata is not supported by 'score'");
    const Corpus corpus = load_checked(cfg, true);
    const RuleSet rule_set = resolve_rule_set(cfg.rule_set_spec, exe_dir);
    const auto scoring = default_scoring_kinds();

    for (CountingScheme scheme : parse_schemes(cfg.scheme_spec, true, CountingScheme::integer)) {
        std::vector<ScoreCard> cards;
        cards.reserve(corpus.researchers.size());
        for (const ResearcherProfile& r : corpus.researchers)
            cards.push_back(score_researcher(r, corpus, scheme, scoring, rule_set));
        const std::string tag(to_string(scheme));
        if (cfg.format == "csv")
            write_file(cfg.out_dir, "scorecards_" + tag + ".csv",
                       render_csv([&](std::ostream& os) {
                           write_scorecards_csv(os, cards, scoring, corpus);
                       }));
        else if (cfg.format == "json")
            write_file(cfg.out_dir, "scorecards_" + tag + ".json",
                       dump_json(scorecards_to_json(cards, scoring, corpus)));
        else
            throw ParseError("unknown format '" + cfg.format + "'");
    }
    return 0;
}

int run_eligibility(const RunConfig& cfg, const fs::path& exe_dir) {
    if (cfg.format == "plotdata")
        throw ParseError("--format plotdata is not supported by 'eligibility'");
    const Corpus corpus = load_checked(cfg, false);
    const ResearcherProfile* researcher = corpus.find_researcher(cfg.researcher_id);
    if (!researcher) throw DomainError("unknown researcher '" + cfg.researcher_id + "'");

    const RuleSet rule_set = resolve_rule_set(cfg.rule_set_spec, exe_dir);
    const auto schemes = parse_schemes(cfg.scheme_spec, false, CountingScheme::integer);
    const EligibilityReport report =
        check_eligibility(*researcher, corpus, rule_set, schemes.front());

    const std::string stem = "eligibility_" + report.researcher_id;
    if (cfg.format == "csv")
        write_file(cfg.out_dir, stem + ".csv",
                   render_csv([&](std::ostream& os) { write_eligibility_csv(os, report); }));
    else if (cfg.format == "json")
        write_file(cfg.out_dir, stem + ".json", dump_json(eligibility_to_json(report)));
    else
        throw ParseError("unknown format '" + cfg.format + "'");

    if (report.eligible) {
        std::cout << "researcher " << report.researcher_id << ": eligible under rule set '"
                  << report.rule_set_name << "'\n";
    } else {
        std::cout << "researcher " << report.researcher_id << ": rejected under rule set '"
                  << report.rule_set_name << "' (failing:";
        for (const EligibilityCheck& check : report.checks)
            if (!check.passed) std::cout << ' ' << to_string(check.kind);
        std::cout << ")\n";
    }
    return 0;
}

int run_project(const RunConfig& cfg) {
    const double years = years_to_threshold(cfg.minimum, cfg.rate);
    std::printf("%.4f\n", years);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Research performance assessment pipeline: corpus validation, "
                 "counting-scheme scoring, rankings and committee statistics"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_corpus_flags = [&](CLI::App* cmd) {
        cmd->add_option("--researchers", cfg.researchers_path, "Researcher CSV file")
            ->envname("SCIPERF_RESEARCHERS");
        cmd->add_option("--publications", cfg.publications_path, "Publication JSON Lines file")
            ->envname("SCIPERF_PUBLICATIONS");
        cmd->add_option("--window", cfg.window_spec, "Corpus year window START:END")
            ->envname("SCIPERF_WINDOW")
            ->capture_default_str();
        cmd->add_option("--out", cfg.out_dir, "Output directory")
            ->envname("SCIPERF_OUT")
            ->capture_default_str();
    };
    auto add_format_flag = [&](CLI::App* cmd, bool with_plotdata) {
        auto values = with_plotdata ? std::vector<std::string>{"csv", "json", "plotdata"}
                                    : std::vector<std::string>{"csv", "json"};
        cmd->add_option("--format", cfg.format, "Report format")
            ->envname("SCIPERF_FORMAT")
            ->check(CLI::IsMember(values))
            ->capture_default_str();
    };
    auto add_scheme_flag = [&](CLI::App* cmd, const char* help) {
        cmd->add_option("--scheme", cfg.scheme_spec, help)->envname("SCIPERF_SCHEME");
    };
    auto add_rule_set_flag = [&](CLI::App* cmd) {
        cmd->add_option("--ruleset", cfg.rule_set_spec,
                        "Bundled rule set name or path to a rule set JSON file")
            ->envname("SCIPERF_RULESET")
            ->capture_default_str();
    };

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Load the corpus and write the validation report");
    add_corpus_flags(validate_cmd);

    CLI::App* stats_cmd = app.add_subcommand(
        "stats", "Co-authorship distribution and committee citation summaries");
    add_corpus_flags(stats_cmd);
    add_format_flag(stats_cmd, true);

    CLI::App* rank_cmd = app.add_subcommand(
        "rank", "Rankings, top-quantile groups, composition and share reports");
    add_corpus_flags(rank_cmd);
    add_format_flag(rank_cmd, true);
    add_scheme_flag(rank_cmd,
                    "integer|fractional|arithmetic|geometric|harmonic|first-author|both "
                    "(default: both)");
    add_rule_set_flag(rank_cmd);
    const CLI::Validator quantile_check(
        [](std::string& s) -> std::string {
            try {
                const double q = std::stod(s);
                if (q > 0.0 && q <= 1.0) return {};
            } catch (const std::exception&) {
            }
            return std::string("quantile must lie in (0, 1], got ") + s;
        },
        "FLOAT in (0,1]");
    rank_cmd->add_option("--quantile", cfg.quantile, "Top-group quantile")
        ->envname("SCIPERF_QUANTILE")
        ->check(quantile_check)
        ->capture_default_str();

    CLI::App* score_cmd =
        app.add_subcommand("score", "Per-researcher indicator score cards");
    add_corpus_flags(score_cmd);
    add_format_flag(score_cmd, false);
    add_scheme_flag(score_cmd, "Counting scheme or 'both' (default: both)");
    add_rule_set_flag(score_cmd);

    CLI::App* eligibility_cmd = app.add_subcommand(
        "eligibility", "Check one researcher against a rule set's minima");
    add_corpus_flags(eligibility_cmd);
    add_format_flag(eligibility_cmd, false);
    add_scheme_flag(eligibility_cmd, "Counting scheme (default: integer)");
    add_rule_set_flag(eligibility_cmd);
    eligibility_cmd->add_option("--researcher", cfg.researcher_id, "Researcher id")
        ->required();

    CLI::App* project_cmd = app.add_subcommand(
        "project", "Years needed to reach a minimum at a given annual rate");
    project_cmd->add_option("--minimum", cfg.minimum, "Indicator minimum value")
        ->required()
        ->check(CLI::NonNegativeNumber);
    project_cmd->add_option("--rate", cfg.rate, "Annual production rate")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const fs::path exe_dir = executable_dir(argv[0]);
    try {
        if (*validate_cmd) return run_validate(cfg);
        if (*stats_cmd) return run_stats(cfg);
        if (*rank_cmd) return run_rank(cfg, exe_dir);
        if (*score_cmd) return run_score(cfg, exe_dir);
        if (*eligibility_cmd) return run_eligibility(cfg, exe_dir);
        if (*project_cmd) return run_project(cfg);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
