#pragma once
// Report serialization. CSV is the canonical, byte-stable format: fixed
// column order, '\n' line endings, %.6f for ranking and score points, %.2f
// for percents and means (rounded only here, never upstream). JSON mirrors
// the same tables with the same rounding; plotdata emits tidy long-form
// (committee, series, value) rows for plotting tools.

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sciperf/analytics.hpp"
#include "sciperf/indicators.hpp"
#include "sciperf/ingest.hpp"

namespace sciperf {

inline std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

// Rounded double matching the CSV rendering, so JSON and CSV agree digit for
// digit (printf rounding, not std::round half-away).
inline double rounded(double value, int precision) {
    return std::strtod(format_fixed(value, precision).c_str(), nullptr);
}

inline void write_ranking_csv(std::ostream& os, std::span<const RankingEntry> entries) {
    os << "rank,researcher_id,committee,cumulative\n";
    for (const RankingEntry& e : entries)
        os << e.rank << ',' << e.researcher_id << ',' << to_string(e.committee) << ','
           << format_fixed(e.cumulative, 6) << '\n';
}

inline nlohmann::ordered_json ranking_to_json(std::span<const RankingEntry> entries) {
    auto arr = nlohmann::ordered_json::array();
    for (const RankingEntry& e : entries)
        arr.push_back({{"rank", e.rank},
                       {"researcher_id", e.researcher_id},
                       {"committee", to_string(e.committee)},
                       {"cumulative", rounded(e.cumulative, 6)}});
    return arr;
}

inline void write_composition_csv(std::ostream& os, const CompositionReport& report) {
    os << "committee,count,percent\n";
    for (const CompositionRow& row : report.rows)
        os << to_string(row.committee) << ',' << row.count << ','
           << format_fixed(row.percent, 2) << '\n';
}

inline nlohmann::ordered_json composition_to_json(const CompositionReport& report) {
    nlohmann::ordered_json obj;
    obj["group_size"] = report.group_size;
    auto arr = nlohmann::ordered_json::array();
    for (const CompositionRow& row : report.rows)
        arr.push_back({{"committee", to_string(row.committee)},
                       {"count", row.count},
                       {"percent", rounded(row.percent, 2)}});
    obj["composition"] = std::move(arr);
    return obj;
}

inline void write_share_csv(std::ostream& os, const ShareReport& report) {
    os << "committee,members_in_group,committee_size,percent\n";
    for (const ShareRow& row : report.rows)
        os << to_string(row.committee) << ',' << row.members_in_group << ','
           << row.committee_size << ',' << format_fixed(row.percent, 2) << '\n';
}

inline nlohmann::ordered_json share_to_json(const ShareReport& report) {
    auto arr = nlohmann::ordered_json::array();
    for (const ShareRow& row : report.rows)
        arr.push_back({{"committee", to_string(row.committee)},
                       {"members_in_group", row.members_in_group},
                       {"committee_size", row.committee_size},
                       {"percent", rounded(row.percent, 2)}});
    return arr;
}

inline void write_delta_csv(std::ostream& os, std::span<const SchemeDeltaRow> rows) {
    os << "committee,integer_count,fractional_count,delta\n";
    for (const SchemeDeltaRow& row : rows)
        os << to_string(row.committee) << ',' << row.integer_count << ','
           << row.fractional_count << ',' << row.delta << '\n';
}

inline nlohmann::ordered_json delta_to_json(std::span<const SchemeDeltaRow> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const SchemeDeltaRow& row : rows)
        arr.push_back({{"committee", to_string(row.committee)},
                       {"integer_count", row.integer_count},
                       {"fractional_count", row.fractional_count},
                       {"delta", row.delta}});
    return arr;
}

inline void write_coauthorship_csv(std::ostream& os, const CoauthorshipDistribution& dist) {
    os << "committee";
    for (auto label : coauthor_bin_labels()) os << ',' << label;
    os << '\n';
    for (std::size_t c = 0; c < kCommitteeCount; ++c) {
        os << to_string(all_committees()[c]);
        for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
            os << ',' << format_fixed(dist.percents[c][b], 2);
        os << '\n';
    }
    os << "overall";
    for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
        os << ',' << format_fixed(dist.overall_percents[b], 2);
    os << '\n';
}

inline nlohmann::ordered_json coauthorship_to_json(const CoauthorshipDistribution& dist) {
    auto row_json = [&](std::span<const double, kCoauthorBinCount> percents) {
        nlohmann::ordered_json row;
        for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
            row[std::string(coauthor_bin_labels()[b])] = rounded(percents[b], 2);
        return row;
    };
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < kCommitteeCount; ++c) {
        nlohmann::ordered_json row;
        row["committee"] = to_string(all_committees()[c]);
        row["percents"] = row_json(dist.percents[c]);
        arr.push_back(std::move(row));
    }
    nlohmann::ordered_json overall;
    overall["committee"] = "overall";
    overall["percents"] = row_json(dist.overall_percents);
    arr.push_back(std::move(overall));
    return arr;
}

inline void write_summary_csv(std::ostream& os,
                              std::span<const CommitteeSummaryRow, kCommitteeCount> rows) {
    os << "committee,publications,percent_wos_indexed,percent_uncited,"
          "independent_citations,mean_citations_per_cited,"
          "wos_citations,mean_wos_citations_per_cited\n";
    for (const CommitteeSummaryRow& row : rows) {
        os << to_string(row.committee) << ',' << row.publications << ','
           << format_fixed(row.percent_wos_indexed, 2) << ','
           << format_fixed(row.percent_uncited, 2) << ',' << row.independent_citations << ',';
        if (row.mean_citations_per_cited) os << format_fixed(*row.mean_citations_per_cited, 2);
        os << ',' << row.wos_citations << ',';
        if (row.mean_wos_citations_per_cited)
            os << format_fixed(*row.mean_wos_citations_per_cited, 2);
        os << '\n';
    }
}

inline nlohmann::ordered_json summary_to_json(
    std::span<const CommitteeSummaryRow, kCommitteeCount> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const CommitteeSummaryRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["committee"] = to_string(row.committee);
        obj["publications"] = row.publications;
        obj["percent_wos_indexed"] = rounded(row.percent_wos_indexed, 2);
        obj["percent_uncited"] = rounded(row.percent_uncited, 2);
        obj["independent_citations"] = row.independent_citations;
        obj["mean_citations_per_cited"] =
            row.mean_citations_per_cited
                ? nlohmann::ordered_json(rounded(*row.mean_citations_per_cited, 2))
                : nlohmann::ordered_json(nullptr);
        obj["wos_citations"] = row.wos_citations;
        obj["mean_wos_citations_per_cited"] =
            row.mean_wos_citations_per_cited
                ? nlohmann::ordered_json(rounded(*row.mean_wos_citations_per_cited, 2))
                : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(obj));
    }
    return arr;
}

inline void write_scorecards_csv(std::ostream& os, std::span<const ScoreCard> cards,
                                 const std::vector<IndicatorKind>& scoring_kinds,
                                 const Corpus& corpus) {
    os << "researcher_id,committee,scheme";
    for (IndicatorKind kind : scoring_kinds)
        os << ',' << to_string(kind) << "_value," << to_string(kind) << "_points";
    os << ",cumulative_points,total_points\n";
    for (const ScoreCard& card : cards) {
        const ResearcherProfile* r = corpus.find_researcher(card.researcher_id);
        os << card.researcher_id << ',' << (r ? to_string(r->committee) : "") << ','
           << to_string(card.scheme);
        for (IndicatorKind kind : scoring_kinds)
            os << ',' << format_fixed(card.values.at(kind), 6) << ','
               << format_fixed(card.points.at(kind), 6);
        os << ',' << format_fixed(card.cumulative, 6) << ',' << format_fixed(card.total, 6)
           << '\n';
    }
}

inline nlohmann::ordered_json scorecards_to_json(std::span<const ScoreCard> cards,
                                                 const std::vector<IndicatorKind>& scoring_kinds,
                                                 const Corpus& corpus) {
    auto arr = nlohmann::ordered_json::array();
    for (const ScoreCard& card : cards) {
        const ResearcherProfile* r = corpus.find_researcher(card.researcher_id);
        nlohmann::ordered_json obj;
        obj["researcher_id"] = card.researcher_id;
        obj["committee"] = r ? to_string(r->committee) : "";
        obj["scheme"] = to_string(card.scheme);
        nlohmann::ordered_json values;
        nlohmann::ordered_json points;
        for (IndicatorKind kind : scoring_kinds) {
            values[std::string(to_string(kind))] = rounded(card.values.at(kind), 6);
            points[std::string(to_string(kind))] = rounded(card.points.at(kind), 6);
        }
        obj["values"] = std::move(values);
        obj["points"] = std::move(points);
        obj["cumulative_points"] = rounded(card.cumulative, 6);
        obj["total_points"] = rounded(card.total, 6);
        arr.push_back(std::move(obj));
    }
    return arr;
}

inline void write_eligibility_csv(std::ostream& os, const EligibilityReport& report) {
    os << "researcher_id,kind,value,minimum,passed,multiple\n";
    for (const EligibilityCheck& check : report.checks)
        os << report.researcher_id << ',' << to_string(check.kind) << ','
           << format_fixed(check.value, 6) << ',' << format_fixed(check.minimum, 6) << ','
           << (check.passed ? "true" : "false") << ',' << format_fixed(check.multiple, 6)
           << '\n';
    os << report.researcher_id << ",overall,,," << (report.eligible ? "true" : "false")
       << ",\n";
}

inline nlohmann::ordered_json eligibility_to_json(const EligibilityReport& report) {
    nlohmann::ordered_json obj;
    obj["researcher_id"] = report.researcher_id;
    obj["rule_set"] = report.rule_set_name;
    obj["scheme"] = to_string(report.scheme);
    auto checks = nlohmann::ordered_json::array();
    for (const EligibilityCheck& check : report.checks)
        checks.push_back({{"kind", to_string(check.kind)},
                          {"value", rounded(check.value, 6)},
                          {"minimum", check.minimum},
                          {"passed", check.passed},
                          {"multiple", rounded(check.multiple, 6)}});
    obj["checks"] = std::move(checks);
    obj["eligible"] = report.eligible;
    return obj;
}

// Validation report schema: [{severity, code, pub_id|researcher_id, message}].
inline nlohmann::ordered_json validation_report_to_json(const ValidationReport& report) {
    auto arr = nlohmann::ordered_json::array();
    for (const Violation& v : report.entries) {
        nlohmann::ordered_json obj;
        obj["severity"] = to_string(v.severity);
        obj["code"] = v.code;
        if (!v.subject_field.empty()) obj[v.subject_field] = v.subject_id;
        obj["message"] = v.message;
        arr.push_back(std::move(obj));
    }
    return arr;
}

// Long-form rows for the ranking pipeline's two chart series: top-group
// composition per scheme and each committee's share of the top group.
inline void write_rank_plotdata_csv(std::ostream& os,
                                    std::span<const std::pair<std::string, CompositionReport>>
                                        compositions,
                                    std::span<const std::pair<std::string, ShareReport>> shares) {
    os << "committee,series,value\n";
    for (const auto& [scheme, report] : compositions)
        for (const CompositionRow& row : report.rows)
            os << to_string(row.committee) << ",composition_" << scheme << ','
               << format_fixed(row.percent, 2) << '\n';
    for (const auto& [scheme, report] : shares)
        for (const ShareRow& row : report.rows)
            os << to_string(row.committee) << ",share_" << scheme << ','
               << format_fixed(row.percent, 2) << '\n';
}

inline void write_stats_plotdata_csv(std::ostream& os, const CoauthorshipDistribution& dist,
                                     std::span<const CommitteeSummaryRow, kCommitteeCount> rows) {
    os << "committee,series,value\n";
    for (std::size_t c = 0; c < kCommitteeCount; ++c)
        for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
            os << to_string(all_committees()[c]) << ',' << coauthor_bin_labels()[b] << ','
               << format_fixed(dist.percents[c][b], 2) << '\n';
    for (const CommitteeSummaryRow& row : rows) {
        os << to_string(row.committee) << ",percent_wos_indexed,"
           << format_fixed(row.percent_wos_indexed, 2) << '\n';
        os << to_string(row.committee) << ",percent_uncited,"
           << format_fixed(row.percent_uncited, 2) << '\n';
    }
}

inline std::string dump_json(const nlohmann::ordered_json& value) { return value.dump(2) + "\n"; }

}  // namespace sciperf
