#pragma once
// Corpus-level analytics: cumulative-point rankings, top-quantile selection,
// group composition, per-committee top-group shares, co-authorship
// distributions, committee citation summaries and threshold-time projection.
//
// Everything here is deterministic: rankings break ties by descending
// total-publications value and then ascending researcher id, and all
// per-committee tables run in the canonical committee order.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sciperf/crediting.hpp"
#include "sciperf/indicators.hpp"
#include "sciperf/ingest.hpp"
#include "sciperf/model.hpp"

namespace sciperf {

struct RankingEntry {
    int rank = 0;  // 1-based, contiguous
    std::string researcher_id;
    Committee committee = Committee::geochemistry;
    double cumulative = 0.0;
    double total_pubs_value = 0.0;  // tie-break key under the same scheme
};

struct Ranking {
    CountingScheme scheme = CountingScheme::integer;
    std::vector<RankingEntry> entries;
};

inline Ranking rank_researchers(const Corpus& corpus, CountingScheme scheme,
                                const std::vector<IndicatorKind>& scoring_kinds,
                                const RuleSet& rule_set) {
    Ranking ranking;
    ranking.scheme = scheme;
    ranking.entries.reserve(corpus.researchers.size());
    for (const ResearcherProfile& r : corpus.researchers) {
        ScoreCard card = score_researcher(r, corpus, scheme, scoring_kinds, rule_set);
        RankingEntry entry;
        entry.researcher_id = r.researcher_id;
        entry.committee = r.committee;
        entry.cumulative = card.cumulative;
        auto it = card.values.find(IndicatorKind::total_pubs);
        entry.total_pubs_value = it != card.values.end()
                                     ? it->second
                                     : indicator_value(r, corpus, IndicatorKind::total_pubs, scheme);
        ranking.entries.push_back(std::move(entry));
    }
    std::sort(ranking.entries.begin(), ranking.entries.end(),
              [](const RankingEntry& a, const RankingEntry& b) {
                  if (a.cumulative != b.cumulative) return a.cumulative > b.cumulative;
                  if (a.total_pubs_value != b.total_pubs_value)
                      return a.total_pubs_value > b.total_pubs_value;
                  return a.researcher_id < b.researcher_id;
              });
    for (std::size_t i = 0; i < ranking.entries.size(); ++i)
        ranking.entries[i].rank = static_cast<int>(i + 1);
    return ranking;
}

// First ceil(q * N) entries; q = 0.25 over 683 entries selects 171.
inline std::vector<RankingEntry> select_top_quantile(const Ranking& ranking, double q) {
    if (!(q > 0.0) || q > 1.0) throw DomainError("quantile must lie in (0, 1]");
    const std::size_t n = ranking.entries.size();
    if (n == 0) return {};
    // The epsilon keeps exact products like 0.1 * 10 from ceiling upward.
    auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n) - 1e-9));
    k = std::min(n, std::max<std::size_t>(1, k));
    return {ranking.entries.begin(), ranking.entries.begin() + static_cast<std::ptrdiff_t>(k)};
}

struct CompositionRow {
    Committee committee = Committee::geochemistry;
    int count = 0;
    double percent = 0.0;  // 100 * count / group size
};

struct CompositionReport {
    std::size_t group_size = 0;
    std::array<CompositionRow, kCommitteeCount> rows;
};

inline CompositionReport composition(std::span<const RankingEntry> group) {
    CompositionReport report;
    report.group_size = group.size();
    for (std::size_t i = 0; i < kCommitteeCount; ++i)
        report.rows[i].committee = all_committees()[i];
    for (const RankingEntry& entry : group)
        ++report.rows[static_cast<std::size_t>(entry.committee)].count;
    for (auto& row : report.rows)
        row.percent = report.group_size
                          ? 100.0 * row.count / static_cast<double>(report.group_size)
                          : 0.0;
    return report;
}

struct ShareRow {
    Committee committee = Committee::geochemistry;
    int members_in_group = 0;
    int committee_size = 0;
    double percent = 0.0;  // 100 * members_in_group / committee_size
};

struct ShareReport {
    std::vector<ShareRow> rows;               // committees with members, canonical order
    std::vector<Committee> empty_committees;  // size 0, omitted from rows
};

inline ShareReport committee_share_of_top(std::span<const RankingEntry> group,
                                          const Corpus& corpus) {
    std::array<int, kCommitteeCount> sizes{};
    for (const ResearcherProfile& r : corpus.researchers)
        ++sizes[static_cast<std::size_t>(r.committee)];
    std::array<int, kCommitteeCount> in_group{};
    for (const RankingEntry& entry : group) ++in_group[static_cast<std::size_t>(entry.committee)];

    ShareReport report;
    for (std::size_t i = 0; i < kCommitteeCount; ++i) {
        if (sizes[i] == 0) {
            report.empty_committees.push_back(all_committees()[i]);
            continue;
        }
        report.rows.push_back({all_committees()[i], in_group[i], sizes[i],
                               100.0 * in_group[i] / static_cast<double>(sizes[i])});
    }
    return report;
}

struct SchemeDeltaRow {
    Committee committee = Committee::geochemistry;
    int integer_count = 0;
    int fractional_count = 0;
    int delta = 0;  // fractional - integer
};

inline std::vector<SchemeDeltaRow> top_group_delta(const CompositionReport& integer_side,
                                                   const CompositionReport& fractional_side) {
    std::vector<SchemeDeltaRow> rows;
    rows.reserve(kCommitteeCount);
    for (std::size_t i = 0; i < kCommitteeCount; ++i) {
        const int a = integer_side.rows[i].count;
        const int b = fractional_side.rows[i].count;
        rows.push_back({all_committees()[i], a, b, b - a});
    }
    return rows;
}

// Co-authorship bins: 1, 2, 3-5, 6-10, 11-20, 21-50, 51-100, 101-500, >=501.
inline constexpr std::size_t kCoauthorBinCount = 9;

inline const std::array<std::string_view, kCoauthorBinCount>& coauthor_bin_labels() {
    static constexpr std::array<std::string_view, kCoauthorBinCount> labels = {
        "authors_1",     "authors_2",      "authors_3_5",
        "authors_6_10",  "authors_11_20",  "authors_21_50",
        "authors_51_100", "authors_101_500", "authors_501_plus"};
    return labels;
}

inline std::size_t coauthor_bin(int author_count) {
    if (author_count <= 1) return 0;
    if (author_count == 2) return 1;
    if (author_count <= 5) return 2;
    if (author_count <= 10) return 3;
    if (author_count <= 20) return 4;
    if (author_count <= 50) return 5;
    if (author_count <= 100) return 6;
    if (author_count <= 500) return 7;
    return 8;
}

struct CoauthorshipDistribution {
    std::array<std::array<int, kCoauthorBinCount>, kCommitteeCount> counts{};
    std::array<std::array<double, kCoauthorBinCount>, kCommitteeCount> percents{};
    std::array<int, kCoauthorBinCount> overall_counts{};
    std::array<double, kCoauthorBinCount> overall_percents{};
    std::array<int, kCommitteeCount> committee_totals{};
    int total = 0;
};

inline CoauthorshipDistribution coauthorship_distribution(const Corpus& corpus) {
    CoauthorshipDistribution dist;
    for (const PublicationRecord& pub : corpus.publications) {
        const auto committee = static_cast<std::size_t>(committee_of_publication(pub, corpus));
        const std::size_t bin = coauthor_bin(pub.author_count);
        ++dist.counts[committee][bin];
        ++dist.overall_counts[bin];
        ++dist.committee_totals[committee];
        ++dist.total;
    }
    for (std::size_t c = 0; c < kCommitteeCount; ++c) {
        for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
            dist.percents[c][b] = dist.committee_totals[c]
                                      ? 100.0 * dist.counts[c][b] /
                                            static_cast<double>(dist.committee_totals[c])
                                      : 0.0;
    }
    for (std::size_t b = 0; b < kCoauthorBinCount; ++b)
        dist.overall_percents[b] =
            dist.total ? 100.0 * dist.overall_counts[b] / static_cast<double>(dist.total) : 0.0;
    return dist;
}

struct CommitteeSummaryRow {
    Committee committee = Committee::geochemistry;
    int publications = 0;
    double percent_wos_indexed = 0.0;
    double percent_uncited = 0.0;
    long long independent_citations = 0;
    std::optional<double> mean_citations_per_cited;  // null when nothing is cited
    long long wos_citations = 0;
    std::optional<double> mean_wos_citations_per_cited;  // same denominator
};

// A cited item is a publication with independent_citations greater than
// zero; both per-cited-item means divide by that count.
inline std::array<CommitteeSummaryRow, kCommitteeCount> committee_summary(const Corpus& corpus) {
    std::array<CommitteeSummaryRow, kCommitteeCount> rows;
    std::array<int, kCommitteeCount> wos_indexed{};
    std::array<int, kCommitteeCount> uncited{};
    for (std::size_t i = 0; i < kCommitteeCount; ++i) rows[i].committee = all_committees()[i];

    for (const PublicationRecord& pub : corpus.publications) {
        const auto c = static_cast<std::size_t>(committee_of_publication(pub, corpus));
        ++rows[c].publications;
        if (pub.wos_indexed) ++wos_indexed[c];
        if (pub.independent_citations == 0) ++uncited[c];
        rows[c].independent_citations += pub.independent_citations;
        rows[c].wos_citations += pub.wos_citations;
    }
    for (std::size_t c = 0; c < kCommitteeCount; ++c) {
        const int n = rows[c].publications;
        rows[c].percent_wos_indexed = n ? 100.0 * wos_indexed[c] / static_cast<double>(n) : 0.0;
        rows[c].percent_uncited = n ? 100.0 * uncited[c] / static_cast<double>(n) : 0.0;
        const int cited = n - uncited[c];
        if (cited > 0) {
            rows[c].mean_citations_per_cited =
                static_cast<double>(rows[c].independent_citations) / cited;
            rows[c].mean_wos_citations_per_cited =
                static_cast<double>(rows[c].wos_citations) / cited;
        }
    }
    return rows;
}

// Years of output at the given annual production rate needed to reach a
// rule-set minimum.
inline double years_to_threshold(double minimum, double annual_rate) {
    if (!(annual_rate > 0.0)) throw DomainError("annual rate must be positive");
    if (minimum < 0.0) throw DomainError("threshold minimum must be non-negative");
    return minimum / annual_rate;
}

}  // namespace sciperf
