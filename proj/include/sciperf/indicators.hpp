#pragma once
// Performance indicators: per-researcher indicator values under a counting
// scheme, conversion to points against a rule set's minima, and the
// all-indicators-must-pass eligibility check.
//
// Points are value / minimum, unrounded and uncapped, so overfulfilment
// multiples stay visible. The cumulative performance point is the arithmetic
// mean of the scoring points; the plain sum is reported alongside it.

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sciperf/crediting.hpp"
#include "sciperf/model.hpp"

namespace sciperf {

enum class IndicatorKind {
    total_pubs,
    first_author_pubs,
    pubs_since_degree,
    books_monographs,
    foreign_language_pubs,
    indexed_articles,
    indexed_articles_since_degree,
    independent_citations,
    indexed_citations,
    cumulative_impact_factor,
    h_index,
};

inline constexpr std::size_t kIndicatorCount = 11;

constexpr std::array<IndicatorKind, kIndicatorCount> all_indicator_kinds() {
    return {IndicatorKind::total_pubs,
            IndicatorKind::first_author_pubs,
            IndicatorKind::pubs_since_degree,
            IndicatorKind::books_monographs,
            IndicatorKind::foreign_language_pubs,
            IndicatorKind::indexed_articles,
            IndicatorKind::indexed_articles_since_degree,
            IndicatorKind::independent_citations,
            IndicatorKind::indexed_citations,
            IndicatorKind::cumulative_impact_factor,
            IndicatorKind::h_index};
}

inline std::string_view to_string(IndicatorKind k) {
    static constexpr std::array<std::string_view, kIndicatorCount> names = {
        "total_pubs",
        "first_author_pubs",
        "pubs_since_degree",
        "books_monographs",
        "foreign_language_pubs",
        "indexed_articles",
        "indexed_articles_since_degree",
        "independent_citations",
        "indexed_citations",
        "cumulative_impact_factor",
        "h_index"};
    return names[static_cast<std::size_t>(k)];
}

inline std::optional<IndicatorKind> indicator_from_string(std::string_view s) {
    for (IndicatorKind k : all_indicator_kinds())
        if (to_string(k) == s) return k;
    return std::nullopt;
}

// The four indicators the ranking pipeline scores by default.
inline std::vector<IndicatorKind> default_scoring_kinds() {
    return {IndicatorKind::total_pubs, IndicatorKind::indexed_articles,
            IndicatorKind::independent_citations, IndicatorKind::indexed_citations};
}

struct Requirement {
    IndicatorKind kind = IndicatorKind::total_pubs;
    double minimum = 0.0;

    bool operator==(const Requirement&) const = default;
};

// One named column of indicator minima.
struct RuleSet {
    std::string name;
    std::vector<Requirement> requirements;

    std::optional<double> minimum_for(IndicatorKind kind) const {
        for (const auto& req : requirements)
            if (req.kind == kind) return req.minimum;
        return std::nullopt;
    }
};

inline RuleSet rule_set_from_json(const nlohmann::json& obj, const std::string& context) {
    if (!obj.is_object() || !obj.contains("name") || !obj.contains("requirements"))
        throw ParseError(context + ": rule set needs 'name' and 'requirements'");
    RuleSet rs;
    rs.name = obj.at("name").get<std::string>();
    if (!obj.at("requirements").is_array())
        throw ParseError(context + ": 'requirements' must be an array");
    for (const auto& entry : obj.at("requirements")) {
        if (!entry.contains("kind") || !entry.contains("minimum"))
            throw ParseError(context + ": requirement needs 'kind' and 'minimum'");
        auto kind = indicator_from_string(entry.at("kind").get<std::string>());
        if (!kind)
            throw ParseError(context + ": unknown indicator kind '" +
                             entry.at("kind").get<std::string>() + "'");
        if (rs.minimum_for(*kind))
            throw ParseError(context + ": duplicate indicator kind '" +
                             std::string(to_string(*kind)) + "'");
        const double minimum = entry.at("minimum").get<double>();
        if (!(minimum > 0.0))
            throw ParseError(context + ": minimum for '" + std::string(to_string(*kind)) +
                             "' must be positive");
        rs.requirements.push_back({*kind, minimum});
    }
    return rs;
}

inline RuleSet load_rule_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open rule set file '" + path + "'");
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParseError(path + ": invalid JSON: " + err.what());
    }
    return rule_set_from_json(obj, path);
}

// The four rule sets shipped under data/rulesets/.
inline const std::vector<std::string>& bundled_rule_set_names() {
    static const std::vector<std::string> names = {
        "current-geo-hard", "current-geo-applied", "current-social-geography", "proposed"};
    return names;
}

// Largest h such that at least h items have at least h citations.
inline int h_index_of(std::vector<int> citations) {
    std::sort(citations.begin(), citations.end(), std::greater<int>());
    int h = 0;
    for (std::size_t i = 0; i < citations.size(); ++i) {
        if (citations[i] >= static_cast<int>(i + 1))
            h = static_cast<int>(i + 1);
        else
            break;
    }
    return h;
}

namespace detail {

inline bool needs_degree_year(IndicatorKind kind) {
    return kind == IndicatorKind::pubs_since_degree ||
           kind == IndicatorKind::indexed_articles_since_degree;
}

inline bool is_indexed_article(const PublicationRecord& pub) {
    return pub.doc_type == DocType::journal_article && pub.wos_indexed;
}

}  // namespace detail

// One researcher's value for one indicator. Count-like kinds sum the member's
// per-publication credit over the matching publications; citation kinds and
// the cumulative impact factor scale that credit by the publication's counts.
// The Hirsch index is scheme-independent by definition and always uses the
// plain per-publication citation counts.
inline double indicator_value(const ResearcherProfile& researcher, const Corpus& corpus,
                              IndicatorKind kind, CountingScheme scheme) {
    if (detail::needs_degree_year(kind) && !researcher.degree_year)
        throw DomainError("degree year required for indicator '" +
                          std::string(to_string(kind)) + "' of researcher '" +
                          researcher.researcher_id + "'");

    const auto& indices = corpus.publication_indices_of(researcher.researcher_id);

    if (kind == IndicatorKind::h_index) {
        std::vector<int> citations;
        citations.reserve(indices.size());
        for (std::size_t i : indices) citations.push_back(corpus.publications[i].independent_citations);
        return static_cast<double>(h_index_of(std::move(citations)));
    }

    double value = 0.0;
    for (std::size_t i : indices) {
        const PublicationRecord& pub = corpus.publications[i];
        switch (kind) {
            case IndicatorKind::total_pubs:
                value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::first_author_pubs:
                if (pub.member_position(researcher.researcher_id) == 1)
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::pubs_since_degree:
                if (pub.year >= *researcher.degree_year)
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::books_monographs:
                if (pub.doc_type == DocType::book)
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::foreign_language_pubs:
                if (pub.language == Language::foreign)
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::indexed_articles:
                if (detail::is_indexed_article(pub))
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::indexed_articles_since_degree:
                if (detail::is_indexed_article(pub) && pub.year >= *researcher.degree_year)
                    value += credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::independent_citations:
                value += static_cast<double>(pub.independent_citations) *
                         credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::indexed_citations:
                value += static_cast<double>(pub.wos_citations) *
                         credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::cumulative_impact_factor:
                if (pub.impact_factor)
                    value += *pub.impact_factor *
                             credit_for_member(scheme, pub, researcher.researcher_id);
                break;
            case IndicatorKind::h_index:
                break;  // handled above
        }
    }
    return value;
}

inline double indicator_points(double value, double minimum) {
    if (!(minimum > 0.0)) throw DomainError("indicator minimum must be positive");
    if (value < 0.0) throw DomainError("indicator value must be non-negative");
    return value / minimum;
}

struct ScoreCard {
    std::string researcher_id;
    CountingScheme scheme = CountingScheme::integer;
    std::map<IndicatorKind, double> values;
    std::map<IndicatorKind, double> points;
    double cumulative = 0.0;  // mean of the scoring points
    double total = 0.0;       // sum of the scoring points
};

inline ScoreCard score_researcher(const ResearcherProfile& researcher, const Corpus& corpus,
                                  CountingScheme scheme,
                                  const std::vector<IndicatorKind>& scoring_kinds,
                                  const RuleSet& rule_set) {
    if (scoring_kinds.empty()) throw DomainError("no scoring indicators given");
    ScoreCard card;
    card.researcher_id = researcher.researcher_id;
    card.scheme = scheme;
    double sum = 0.0;
    for (IndicatorKind kind : scoring_kinds) {
        auto minimum = rule_set.minimum_for(kind);
        if (!minimum)
            throw DomainError("rule set '" + rule_set.name + "' has no minimum for indicator '" +
                              std::string(to_string(kind)) + "'");
        const double value = indicator_value(researcher, corpus, kind, scheme);
        const double pts = indicator_points(value, *minimum);
        card.values[kind] = value;
        card.points[kind] = pts;
        sum += pts;
    }
    card.total = sum;
    card.cumulative = sum / static_cast<double>(scoring_kinds.size());
    return card;
}

struct EligibilityCheck {
    IndicatorKind kind = IndicatorKind::total_pubs;
    double value = 0.0;
    double minimum = 0.0;
    bool passed = false;
    double multiple = 0.0;  // value / minimum, the overfulfilment factor
};

struct EligibilityReport {
    std::string researcher_id;
    std::string rule_set_name;
    CountingScheme scheme = CountingScheme::integer;
    std::vector<EligibilityCheck> checks;
    bool eligible = false;
};

// Pass requires meeting or exceeding every minimum; one failing indicator
// rejects the whole application.
inline EligibilityReport check_eligibility(const ResearcherProfile& researcher,
                                           const Corpus& corpus, const RuleSet& rule_set,
                                           CountingScheme scheme = CountingScheme::integer) {
    EligibilityReport report;
    report.researcher_id = researcher.researcher_id;
    report.rule_set_name = rule_set.name;
    report.scheme = scheme;
    report.eligible = true;
    for (const Requirement& req : rule_set.requirements) {
        EligibilityCheck check;
        check.kind = req.kind;
        check.minimum = req.minimum;
        check.value = indicator_value(researcher, corpus, req.kind, scheme);
        check.passed = check.value >= req.minimum;
        check.multiple = indicator_points(check.value, req.minimum);
        report.eligible = report.eligible && check.passed;
        report.checks.push_back(check);
    }
    return report;
}

}  // namespace sciperf
