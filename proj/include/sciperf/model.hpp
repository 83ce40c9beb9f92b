#pragma once
// Core domain model: committees, publication and researcher records, and the
// corpus container shared by every other component. A finalized Corpus is
// immutable by convention and safe to share across threads.

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sciperf {

// Input files that cannot be read or parsed (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input, invalid request: unknown ids, bad parameters,
// unsatisfiable preconditions (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The nine scientific committees of the section, in canonical report order.
enum class Committee {
    geochemistry,
    geodesy,
    geology,
    geophysics,
    meteorology,
    mining,
    palaeontology,
    physical_geography,
    social_geography,
};

inline constexpr std::size_t kCommitteeCount = 9;

constexpr std::array<Committee, kCommitteeCount> all_committees() {
    return {Committee::geochemistry,      Committee::geodesy,
            Committee::geology,           Committee::geophysics,
            Committee::meteorology,       Committee::mining,
            Committee::palaeontology,     Committee::physical_geography,
            Committee::social_geography};
}

inline std::string_view to_string(Committee c) {
    static constexpr std::array<std::string_view, kCommitteeCount> names = {
        "geochemistry", "geodesy",       "geology",
        "geophysics",   "meteorology",   "mining",
        "palaeontology", "physical_geography", "social_geography"};
    return names[static_cast<std::size_t>(c)];
}

inline std::optional<Committee> committee_from_string(std::string_view s) {
    for (Committee c : all_committees()) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

enum class DocType { journal_article, book, book_chapter, conference, other };

inline std::string_view to_string(DocType t) {
    static constexpr std::array<std::string_view, 5> names = {
        "journal_article", "book", "book_chapter", "conference", "other"};
    return names[static_cast<std::size_t>(t)];
}

inline std::optional<DocType> doc_type_from_string(std::string_view s) {
    for (auto t : {DocType::journal_article, DocType::book, DocType::book_chapter,
                   DocType::conference, DocType::other}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

enum class Language { hungarian, foreign };

inline std::string_view to_string(Language l) {
    return l == Language::hungarian ? "hungarian" : "foreign";
}

inline std::optional<Language> language_from_string(std::string_view s) {
    if (s == "hungarian") return Language::hungarian;
    if (s == "foreign") return Language::foreign;
    return std::nullopt;
}

// One byline slot: a corpus member (token "m:<researcher_id>") or an external
// co-author (token "x:<label>"). Externals occupy positions and count toward
// author_count but never receive credit.
struct AuthorRef {
    bool is_member = false;
    std::string id;  // researcher id for members, display label for externals

    static std::optional<AuthorRef> parse(std::string_view token) {
        if (token.size() < 3) return std::nullopt;
        if (token.substr(0, 2) == "m:") return AuthorRef{true, std::string(token.substr(2))};
        if (token.substr(0, 2) == "x:") return AuthorRef{false, std::string(token.substr(2))};
        return std::nullopt;
    }

    std::string to_token() const { return (is_member ? "m:" : "x:") + id; }

    bool operator==(const AuthorRef&) const = default;
};

// Entries in `authors` occupy byline positions 1..authors.size(); for
// hyperauthor records author_count may exceed the listed prefix.
struct PublicationRecord {
    std::string pub_id;
    int year = 0;
    std::vector<AuthorRef> authors;
    int author_count = 0;
    DocType doc_type = DocType::other;
    Language language = Language::hungarian;
    bool wos_indexed = false;
    bool scopus_indexed = false;
    std::optional<double> impact_factor;
    int independent_citations = 0;
    int wos_citations = 0;

    bool operator==(const PublicationRecord&) const = default;

    // 1-based byline position of the first matching member entry.
    std::optional<int> member_position(std::string_view researcher_id) const {
        for (std::size_t i = 0; i < authors.size(); ++i) {
            if (authors[i].is_member && authors[i].id == researcher_id)
                return static_cast<int>(i + 1);
        }
        return std::nullopt;
    }
};

struct ResearcherProfile {
    std::string researcher_id;
    std::string name;
    Committee committee = Committee::geochemistry;
    std::optional<int> degree_year;

    bool operator==(const ResearcherProfile&) const = default;
};

struct YearWindow {
    int start = 2011;
    int end = 2020;

    bool contains(int year) const { return start <= year && year <= end; }
    bool operator==(const YearWindow&) const = default;
};

// A loaded, deduplicated, windowed corpus. finalize() establishes the
// canonical order (researchers by id, publications by pub_id) and rebuilds
// the lookup indexes; call it after constructing a Corpus by hand.
struct Corpus {
    YearWindow window;
    std::vector<ResearcherProfile> researchers;
    std::vector<PublicationRecord> publications;

    std::unordered_map<std::string, std::size_t> researcher_index;
    std::unordered_map<std::string, std::vector<std::size_t>> pubs_by_member;

    void finalize() {
        std::sort(researchers.begin(), researchers.end(),
                  [](const auto& a, const auto& b) { return a.researcher_id < b.researcher_id; });
        std::sort(publications.begin(), publications.end(),
                  [](const auto& a, const auto& b) { return a.pub_id < b.pub_id; });
        researcher_index.clear();
        pubs_by_member.clear();
        for (std::size_t i = 0; i < researchers.size(); ++i)
            researcher_index.emplace(researchers[i].researcher_id, i);
        for (std::size_t i = 0; i < publications.size(); ++i) {
            std::unordered_set<std::string> seen;
            for (const AuthorRef& a : publications[i].authors) {
                if (!a.is_member || !researcher_index.count(a.id)) continue;
                if (seen.insert(a.id).second) pubs_by_member[a.id].push_back(i);
            }
        }
    }

    const ResearcherProfile* find_researcher(std::string_view id) const {
        auto it = researcher_index.find(std::string(id));
        return it == researcher_index.end() ? nullptr : &researchers[it->second];
    }

    // Indices into `publications`, ascending (hence sorted by pub_id).
    const std::vector<std::size_t>& publication_indices_of(std::string_view id) const {
        static const std::vector<std::size_t> empty;
        auto it = pubs_by_member.find(std::string(id));
        return it == pubs_by_member.end() ? empty : it->second;
    }

    bool operator==(const Corpus& other) const {
        return window == other.window && researchers == other.researchers &&
               publications == other.publications;
    }
};

}  // namespace sciperf
