#pragma once
// Corpus ingestion: researcher CSV and publication JSON Lines parsing,
// duplicate merging, window filtering, invariant validation and canonical
// re-serialization.
//
// Duplicate publication lines (the same pub_id deposited through several
// researcher profiles) are merged onto the first-seen record: citation
// counters keep the per-field maximum, index flags are OR-ed, a missing
// impact factor is filled from later lines, and any other field mismatch is
// reported as a dedup_conflict warning while the first-seen value wins.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "sciperf/model.hpp"

namespace sciperf {

enum class Severity { warning, error };

inline std::string_view to_string(Severity s) {
    return s == Severity::warning ? "warning" : "error";
}

struct Violation {
    Severity severity = Severity::warning;
    std::string code;
    std::string subject_field;  // "pub_id", "researcher_id" or empty
    std::string subject_id;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> entries;

    bool has_fatal() const {
        for (const auto& v : entries)
            if (v.severity == Severity::error) return true;
        return false;
    }
};

struct LoadResult {
    Corpus corpus;
    std::vector<Violation> warnings;  // dedup conflicts noticed while merging
};

namespace detail {

// RFC-4180-style single-line field splitting (quoted fields, "" escapes).
inline std::vector<std::string> split_csv_line(const std::string& line,
                                               const std::string& context) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"' && current.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    if (quoted) throw ParseError(context + ": unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

inline std::string location(const std::string& file, std::size_t line) {
    return file + ":" + std::to_string(line);
}

inline std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

inline int require_int(const nlohmann::json& obj, const char* field, const std::string& ctx,
                       int min_value) {
    if (!obj.contains(field))
        throw ParseError(ctx + ": missing field '" + field + "'");
    const auto& v = obj.at(field);
    if (!v.is_number_integer())
        throw ParseError(ctx + ": field '" + field + "': expected integer");
    const long long raw = v.get<long long>();
    if (raw < min_value)
        throw ParseError(ctx + ": field '" + field + "': value " + std::to_string(raw) +
                         " below minimum " + std::to_string(min_value));
    return static_cast<int>(raw);
}

inline bool require_bool(const nlohmann::json& obj, const char* field, const std::string& ctx) {
    if (!obj.contains(field))
        throw ParseError(ctx + ": missing field '" + field + "'");
    if (!obj.at(field).is_boolean())
        throw ParseError(ctx + ": field '" + field + "': expected boolean");
    return obj.at(field).get<bool>();
}

inline std::string require_string(const nlohmann::json& obj, const char* field,
                                  const std::string& ctx) {
    if (!obj.contains(field))
        throw ParseError(ctx + ": missing field '" + field + "'");
    if (!obj.at(field).is_string())
        throw ParseError(ctx + ": field '" + field + "': expected string");
    return obj.at(field).get<std::string>();
}

inline PublicationRecord parse_publication_line(const nlohmann::json& obj,
                                                const std::string& ctx) {
    static const std::unordered_set<std::string> known = {
        "pub_id",      "year",          "authors",       "author_count",
        "doc_type",    "language",      "wos_indexed",   "scopus_indexed",
        "impact_factor", "independent_citations", "wos_citations"};
    for (const auto& item : obj.items()) {
        if (!known.count(item.key()))
            throw ParseError(ctx + ": unknown field '" + item.key() + "'");
    }

    PublicationRecord pub;
    pub.pub_id = require_string(obj, "pub_id", ctx);
    if (pub.pub_id.empty()) throw ParseError(ctx + ": field 'pub_id': must not be empty");
    pub.year = require_int(obj, "year", ctx, 0);
    // author_count 0 is loadable; validate_corpus reports it as fatal.
    pub.author_count = require_int(obj, "author_count", ctx, 0);

    if (!obj.contains("authors") || !obj.at("authors").is_array())
        throw ParseError(ctx + ": field 'authors': expected array of strings");
    std::unordered_set<std::string> member_seen;
    for (const auto& entry : obj.at("authors")) {
        if (!entry.is_string())
            throw ParseError(ctx + ": field 'authors': expected array of strings");
        auto ref = AuthorRef::parse(entry.get<std::string>());
        if (!ref)
            throw ParseError(ctx + ": field 'authors': entry '" + entry.get<std::string>() +
                             "' must be prefixed 'm:' or 'x:'");
        if (ref->is_member && !member_seen.insert(ref->id).second)
            throw ParseError(ctx + ": field 'authors': member '" + ref->id + "' listed twice");
        pub.authors.push_back(std::move(*ref));
    }

    const std::string doc_type = require_string(obj, "doc_type", ctx);
    auto dt = doc_type_from_string(doc_type);
    if (!dt) throw ParseError(ctx + ": field 'doc_type': unknown value '" + doc_type + "'");
    pub.doc_type = *dt;

    const std::string language = require_string(obj, "language", ctx);
    auto lang = language_from_string(language);
    if (!lang) throw ParseError(ctx + ": field 'language': unknown value '" + language + "'");
    pub.language = *lang;

    pub.wos_indexed = require_bool(obj, "wos_indexed", ctx);
    pub.scopus_indexed = require_bool(obj, "scopus_indexed", ctx);

    if (obj.contains("impact_factor") && !obj.at("impact_factor").is_null()) {
        const auto& v = obj.at("impact_factor");
        if (!v.is_number())
            throw ParseError(ctx + ": field 'impact_factor': expected number or null");
        const double f = v.get<double>();
        if (f < 0.0)
            throw ParseError(ctx + ": field 'impact_factor': must be non-negative");
        pub.impact_factor = f;
    }

    pub.independent_citations = require_int(obj, "independent_citations", ctx, 0);
    pub.wos_citations = require_int(obj, "wos_citations", ctx, 0);
    return pub;
}

inline void merge_duplicate(PublicationRecord& base, const PublicationRecord& dup,
                            std::vector<Violation>& warnings) {
    auto conflict = [&](const char* field) {
        warnings.push_back({Severity::warning, "dedup_conflict", "pub_id", base.pub_id,
                            "duplicate records for '" + base.pub_id + "' disagree on field '" +
                                field + "'; keeping the first-seen value"});
    };
    if (base.year != dup.year) conflict("year");
    if (base.authors != dup.authors) conflict("authors");
    if (base.author_count != dup.author_count) conflict("author_count");
    if (base.doc_type != dup.doc_type) conflict("doc_type");
    if (base.language != dup.language) conflict("language");
    if (base.impact_factor && dup.impact_factor &&
        *base.impact_factor != *dup.impact_factor)
        conflict("impact_factor");

    base.independent_citations = std::max(base.independent_citations, dup.independent_citations);
    base.wos_citations = std::max(base.wos_citations, dup.wos_citations);
    base.wos_indexed = base.wos_indexed || dup.wos_indexed;
    base.scopus_indexed = base.scopus_indexed || dup.scopus_indexed;
    if (!base.impact_factor) base.impact_factor = dup.impact_factor;
}

}  // namespace detail

inline std::vector<ResearcherProfile> load_researchers(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open researcher file '" + path + "'");

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError(path + ": empty file, expected header");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "researcher_id,name,committee,degree_year")
        throw ParseError(path + ":1: expected header 'researcher_id,name,committee,degree_year'");

    std::vector<ResearcherProfile> researchers;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string ctx = detail::location(path, line_no);
        auto fields = detail::split_csv_line(line, ctx);
        if (fields.size() != 4)
            throw ParseError(ctx + ": expected 4 fields, got " + std::to_string(fields.size()));

        ResearcherProfile r;
        r.researcher_id = fields[0];
        if (r.researcher_id.empty())
            throw ParseError(ctx + ": field 'researcher_id': must not be empty");
        if (!seen.insert(r.researcher_id).second)
            throw ParseError(ctx + ": field 'researcher_id': duplicate id '" + r.researcher_id + "'");
        r.name = fields[1];
        auto committee = committee_from_string(fields[2]);
        if (!committee)
            throw ParseError(ctx + ": field 'committee': unknown committee '" + fields[2] + "'");
        r.committee = *committee;
        if (!fields[3].empty()) {
            try {
                std::size_t pos = 0;
                r.degree_year = std::stoi(fields[3], &pos);
                if (pos != fields[3].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(ctx + ": field 'degree_year': expected integer or empty, got '" +
                                 fields[3] + "'");
            }
        }
        researchers.push_back(std::move(r));
    }
    return researchers;
}

inline LoadResult load_corpus(const std::string& researcher_file,
                              const std::string& publication_file,
                              YearWindow window = {}) {
    LoadResult result;
    result.corpus.window = window;
    result.corpus.researchers = load_researchers(researcher_file);

    std::ifstream in(publication_file);
    if (!in) throw ParseError("cannot open publication file '" + publication_file + "'");

    std::vector<PublicationRecord> merged;
    std::unordered_map<std::string, std::size_t> by_id;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const std::string ctx = detail::location(publication_file, line_no);
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& err) {
            throw ParseError(ctx + ": invalid JSON: " + err.what());
        }
        if (!obj.is_object()) throw ParseError(ctx + ": expected a JSON object");
        PublicationRecord pub = detail::parse_publication_line(obj, ctx);

        auto [it, inserted] = by_id.emplace(pub.pub_id, merged.size());
        if (inserted) {
            merged.push_back(std::move(pub));
        } else {
            detail::merge_duplicate(merged[it->second], pub, result.warnings);
        }
    }

    std::unordered_set<std::string> known_ids;
    for (const auto& r : result.corpus.researchers) known_ids.insert(r.researcher_id);
    for (auto& pub : merged) {
        if (!window.contains(pub.year)) continue;
        for (const AuthorRef& a : pub.authors) {
            if (a.is_member && !known_ids.count(a.id))
                throw ParseError(publication_file + ": publication '" + pub.pub_id +
                                 "' references unknown researcher '" + a.id + "'");
        }
        result.corpus.publications.push_back(std::move(pub));
    }

    result.corpus.finalize();
    return result;
}

// Committee a publication is attributed to: the earliest-listed author that
// resolves to a corpus member.
inline Committee committee_of_publication(const PublicationRecord& pub, const Corpus& corpus) {
    for (const AuthorRef& a : pub.authors) {
        if (!a.is_member) continue;
        if (const ResearcherProfile* r = corpus.find_researcher(a.id)) return r->committee;
    }
    throw DomainError("unattributable publication '" + pub.pub_id +
                      "': no author resolves to a corpus member");
}

// Non-throwing invariant sweep. Errors break the pipeline contracts
// (analytics refuse to run on them); warnings record data-quality oddities
// that self-reported bibliography registries routinely contain.
inline ValidationReport validate_corpus(const Corpus& corpus) {
    ValidationReport report;
    auto add = [&](Severity sev, std::string code, std::string field, std::string id,
                   std::string message) {
        report.entries.push_back(
            {sev, std::move(code), std::move(field), std::move(id), std::move(message)});
    };

    std::unordered_set<std::string> researcher_ids;
    for (const auto& r : corpus.researchers) {
        if (!researcher_ids.insert(r.researcher_id).second)
            add(Severity::error, "duplicate_researcher", "researcher_id", r.researcher_id,
                "researcher id '" + r.researcher_id + "' appears more than once");
    }

    std::unordered_set<std::string> pub_ids;
    for (const auto& pub : corpus.publications) {
        if (!pub_ids.insert(pub.pub_id).second)
            add(Severity::error, "duplicate_pub_id", "pub_id", pub.pub_id,
                "publication id '" + pub.pub_id + "' appears more than once");

        if (pub.author_count < 1)
            add(Severity::error, "author_count_zero", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' has author_count " +
                    std::to_string(pub.author_count));
        else if (static_cast<int>(pub.authors.size()) > pub.author_count)
            add(Severity::error, "authors_exceed_count", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' lists " + std::to_string(pub.authors.size()) +
                    " byline entries but author_count is " + std::to_string(pub.author_count));

        bool has_member = false;
        for (const AuthorRef& a : pub.authors) {
            if (!a.is_member) continue;
            if (researcher_ids.count(a.id)) {
                has_member = true;
            } else {
                add(Severity::error, "dangling_author", "pub_id", pub.pub_id,
                    "publication '" + pub.pub_id + "' references unknown researcher '" + a.id +
                        "'");
            }
        }
        if (!has_member)
            add(Severity::error, "no_member_author", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' has no author resolving to a corpus member");

        if (!corpus.window.contains(pub.year))
            add(Severity::error, "year_outside_window", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' year " + std::to_string(pub.year) +
                    " lies outside the corpus window");

        if (pub.impact_factor && pub.doc_type != DocType::journal_article)
            add(Severity::warning, "impact_factor_non_article", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' carries an impact factor but is a " +
                    std::string(to_string(pub.doc_type)));

        if (pub.wos_citations > 0 && !pub.wos_indexed)
            add(Severity::warning, "wos_citations_without_index", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' has WoS citations but is not WoS indexed");

        if (pub.wos_citations > pub.independent_citations)
            add(Severity::warning, "wos_exceeds_independent", "pub_id", pub.pub_id,
                "publication '" + pub.pub_id + "' reports more WoS citations (" +
                    std::to_string(pub.wos_citations) + ") than independent citations (" +
                    std::to_string(pub.independent_citations) + ")");
    }
    return report;
}

// Canonical re-serialization; load(save(c)) reproduces c exactly.
inline void save_corpus(const Corpus& corpus, const std::string& researcher_file,
                        const std::string& publication_file) {
    std::ofstream rout(researcher_file);
    if (!rout) throw ParseError("cannot write researcher file '" + researcher_file + "'");
    rout << "researcher_id,name,committee,degree_year\n";
    for (const auto& r : corpus.researchers) {
        rout << detail::csv_field(r.researcher_id) << ',' << detail::csv_field(r.name) << ','
             << to_string(r.committee) << ',';
        if (r.degree_year) rout << *r.degree_year;
        rout << '\n';
    }

    std::ofstream pout(publication_file);
    if (!pout) throw ParseError("cannot write publication file '" + publication_file + "'");
    for (const auto& pub : corpus.publications) {
        nlohmann::ordered_json obj;
        obj["pub_id"] = pub.pub_id;
        obj["year"] = pub.year;
        auto authors = nlohmann::ordered_json::array();
        for (const AuthorRef& a : pub.authors) authors.push_back(a.to_token());
        obj["authors"] = std::move(authors);
        obj["author_count"] = pub.author_count;
        obj["doc_type"] = to_string(pub.doc_type);
        obj["language"] = to_string(pub.language);
        obj["wos_indexed"] = pub.wos_indexed;
        obj["scopus_indexed"] = pub.scopus_indexed;
        if (pub.impact_factor)
            obj["impact_factor"] = *pub.impact_factor;
        else
            obj["impact_factor"] = nullptr;
        obj["independent_citations"] = pub.independent_citations;
        obj["wos_citations"] = pub.wos_citations;
        pout << obj.dump() << '\n';
    }
}

}  // namespace sciperf
