#pragma once
// Author-credit allocation under the supported counting schemes. All schemes
// are pure functions of (author_count, byline position); every scheme except
// integer distributes exactly one unit of credit across the byline.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sciperf/model.hpp"

namespace sciperf {

// integer and fractional are the default pipeline schemes; the four
// position-weighted schemes are opt-in extensions selected explicitly.
enum class CountingScheme { integer, fractional, arithmetic, geometric, harmonic, first_author };

inline std::string_view to_string(CountingScheme s) {
    switch (s) {
        case CountingScheme::integer: return "integer";
        case CountingScheme::fractional: return "fractional";
        case CountingScheme::arithmetic: return "arithmetic";
        case CountingScheme::geometric: return "geometric";
        case CountingScheme::harmonic: return "harmonic";
        case CountingScheme::first_author: return "first_author";
    }
    return "integer";
}

inline std::optional<CountingScheme> scheme_from_string(std::string_view s) {
    if (s == "integer") return CountingScheme::integer;
    if (s == "fractional") return CountingScheme::fractional;
    if (s == "arithmetic") return CountingScheme::arithmetic;
    if (s == "geometric") return CountingScheme::geometric;
    if (s == "harmonic") return CountingScheme::harmonic;
    if (s == "first_author" || s == "first-author") return CountingScheme::first_author;
    return std::nullopt;
}

// Credit shares indexed by byline position (entry i = position i+1).
using CreditVector = std::vector<double>;

namespace detail {

inline double harmonic_number(int n) {
    double h = 0.0;
    for (int k = 1; k <= n; ++k) h += 1.0 / k;
    return h;
}

}  // namespace detail

// Credit for one byline position without materializing the whole vector.
inline double credit_at(CountingScheme scheme, int author_count, int position) {
    if (author_count < 1) throw DomainError("author_count must be at least 1");
    if (position < 1 || position > author_count)
        throw DomainError("author position out of range");
    const int n = author_count;
    const int i = position;
    switch (scheme) {
        case CountingScheme::integer:
            return 1.0;
        case CountingScheme::fractional:
            return 1.0 / n;
        case CountingScheme::arithmetic:
            return static_cast<double>(n + 1 - i) / (0.5 * n * (n + 1));
        case CountingScheme::geometric:
            // 2^(n-i)/(2^n - 1), rewritten to stay finite for any n.
            return std::ldexp(1.0, -i) / (1.0 - std::ldexp(1.0, -n));
        case CountingScheme::harmonic:
            return (1.0 / i) / detail::harmonic_number(n);
        case CountingScheme::first_author:
            return i == 1 ? 1.0 : 0.0;
    }
    return 0.0;
}

inline CreditVector allocate_credits(CountingScheme scheme, int author_count) {
    if (author_count < 1) throw DomainError("author_count must be at least 1");
    CreditVector credits(static_cast<std::size_t>(author_count));
    if (scheme == CountingScheme::harmonic) {
        const double h = detail::harmonic_number(author_count);
        for (int i = 1; i <= author_count; ++i)
            credits[static_cast<std::size_t>(i - 1)] = (1.0 / i) / h;
        return credits;
    }
    for (int i = 1; i <= author_count; ++i)
        credits[static_cast<std::size_t>(i - 1)] = credit_at(scheme, author_count, i);
    return credits;
}

// Credit the given member earns for one publication: their first byline
// position fed through the scheme with the publication's full author count.
inline double credit_for_member(CountingScheme scheme, const PublicationRecord& pub,
                                std::string_view researcher_id) {
    auto position = pub.member_position(researcher_id);
    if (!position)
        throw DomainError("researcher '" + std::string(researcher_id) +
                          "' is not an author of publication '" + pub.pub_id + "'");
    if (*position > pub.author_count)
        throw DomainError("publication '" + pub.pub_id +
                          "' lists more authors than its author_count");
    return credit_at(scheme, pub.author_count, *position);
}

}  // namespace sciperf
