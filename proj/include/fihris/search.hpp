#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fihris/index.hpp"

namespace fihris {

enum class Scorer { tf_sum, tfidf };
enum class MatchMode { conjunctive, disjunctive };

struct Query {
    std::string raw;
    TokenStream terms;  // analyzed with the index's own analyzer
    std::optional<std::string> category;
    Scorer scorer = Scorer::tf_sum;
    MatchMode mode = MatchMode::conjunctive;
};

/// Analyzes `raw` with the index's analyzer. Throws EmptyQueryError if
/// nothing survives analysis.
Query make_query(const InvertedIndex& index, std::string_view raw,
                 std::optional<std::string> category = std::nullopt,
                 Scorer scorer = Scorer::tf_sum,
                 MatchMode mode = MatchMode::conjunctive);

struct Hit {
    std::string doc_id;
    std::string path;
    std::string category;
    double score = 0.0;

    bool operator==(const Hit&) const = default;
};

struct SearchResult {
    std::vector<Hit> hits;  // score descending, doc_id ascending on ties
    std::size_t retrieved_count = 0;
};

/// Conjunctive mode retrieves documents containing every query term;
/// disjunctive retrieves documents containing any. tf_sum scores by the
/// summed term frequency, tfidf by tf * ln(N/df). A set category
/// restricts hits to that category (UnknownCategoryError if absent).
SearchResult search(const InvertedIndex& index, const Query& query);

/// Runs the same query unfiltered and category-filtered. The queries
/// must differ only in the category field; the filtered hit set is a
/// subset of the unfiltered one.
std::pair<SearchResult, SearchResult> compare_modes(const InvertedIndex& index,
                                                    const Query& without_category,
                                                    const Query& with_category);

}  // namespace fihris
