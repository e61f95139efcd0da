#include "fihris/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fihris/errors.hpp"

namespace fihris {

namespace {

// query terms deduplicated, keeping multiplicity: a repeated query term
// contributes its tf once per repetition
struct QueryTerm {
    std::size_t term_id;
    std::uint32_t multiplicity;
    double weight;  // 1 for tf_sum, ln(N/df) for tfidf
};

std::optional<std::uint32_t> posting_tf(std::span<const Posting> plist,
                                        std::uint32_t doc) {
    auto it = std::lower_bound(
        plist.begin(), plist.end(), doc,
        [](const Posting& p, std::uint32_t d) { return p.doc < d; });
    if (it == plist.end() || it->doc != doc) return std::nullopt;
    return it->tf;
}

SearchResult finish(const InvertedIndex& index,
                    std::vector<std::pair<std::uint32_t, double>> scored,
                    const std::optional<std::string>& category) {
    if (category) {
        std::erase_if(scored, [&](const auto& s) {
            return index.doc(s.first).category != *category;
        });
    }
    // ordinal order is doc_id order, so a stable sort by descending
    // score leaves ties doc_id-ascending
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    SearchResult result;
    result.hits.reserve(scored.size());
    for (const auto& [ord, score] : scored) {
        const DocEntry& d = index.doc(ord);
        result.hits.push_back(Hit{d.doc_id, d.path, d.category, score});
    }
    result.retrieved_count = result.hits.size();
    return result;
}

}  // namespace

Query make_query(const InvertedIndex& index, std::string_view raw,
                 std::optional<std::string> category, Scorer scorer,
                 MatchMode mode) {
    Query q;
    q.raw = std::string(raw);
    q.terms = index.analyzer().analyze(raw);
    if (q.terms.empty())
        throw EmptyQueryError("query analyzed to zero terms: \"" + q.raw + "\"");
    q.category = std::move(category);
    q.scorer = scorer;
    q.mode = mode;
    return q;
}

SearchResult search(const InvertedIndex& index, const Query& query) {
    if (query.terms.empty())
        throw EmptyQueryError("query has no terms");
    if (query.category && !index.has_category(*query.category))
        throw UnknownCategoryError("unknown category: " + *query.category);

    const double n_docs = static_cast<double>(index.doc_count());
    std::map<std::size_t, std::uint32_t> multiplicity;
    bool missing_term = false;
    for (const std::string& t : query.terms) {
        auto tid = index.term_id(t);
        if (!tid) {
            missing_term = true;
            continue;
        }
        ++multiplicity[*tid];
    }

    std::vector<QueryTerm> qterms;
    qterms.reserve(multiplicity.size());
    for (auto [tid, mult] : multiplicity) {
        double w = query.scorer == Scorer::tfidf
                       ? std::log(n_docs / static_cast<double>(index.df(tid)))
                       : 1.0;
        qterms.push_back(QueryTerm{tid, mult, w});
    }

    std::vector<std::pair<std::uint32_t, double>> scored;
    if (query.mode == MatchMode::conjunctive) {
        // a term absent from the vocabulary can match nothing
        if (missing_term || qterms.empty()) return finish(index, {}, query.category);
        std::size_t shortest = 0;
        for (std::size_t i = 1; i < qterms.size(); ++i)
            if (index.df(qterms[i].term_id) < index.df(qterms[shortest].term_id))
                shortest = i;
        for (const Posting& cand : index.postings(qterms[shortest].term_id)) {
            double score = 0.0;
            bool all = true;
            for (const QueryTerm& qt : qterms) {
                auto tf = posting_tf(index.postings(qt.term_id), cand.doc);
                if (!tf) {
                    all = false;
                    break;
                }
                score += static_cast<double>(*tf) * qt.multiplicity * qt.weight;
            }
            if (all) scored.emplace_back(cand.doc, score);
        }
    } else {
        std::map<std::uint32_t, double> acc;
        for (const QueryTerm& qt : qterms)
            for (const Posting& p : index.postings(qt.term_id))
                acc[p.doc] +=
                    static_cast<double>(p.tf) * qt.multiplicity * qt.weight;
        scored.assign(acc.begin(), acc.end());
    }
    return finish(index, std::move(scored), query.category);
}

std::pair<SearchResult, SearchResult> compare_modes(const InvertedIndex& index,
                                                    const Query& without_category,
                                                    const Query& with_category) {
    if (without_category.category.has_value())
        throw std::invalid_argument(
            "compare_modes: first query must not carry a category");
    if (!with_category.category.has_value())
        throw std::invalid_argument(
            "compare_modes: second query must carry a category");
    if (without_category.terms != with_category.terms ||
        without_category.scorer != with_category.scorer ||
        without_category.mode != with_category.mode)
        throw std::invalid_argument(
            "compare_modes: queries must differ only in the category field");
    return {search(index, without_category), search(index, with_category)};
}

}  // namespace fihris
