#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fihris/analysis.hpp"
#include "fihris/corpus.hpp"
#include "fihris/execution.hpp"

namespace fihris {

/// One (document, term frequency) entry. `doc` is the ordinal of the
/// document in the doc table; ordinals are assigned in ascending doc_id
/// order, so posting lists sorted by ordinal are sorted by doc_id.
struct Posting {
    std::uint32_t doc = 0;
    std::uint32_t tf = 0;

    bool operator==(const Posting&) const = default;
};

struct DocEntry {
    std::string doc_id;
    std::string path;
    std::string category;
    std::uint64_t token_count = 0;  // analyzed tokens at build time

    bool operator==(const DocEntry&) const = default;
};

/// The vocabulary and occurrences, plus per-document metadata including
/// the category label. Immutable once built or loaded; any number of
/// readers may use it concurrently.
class InvertedIndex {
public:
    InvertedIndex() = default;

    std::size_t doc_count() const { return docs_.size(); }
    const DocEntry& doc(std::uint32_t ordinal) const { return docs_[ordinal]; }
    const std::vector<DocEntry>& doc_table() const { return docs_; }
    std::optional<std::uint32_t> find_doc(std::string_view doc_id) const;

    std::size_t vocab_size() const { return terms_.size(); }
    const std::string& term(std::size_t term_id) const { return terms_[term_id]; }
    const std::vector<std::string>& terms() const { return terms_; }
    std::optional<std::size_t> term_id(std::string_view term) const;
    std::span<const Posting> postings(std::size_t term_id) const {
        return postings_[term_id];
    }
    std::size_t df(std::size_t term_id) const { return postings_[term_id].size(); }

    /// Distinct category names, sorted.
    const std::vector<std::string>& categories() const { return categories_; }
    bool has_category(std::string_view name) const;

    const Analyzer& analyzer() const { return analyzer_; }

    /// Total term occurrences held in posting lists. Equals the sum of
    /// doc token counts before pruning; pruning lowers it while the doc
    /// table keeps the original counts.
    std::uint64_t posting_token_sum() const;

    bool operator==(const InvertedIndex&) const;

private:
    friend InvertedIndex build_index(std::span<const Document>, const Analyzer&,
                                     Execution);
    friend InvertedIndex prune_by_df(const InvertedIndex&, std::size_t);
    friend class IndexReader;

    Analyzer analyzer_;
    std::vector<DocEntry> docs_;                  // sorted by doc_id
    std::vector<std::string> terms_;              // sorted
    std::vector<std::vector<Posting>> postings_;  // parallel to terms_
    std::vector<std::string> categories_;         // sorted distinct

    void rebuild_categories();
};

/// Analyzes every document and accumulates the vocabulary and posting
/// lists. Deterministic for a given document set regardless of input
/// order or execution mode. Throws BuildError on an empty stream or a
/// duplicate doc_id.
InvertedIndex build_index(std::span<const Document> documents,
                          const Analyzer& analyzer,
                          Execution execution = Execution::parallel);

/// Returns an index containing exactly the terms whose document
/// frequency is at least `threshold` (>= 1). The doc table is unchanged:
/// token counts keep their pre-prune meaning, and N and df keep feeding
/// TF-IDF with the original statistics.
InvertedIndex prune_by_df(const InvertedIndex& index, std::size_t threshold);

}  // namespace fihris
