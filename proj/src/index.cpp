#include "fihris/index.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fihris/errors.hpp"

namespace fihris {

std::optional<std::uint32_t> InvertedIndex::find_doc(std::string_view doc_id) const {
    auto it = std::lower_bound(
        docs_.begin(), docs_.end(), doc_id,
        [](const DocEntry& d, std::string_view id) { return d.doc_id < id; });
    if (it == docs_.end() || it->doc_id != doc_id) return std::nullopt;
    return static_cast<std::uint32_t>(it - docs_.begin());
}

std::optional<std::size_t> InvertedIndex::term_id(std::string_view term) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
    if (it == terms_.end() || *it != term) return std::nullopt;
    return static_cast<std::size_t>(it - terms_.begin());
}

bool InvertedIndex::has_category(std::string_view name) const {
    return std::binary_search(categories_.begin(), categories_.end(), name);
}

std::uint64_t InvertedIndex::posting_token_sum() const {
    std::uint64_t sum = 0;
    for (const auto& plist : postings_)
        for (const Posting& p : plist) sum += p.tf;
    return sum;
}

bool InvertedIndex::operator==(const InvertedIndex& other) const {
    return analyzer_.fingerprint() == other.analyzer_.fingerprint() &&
           docs_ == other.docs_ && terms_ == other.terms_ &&
           postings_ == other.postings_;
}

void InvertedIndex::rebuild_categories() {
    categories_.clear();
    for (const auto& d : docs_) categories_.push_back(d.category);
    std::sort(categories_.begin(), categories_.end());
    categories_.erase(std::unique(categories_.begin(), categories_.end()),
                      categories_.end());
}

namespace {

// Documents sorted by doc_id define the ordinal space of the index.
std::vector<const Document*> sorted_unique_docs(std::span<const Document> documents) {
    if (documents.empty())
        throw BuildError("cannot build an index from an empty document stream");
    std::vector<const Document*> order;
    order.reserve(documents.size());
    for (const Document& d : documents) order.push_back(&d);
    std::sort(order.begin(), order.end(),
              [](const Document* a, const Document* b) { return a->doc_id < b->doc_id; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (order[i]->doc_id == order[i - 1]->doc_id)
            throw BuildError("duplicate doc_id in document stream: " +
                             order[i]->doc_id);
    return order;
}

// Reference implementation: one pass, token by token, counting into an
// ordered map exactly the way the index is defined.
void build_serial(const std::vector<const Document*>& order,
                  const Analyzer& analyzer, std::vector<DocEntry>& docs,
                  std::map<std::string, std::vector<Posting>>& vocab) {
    for (std::uint32_t ord = 0; ord < order.size(); ++ord) {
        const Document& d = *order[ord];
        TokenStream tokens = analyzer.analyze(d.text);
        std::map<std::string, std::uint32_t> counts;
        for (auto& t : tokens) ++counts[t];
        for (auto& [term, tf] : counts)
            vocab[term].push_back(Posting{ord, tf});
        docs.push_back(DocEntry{d.doc_id, d.path, d.category, tokens.size()});
    }
}

// OpenMP kernel: per-document analysis runs in parallel, the merge into
// the shared vocabulary is a serial pass in ordinal order so the result
// is identical to the reference.
void build_parallel(const std::vector<const Document*>& order,
                    const Analyzer& analyzer,
                    std::vector<DocEntry>& docs,
                    std::map<std::string, std::vector<Posting>>& vocab) {
    const auto n = static_cast<std::int64_t>(order.size());
    std::vector<std::vector<std::pair<std::string, std::uint32_t>>> per_doc(n);
    std::vector<std::uint64_t> token_counts(n);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        TokenStream tokens = analyzer.analyze(order[i]->text);
        token_counts[i] = tokens.size();
        std::map<std::string, std::uint32_t> counts;
        for (auto& t : tokens) ++counts[t];
        per_doc[i].assign(counts.begin(), counts.end());
    }

    for (std::int64_t i = 0; i < n; ++i) {
        const Document& d = *order[i];
        for (auto& [term, tf] : per_doc[i])
            vocab[term].push_back(Posting{static_cast<std::uint32_t>(i), tf});
        docs.push_back(DocEntry{d.doc_id, d.path, d.category, token_counts[i]});
    }
}

}  // namespace

InvertedIndex build_index(std::span<const Document> documents,
                          const Analyzer& analyzer, Execution execution) {
    const auto order = sorted_unique_docs(documents);

    InvertedIndex index;
    index.analyzer_ = analyzer;

    std::map<std::string, std::vector<Posting>> vocab;
    if (execution == Execution::serial)
        build_serial(order, analyzer, index.docs_, vocab);
    else
        build_parallel(order, analyzer, index.docs_, vocab);

    index.terms_.reserve(vocab.size());
    index.postings_.reserve(vocab.size());
    for (auto& [term, plist] : vocab) {
        index.terms_.push_back(term);
        index.postings_.push_back(std::move(plist));
    }
    index.rebuild_categories();
    return index;
}

InvertedIndex prune_by_df(const InvertedIndex& index, std::size_t threshold) {
    if (threshold < 1)
        throw std::invalid_argument("prune_by_df: threshold must be >= 1");
    InvertedIndex pruned;
    pruned.analyzer_ = index.analyzer_;
    pruned.docs_ = index.docs_;
    pruned.categories_ = index.categories_;
    for (std::size_t t = 0; t < index.vocab_size(); ++t) {
        if (index.df(t) >= threshold) {
            pruned.terms_.push_back(index.term(t));
            pruned.postings_.emplace_back(index.postings(t).begin(),
                                          index.postings(t).end());
        }
    }
    return pruned;
}

}  // namespace fihris
