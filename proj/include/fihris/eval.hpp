#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fihris/classify.hpp"
#include "fihris/execution.hpp"
#include "fihris/index.hpp"
#include "fihris/rational.hpp"
#include "fihris/search.hpp"

namespace fihris {

/// What precision means when nothing was retrieved: 0/0 has no agreed
/// convention, so the vacuous case defaults to 1 (nothing retrieved,
/// nothing wrong) with an opt-in stricter reading of 0. Such rows are
/// flagged and marked in reports.
enum class EmptyRetrievedPolicy { as_one, as_zero };

struct QueryEval {
    std::size_t retrieved = 0;
    std::size_t relevant = 0;
    std::size_t hit = 0;  // |relevant ∩ retrieved|
    Rational precision;
    Rational recall;
    bool vacuous = false;  // precision came from the empty-retrieved policy
};

/// precision = hit/retrieved, recall = hit/relevant, both exact.
/// Throws EvalError when relevant == 0 (recall undefined) and
/// std::invalid_argument when hit exceeds either cardinality.
QueryEval precision_recall(std::size_t retrieved, std::size_t relevant,
                           std::size_t hit,
                           EmptyRetrievedPolicy policy = EmptyRetrievedPolicy::as_one);

QueryEval precision_recall(const std::set<std::string>& retrieved,
                           const std::set<std::string>& relevant,
                           EmptyRetrievedPolicy policy = EmptyRetrievedPolicy::as_one);

struct Qrels {
    std::map<std::string, std::set<std::string>> judgments;
};

/// TSV `query_id<TAB>doc_id`, one judgment per line; every doc_id must
/// resolve in the index's doc table. Blank lines and lines starting
/// with '#' are skipped. Throws EvalError naming the offending line.
Qrels parse_qrels(std::string_view text, const InvertedIndex& index);
Qrels load_qrels(const std::filesystem::path& path, const InvertedIndex& index);

struct EvalQuery {
    std::string id;
    std::string text;
    std::optional<std::string> category;
};

/// TSV `query_id<TAB>query text[<TAB>category]`; ids must be distinct.
std::vector<EvalQuery> parse_queries(std::string_view text);
std::vector<EvalQuery> load_queries(const std::filesystem::path& path);

/// Where the category for the filtered ("after") run comes from: the
/// queries file itself, or a classifier trained on the index.
enum class Routing { explicit_category, predicted };

struct EvalOptions {
    Routing routing = Routing::explicit_category;
    Scorer scorer = Scorer::tf_sum;
    MatchMode mode = MatchMode::conjunctive;
    EmptyRetrievedPolicy empty_policy = EmptyRetrievedPolicy::as_one;
    ClassifierConfig classifier;  // used when routing == predicted
    Execution execution = Execution::parallel;
};

struct ComparisonRow {
    std::string query_id;
    std::string category;  // what the "after" run filtered on
    bool ok = false;
    std::string error;  // set when !ok
    QueryEval before;
    QueryEval after;
};

struct ComparisonReport {
    Routing routing = Routing::explicit_category;
    std::vector<ComparisonRow> rows;  // queries-file order
    std::size_t evaluated = 0;        // rows without an error
    Rational mean_precision_before;
    Rational mean_precision_after;
};

/// Runs every query unfiltered and category-filtered and scores both
/// against the judgments. Individual query failures (no judgments,
/// empty query, missing category, ...) become per-row errors; the run
/// itself only fails on classifier training errors.
ComparisonReport run_comparison(const InvertedIndex& index,
                                std::span<const EvalQuery> queries,
                                const Qrels& qrels,
                                const EvalOptions& options = {});

/// Tab-separated rows with fractions kept unreduced (hit/retrieved as
/// counted); skipped rows, vacuous marks, routing and the aggregate
/// means ride along as '#' comment lines.
std::string render_tsv(const ComparisonReport& report);

/// Aligned text table with a decimal rendering next to each fraction.
std::string render_table(const ComparisonReport& report);

}  // namespace fihris
