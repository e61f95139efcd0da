#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fihris/errors.hpp"
#include "fihris/eval.hpp"

namespace fihris {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

// Calls fn(line_number, line) for every non-blank, non-comment line,
// with trailing CR stripped.
template <typename Fn>
void for_each_data_line(std::string_view text, Fn fn) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() != '#') fn(lineno, line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EvalError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw EvalError("cannot read " + path.string());
    return std::move(buf).str();
}

std::string four_places(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Report fractions unreduced, collapsed to "1"/"0" when the ratio is
// exactly one or zero.
std::string fraction(std::size_t num, std::size_t den) {
    if (num == 0) return "0";
    if (num == den) return "1";
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string precision_str(const QueryEval& e) {
    if (e.vacuous) return e.precision.num() == 0 ? "0" : "1";
    return fraction(e.hit, e.retrieved);
}

std::string recall_str(const QueryEval& e) { return fraction(e.hit, e.relevant); }

std::set<std::string> doc_id_set(const SearchResult& result) {
    std::set<std::string> ids;
    for (const auto& hit : result.hits) ids.insert(hit.doc_id);
    return ids;
}

ComparisonRow evaluate_query(const InvertedIndex& index, const EvalQuery& query,
                             const Qrels& qrels, const EvalOptions& options,
                             const NaiveBayesModel* nb, const KnnModel* knn) {
    ComparisonRow row;
    row.query_id = query.id;
    try {
        auto judged = qrels.judgments.find(query.id);
        if (judged == qrels.judgments.end() || judged->second.empty())
            throw EvalError("no relevance judgments for this query");
        const std::set<std::string>& relevant = judged->second;

        Query unfiltered = make_query(index, query.text, std::nullopt,
                                      options.scorer, options.mode);
        SearchResult before = search(index, unfiltered);

        if (options.routing == Routing::explicit_category) {
            if (!query.category)
                throw EvalError("no category in the queries file");
            row.category = *query.category;
        } else {
            row.category = nb ? predict_nb(*nb, unfiltered.terms).category
                              : predict_knn(*knn, unfiltered.terms,
                                            Execution::serial)
                                    .category;
        }

        Query filtered = unfiltered;
        filtered.category = row.category;
        SearchResult after = search(index, filtered);

        row.before =
            precision_recall(doc_id_set(before), relevant, options.empty_policy);
        row.after =
            precision_recall(doc_id_set(after), relevant, options.empty_policy);
        row.ok = true;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

}  // namespace

QueryEval precision_recall(std::size_t retrieved, std::size_t relevant,
                           std::size_t hit, EmptyRetrievedPolicy policy) {
    if (relevant == 0)
        throw EvalError("empty relevant set: recall is undefined");
    if (hit > retrieved || hit > relevant)
        throw std::invalid_argument(
            "intersection larger than one of the sets");
    QueryEval e;
    e.retrieved = retrieved;
    e.relevant = relevant;
    e.hit = hit;
    if (retrieved == 0) {
        e.vacuous = true;
        e.precision = policy == EmptyRetrievedPolicy::as_one
                          ? Rational(1, 1)
                          : Rational(0, 1);
    } else {
        e.precision = Rational(static_cast<std::int64_t>(hit),
                               static_cast<std::int64_t>(retrieved));
    }
    e.recall = Rational(static_cast<std::int64_t>(hit),
                        static_cast<std::int64_t>(relevant));
    return e;
}

QueryEval precision_recall(const std::set<std::string>& retrieved,
                           const std::set<std::string>& relevant,
                           EmptyRetrievedPolicy policy) {
    std::size_t hit = static_cast<std::size_t>(std::count_if(
        retrieved.begin(), retrieved.end(),
        [&](const std::string& id) { return relevant.contains(id); }));
    return precision_recall(retrieved.size(), relevant.size(), hit, policy);
}

Qrels parse_qrels(std::string_view text, const InvertedIndex& index) {
    Qrels qrels;
    for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
        auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty())
            throw EvalError("qrels line " + std::to_string(lineno) +
                            ": expected query_id<TAB>doc_id");
        if (!index.find_doc(fields[1]))
            throw EvalError("qrels line " + std::to_string(lineno) +
                            ": unknown document '" + std::string(fields[1]) +
                            "'");
        qrels.judgments[std::string(fields[0])].insert(std::string(fields[1]));
    });
    return qrels;
}

Qrels load_qrels(const std::filesystem::path& path, const InvertedIndex& index) {
    return parse_qrels(read_text_file(path), index);
}

std::vector<EvalQuery> parse_queries(std::string_view text) {
    std::vector<EvalQuery> queries;
    std::set<std::string> seen;
    for_each_data_line(text, [&](std::size_t lineno, std::string_view line) {
        auto fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() ||
            fields[1].empty())
            throw EvalError("queries line " + std::to_string(lineno) +
                            ": expected query_id<TAB>text[<TAB>category]");
        EvalQuery q;
        q.id = std::string(fields[0]);
        q.text = std::string(fields[1]);
        if (fields.size() == 3 && !fields[2].empty())
            q.category = std::string(fields[2]);
        if (!seen.insert(q.id).second)
            throw EvalError("queries line " + std::to_string(lineno) +
                            ": duplicate query id '" + q.id + "'");
        queries.push_back(std::move(q));
    });
    return queries;
}

std::vector<EvalQuery> load_queries(const std::filesystem::path& path) {
    return parse_queries(read_text_file(path));
}

ComparisonReport run_comparison(const InvertedIndex& index,
                                std::span<const EvalQuery> queries,
                                const Qrels& qrels, const EvalOptions& options) {
    ComparisonReport report;
    report.routing = options.routing;
    report.rows.resize(queries.size());

    // Classifier training is shared across rows; its failures are
    // precondition failures, not per-row ones.
    std::optional<NaiveBayesModel> nb;
    std::optional<KnnModel> knn;
    if (options.routing == Routing::predicted && !queries.empty()) {
        if (options.classifier.kind == ClassifierKind::naive_bayes)
            nb = train_nb(index, options.classifier.alpha);
        else
            knn = train_knn(index, options.classifier.k);
    }
    const NaiveBayesModel* nb_ptr = nb ? &*nb : nullptr;
    const KnnModel* knn_ptr = knn ? &*knn : nullptr;

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(queries.size());
    if (options.execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            report.rows[static_cast<std::size_t>(i)] =
                evaluate_query(index, queries[static_cast<std::size_t>(i)],
                               qrels, options, nb_ptr, knn_ptr);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            report.rows[static_cast<std::size_t>(i)] =
                evaluate_query(index, queries[static_cast<std::size_t>(i)],
                               qrels, options, nb_ptr, knn_ptr);
    }

    Rational sum_before, sum_after;
    for (const auto& row : report.rows) {
        if (!row.ok) continue;
        ++report.evaluated;
        sum_before = sum_before + row.before.precision;
        sum_after = sum_after + row.after.precision;
    }
    if (report.evaluated > 0) {
        Rational count(static_cast<std::int64_t>(report.evaluated), 1);
        report.mean_precision_before = sum_before / count;
        report.mean_precision_after = sum_after / count;
    }
    return report;
}

std::string render_tsv(const ComparisonReport& report) {
    std::string out =
        "query\tPRE_before\tRECALL_before\tPRE_after\tRECALL_after\n";
    std::vector<std::string> notes;
    for (const auto& row : report.rows) {
        if (!row.ok) {
            notes.push_back("# skipped " + row.query_id + ": " + row.error);
            continue;
        }
        out += row.query_id + '\t' + precision_str(row.before) + '\t' +
               recall_str(row.before) + '\t' + precision_str(row.after) +
               '\t' + recall_str(row.after) + '\n';
        if (row.before.vacuous || row.after.vacuous)
            notes.push_back("# " + row.query_id +
                            ": nothing retrieved, precision by convention");
    }
    for (const auto& n : notes) out += n + '\n';
    out += std::string("# routing: ") +
           (report.routing == Routing::explicit_category ? "explicit"
                                                         : "predicted") +
           '\n';
    out += "# evaluated: " + std::to_string(report.evaluated) + "/" +
           std::to_string(report.rows.size()) + " queries\n";
    if (report.evaluated > 0) {
        out += "# mean precision before: " +
               report.mean_precision_before.str() + " (" +
               four_places(report.mean_precision_before.to_double()) + ")\n";
        out += "# mean precision after: " + report.mean_precision_after.str() +
               " (" + four_places(report.mean_precision_after.to_double()) +
               ")\n";
    } else {
        out += "# mean precision before: n/a\n# mean precision after: n/a\n";
    }
    return out;
}

std::string render_table(const ComparisonReport& report) {
    const std::array<std::string, 5> header = {
        "query", "PRE_before", "RECALL_before", "PRE_after", "RECALL_after"};
    std::vector<std::array<std::string, 5>> cells;
    for (const auto& row : report.rows) {
        if (row.ok) {
            auto cell = [](const QueryEval& e, bool precision) {
                std::string frac =
                    precision ? precision_str(e) : recall_str(e);
                double v = precision ? e.precision.to_double()
                                     : e.recall.to_double();
                return frac + " (" + four_places(v) + ")";
            };
            cells.push_back({row.query_id, cell(row.before, true),
                             cell(row.before, false), cell(row.after, true),
                             cell(row.after, false)});
        } else {
            cells.push_back({row.query_id, "--", "--", "--", "--"});
        }
    }

    std::array<std::size_t, 5> width{};
    for (std::size_t c = 0; c < 5; ++c) width[c] = header[c].size();
    for (const auto& row : cells)
        for (std::size_t c = 0; c < 5; ++c)
            width[c] = std::max(width[c], row[c].size());

    std::string out;
    auto emit = [&](const std::array<std::string, 5>& row) {
        for (std::size_t c = 0; c < 5; ++c) {
            out += row[c];
            if (c + 1 < 5)
                out += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out += '\n';
    };
    emit(header);
    std::size_t rule = 8;  // two-space gaps
    for (std::size_t c = 0; c < 5; ++c) rule += width[c];
    out += std::string(rule, '-') + '\n';
    for (const auto& row : cells) emit(row);

    for (const auto& row : report.rows)
        if (!row.ok) out += "skipped " + row.query_id + ": " + row.error + '\n';
    out += std::string("routing: ") +
           (report.routing == Routing::explicit_category ? "explicit"
                                                         : "predicted") +
           "; evaluated " + std::to_string(report.evaluated) + "/" +
           std::to_string(report.rows.size()) + " queries\n";
    if (report.evaluated > 0) {
        out += "mean precision before: " + report.mean_precision_before.str() +
               " (" + four_places(report.mean_precision_before.to_double()) +
               "), after: " + report.mean_precision_after.str() + " (" +
               four_places(report.mean_precision_after.to_double()) + ")\n";
    }
    return out;
}

}  // namespace fihris
