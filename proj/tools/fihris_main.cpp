// fihris — category-aware full-text search over a directory corpus.
//
// Subcommands: index, search, classify, eval. Exit codes: 0 success,
// 1 runtime failure, 2 usage error. Human-readable output goes to
// stdout, diagnostics to stderr, machine artifacts only to files named
// by flags.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fihris/analysis.hpp"
#include "fihris/classify.hpp"
#include "fihris/corpus.hpp"
#include "fihris/errors.hpp"
#include "fihris/eval.hpp"
#include "fihris/index.hpp"
#include "fihris/index_io.hpp"
#include "fihris/search.hpp"

namespace {

using namespace fihris;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::string four_places(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Analyzer flags shared by `index` (to configure the build) and by the
// read-side commands (which refuse an index built under different
// settings instead of silently re-analyzing queries another way).
struct AnalyzerFlags {
    std::string stopword_file;
    bool no_stopwords = false;
    bool keep_symbols = false;
    bool no_normalize = false;
    bool keep_diacritics = false;
    bool stem = false;

    CLI::Option* stopword_opt = nullptr;

    void attach(CLI::App& cmd) {
        stopword_opt =
            cmd.add_option("--stopwords", stopword_file,
                           "Stopword file, one term per line (default: "
                           "$FIHRIS_STOPWORDS if set)")
                ->check(CLI::ExistingFile);
        cmd.add_flag("--no-stopwords", no_stopwords,
                     "Ignore $FIHRIS_STOPWORDS and use no stopword list");
        cmd.add_flag("--keep-symbols", keep_symbols,
                     "Keep punctuation and symbols inside tokens");
        cmd.add_flag("--no-normalize", no_normalize,
                     "Skip unicode normalization (composition, tatweel, "
                     "diacritics, case folding)");
        cmd.add_flag("--keep-diacritics", keep_diacritics,
                     "Normalize but keep Arabic diacritics");
        cmd.add_flag("--stem", stem, "Apply the light Arabic stemmer");
    }

    bool any_given() const {
        return stopword_opt->count() > 0 || no_stopwords || keep_symbols ||
               no_normalize || keep_diacritics || stem;
    }

    AnalyzerConfig to_config() const {
        AnalyzerConfig cfg;
        cfg.strip_symbols = !keep_symbols;
        cfg.normalize_unicode = !no_normalize;
        cfg.strip_diacritics = !keep_diacritics;
        cfg.stemmer = stem ? "light" : "";
        if (stopword_opt->count() > 0) {
            cfg.stopwords = load_stopwords(stopword_file);
        } else if (!no_stopwords) {
            if (const char* env = std::getenv("FIHRIS_STOPWORDS");
                env && *env)
                cfg.stopwords = load_stopwords(env);
        }
        return cfg;
    }
};

// Read-side commands only check: explicit analyzer flags must agree with
// what the index was built with.
void refuse_on_conflict(const InvertedIndex& index, const AnalyzerFlags& flags) {
    if (!flags.any_given()) return;
    Analyzer requested(flags.to_config());
    if (requested.fingerprint() != index.analyzer().fingerprint())
        throw ConfigError(
            "analyzer flags conflict with the settings frozen into the "
            "index at build time");
}

struct IndexArgs {
    std::string root;
    std::string out;
    std::string encoding = "utf8";
    unsigned min_df = 1;
    AnalyzerFlags analyzer;
};

int cmd_index(const IndexArgs& args) {
    TextEncoding encoding = args.encoding == "cp1256" ? TextEncoding::cp1256
                                                      : TextEncoding::utf8;
    IngestResult corpus = ingest(args.root, encoding);
    for (const auto& issue : corpus.issues)
        std::cerr << "warning: " << issue.path << ": " << issue.message
                  << '\n';

    Analyzer analyzer(args.analyzer.to_config());
    InvertedIndex index = build_index(corpus.documents, analyzer);
    if (args.min_df > 1) index = prune_by_df(index, args.min_df);
    save_index(index, args.out);

    std::cout << "indexed " << index.doc_count() << " documents, "
              << index.vocab_size() << " distinct terms -> " << args.out
              << '\n';
    for (const auto& cat : corpus.manifest.categories)
        std::cout << "  " << cat.name << "  " << cat.documents << '\n';
    return kExitOk;
}

struct SearchArgs {
    std::string index_path;
    std::string query;
    std::string category;
    bool predict = false;
    std::string scorer = "tfsum";
    std::string mode = "conjunctive";
    std::string classifier = "nb";
    double alpha = 1.0;
    int k = 3;
    std::size_t top = 10;
    AnalyzerFlags analyzer;
};

int cmd_search(const SearchArgs& args) {
    InvertedIndex index = load_index(args.index_path);
    refuse_on_conflict(index, args.analyzer);

    Scorer scorer = args.scorer == "tfidf" ? Scorer::tfidf : Scorer::tf_sum;
    MatchMode mode = args.mode == "disjunctive" ? MatchMode::disjunctive
                                                : MatchMode::conjunctive;
    Query query = make_query(index, args.query, std::nullopt, scorer, mode);

    if (args.predict) {
        ClassifierConfig cfg;
        cfg.kind = args.classifier == "knn" ? ClassifierKind::knn
                                            : ClassifierKind::naive_bayes;
        cfg.alpha = args.alpha;
        cfg.k = args.k;
        Prediction p = predict_query_category(index, query.terms, cfg);
        query.category = p.category;
        std::cout << "predicted category: " << p.category << '\n';
    } else if (!args.category.empty()) {
        query.category = args.category;
    }

    SearchResult result = search(index, query);
    std::size_t shown = std::min(args.top, result.hits.size());
    for (std::size_t i = 0; i < shown; ++i) {
        const Hit& hit = result.hits[i];
        std::cout << i + 1 << "  " << four_places(hit.score) << "  "
                  << hit.category << "  " << hit.path << '\n';
    }
    std::cout << result.retrieved_count << " total\n";
    return kExitOk;
}

struct ClassifyArgs {
    std::string index_path;
    std::string text;
    std::string classifier = "nb";
    double alpha = 1.0;
    int k = 3;
    std::string save_model;
    std::string load_model;
    AnalyzerFlags analyzer;
};

int cmd_classify(const ClassifyArgs& args) {
    InvertedIndex index = load_index(args.index_path);
    refuse_on_conflict(index, args.analyzer);
    TokenStream terms = index.analyzer().analyze(args.text);

    Prediction prediction;
    if (args.classifier == "knn") {
        KnnModel model =
            args.load_model.empty()
                ? train_knn(index, args.k)
                : load_knn_model(args.load_model,
                                 index.analyzer().fingerprint());
        if (!args.save_model.empty())
            save_knn_model(model, index.analyzer().fingerprint(),
                           args.save_model);
        prediction = predict_knn(model, terms);
    } else {
        NaiveBayesModel model =
            args.load_model.empty()
                ? train_nb(index, args.alpha)
                : load_nb_model(args.load_model,
                                index.analyzer().fingerprint());
        if (!args.save_model.empty())
            save_nb_model(model, index.analyzer().fingerprint(),
                          args.save_model);
        prediction = predict_nb(model, terms);
    }

    std::cout << "category: " << prediction.category << '\n';
    for (const auto& [name, score] : prediction.ranking)
        std::cout << "  " << name << "  " << four_places(score) << '\n';
    return kExitOk;
}

struct EvalArgs {
    std::string index_path;
    std::string queries_path;
    std::string qrels_path;
    std::string routing = "explicit";
    std::string scorer = "tfsum";
    std::string mode = "conjunctive";
    std::string classifier = "nb";
    double alpha = 1.0;
    int k = 3;
    std::string tsv_out;
    bool serial = false;
    bool empty_as_zero = false;
    AnalyzerFlags analyzer;
};

int cmd_eval(const EvalArgs& args) {
    InvertedIndex index = load_index(args.index_path);
    refuse_on_conflict(index, args.analyzer);
    std::vector<EvalQuery> queries = load_queries(args.queries_path);
    Qrels qrels = load_qrels(args.qrels_path, index);
    if (queries.empty())
        std::cerr << "warning: queries file is empty; report is empty\n";

    EvalOptions options;
    options.routing = args.routing == "predicted" ? Routing::predicted
                                                  : Routing::explicit_category;
    options.scorer = args.scorer == "tfidf" ? Scorer::tfidf : Scorer::tf_sum;
    options.mode = args.mode == "disjunctive" ? MatchMode::disjunctive
                                              : MatchMode::conjunctive;
    options.classifier.kind = args.classifier == "knn"
                                  ? ClassifierKind::knn
                                  : ClassifierKind::naive_bayes;
    options.classifier.alpha = args.alpha;
    options.classifier.k = args.k;
    options.empty_policy = args.empty_as_zero ? EmptyRetrievedPolicy::as_zero
                                              : EmptyRetrievedPolicy::as_one;
    options.execution = args.serial ? Execution::serial : Execution::parallel;

    ComparisonReport report = run_comparison(index, queries, qrels, options);
    std::cout << render_table(report);
    for (const auto& row : report.rows)
        if (!row.ok)
            std::cerr << "warning: query " << row.query_id
                      << " skipped: " << row.error << '\n';

    if (!args.tsv_out.empty()) {
        std::ofstream out(args.tsv_out, std::ios::binary | std::ios::trunc);
        out << render_tsv(report);
        if (!out) throw EvalError("cannot write " + args.tsv_out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fihris: category-aware full-text search"};
    app.require_subcommand(1);

    IndexArgs index_args;
    CLI::App* index_cmd = app.add_subcommand(
        "index", "Ingest a corpus directory and write an index file");
    index_cmd->add_option("root", index_args.root, "Corpus root directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    index_cmd->add_option("out", index_args.out, "Index file to write")
        ->required();
    index_cmd
        ->add_option("--encoding", index_args.encoding,
                     "Corpus text encoding")
        ->check(CLI::IsMember({"utf8", "cp1256"}));
    index_cmd
        ->add_option("--min-df", index_args.min_df,
                     "Prune terms appearing in fewer documents")
        ->check(CLI::PositiveNumber);
    index_args.analyzer.attach(*index_cmd);

    SearchArgs search_args;
    CLI::App* search_cmd =
        app.add_subcommand("search", "Run a query against an index");
    search_cmd->add_option("index", search_args.index_path, "Index file")
        ->required()
        ->check(CLI::ExistingFile);
    search_cmd->add_option("query", search_args.query, "Query text")
        ->required();
    CLI::Option* cat_opt =
        search_cmd->add_option("--category", search_args.category,
                               "Restrict hits to one category");
    search_cmd
        ->add_flag("--predict-category", search_args.predict,
                   "Classify the query and filter by the predicted category")
        ->excludes(cat_opt);
    search_cmd->add_option("--scorer", search_args.scorer, "Scoring function")
        ->check(CLI::IsMember({"tfsum", "tfidf"}));
    search_cmd->add_option("--mode", search_args.mode, "Match mode")
        ->check(CLI::IsMember({"conjunctive", "disjunctive"}));
    search_cmd
        ->add_option("--classifier", search_args.classifier,
                     "Classifier for --predict-category")
        ->check(CLI::IsMember({"nb", "knn"}));
    search_cmd->add_option("--alpha", search_args.alpha,
                           "Naive Bayes smoothing");
    search_cmd->add_option("--k", search_args.k, "KNN neighbor count");
    search_cmd->add_option("--top", search_args.top, "Rows to print");
    search_args.analyzer.attach(*search_cmd);

    ClassifyArgs classify_args;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Predict the category of a text");
    classify_cmd->add_option("index", classify_args.index_path, "Index file")
        ->required()
        ->check(CLI::ExistingFile);
    classify_cmd->add_option("text", classify_args.text, "Text to classify")
        ->required();
    classify_cmd
        ->add_option("--classifier", classify_args.classifier, "Classifier")
        ->check(CLI::IsMember({"nb", "knn"}));
    classify_cmd->add_option("--alpha", classify_args.alpha,
                             "Naive Bayes smoothing");
    classify_cmd->add_option("--k", classify_args.k, "KNN neighbor count");
    classify_cmd->add_option("--save-model", classify_args.save_model,
                             "Write the trained model to this file");
    classify_cmd
        ->add_option("--model", classify_args.load_model,
                     "Load a trained model instead of training")
        ->check(CLI::ExistingFile);
    classify_args.analyzer.attach(*classify_cmd);

    EvalArgs eval_args;
    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "Score queries against judgments, before/after filtering");
    eval_cmd->add_option("index", eval_args.index_path, "Index file")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd
        ->add_option("queries", eval_args.queries_path,
                     "TSV: query_id, text, optional category")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd
        ->add_option("qrels", eval_args.qrels_path,
                     "TSV: query_id, relevant doc_id")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--routing", eval_args.routing,
                         "Category source for the filtered run")
        ->check(CLI::IsMember({"explicit", "predicted"}));
    eval_cmd->add_option("--scorer", eval_args.scorer, "Scoring function")
        ->check(CLI::IsMember({"tfsum", "tfidf"}));
    eval_cmd->add_option("--mode", eval_args.mode, "Match mode")
        ->check(CLI::IsMember({"conjunctive", "disjunctive"}));
    eval_cmd
        ->add_option("--classifier", eval_args.classifier,
                     "Classifier for predicted routing")
        ->check(CLI::IsMember({"nb", "knn"}));
    eval_cmd->add_option("--alpha", eval_args.alpha, "Naive Bayes smoothing");
    eval_cmd->add_option("--k", eval_args.k, "KNN neighbor count");
    eval_cmd->add_option("--tsv", eval_args.tsv_out,
                         "Write the machine-readable report here");
    eval_cmd->add_flag("--serial", eval_args.serial,
                       "Evaluate queries on one thread");
    eval_cmd->add_flag("--empty-as-zero", eval_args.empty_as_zero,
                       "Count precision as 0 when nothing is retrieved");
    eval_args.analyzer.attach(*eval_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (index_cmd->parsed()) return cmd_index(index_args);
        if (search_cmd->parsed()) return cmd_search(search_args);
        if (classify_cmd->parsed()) return cmd_classify(classify_args);
        return cmd_eval(eval_args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EmptyQueryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownCategoryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
