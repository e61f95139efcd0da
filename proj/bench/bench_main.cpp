// Compares the serial reference paths against the OpenMP kernels on a
// synthetic corpus: index build, KNN query scoring, batch evaluation.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "fihris/analysis.hpp"
#include "fihris/classify.hpp"
#include "fihris/corpus.hpp"
#include "fihris/eval.hpp"
#include "fihris/index.hpp"
#include "fihris/search.hpp"

using namespace fihris;

namespace {

double seconds(auto fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

double best_of(int reps, auto fn) {
    double best = seconds(fn);
    for (int i = 1; i < reps; ++i) best = std::min(best, seconds(fn));
    return best;
}

std::vector<Document> synth_corpus(std::size_t docs, std::size_t vocab,
                                   std::size_t tokens_per_doc,
                                   std::size_t categories) {
    std::mt19937 rng(20240613);
    // Zipf-ish skew so posting lists have realistic shape.
    std::vector<double> weights(vocab);
    for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / double(i + 1);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

    std::vector<Document> out;
    out.reserve(docs);
    for (std::size_t d = 0; d < docs; ++d) {
        Document doc;
        doc.category = "cat" + std::to_string(d % categories);
        doc.doc_id = doc.category + "/doc" + std::to_string(d) + ".txt";
        doc.path = doc.doc_id;
        std::string text;
        for (std::size_t t = 0; t < tokens_per_doc; ++t) {
            text += "w" + std::to_string(pick(rng));
            text += ' ';
        }
        doc.text = std::move(text);
        out.push_back(std::move(doc));
    }
    return out;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-24s %10.3f ms %10.3f ms %8.2fx\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
    const std::size_t n_docs = 4000, vocab = 20000, doc_len = 160;
    std::vector<Document> docs = synth_corpus(n_docs, vocab, doc_len, 10);
    Analyzer analyzer;

    std::printf("corpus: %zu docs x %zu tokens, %d OpenMP threads\n\n", n_docs,
                doc_len, omp_get_max_threads());
    std::printf("%-24s %13s %13s %9s\n", "kernel", "serial", "parallel",
                "speedup");

    double build_s = best_of(3, [&] {
        volatile std::size_t sink =
            build_index(docs, analyzer, Execution::serial).vocab_size();
        (void)sink;
    });
    double build_p = best_of(3, [&] {
        volatile std::size_t sink =
            build_index(docs, analyzer, Execution::parallel).vocab_size();
        (void)sink;
    });
    row("index build", build_s, build_p);

    InvertedIndex index = build_index(docs, analyzer);
    KnnModel knn = train_knn(index, 5);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
    std::vector<TokenStream> queries;
    for (int q = 0; q < 400; ++q) {
        TokenStream terms;
        for (int t = 0; t < 5; ++t)
            terms.push_back("w" + std::to_string(pick(rng)));
        queries.push_back(std::move(terms));
    }
    auto knn_run = [&](Execution exec) {
        std::size_t sink = 0;
        for (const auto& terms : queries)
            sink += predict_knn(knn, terms, exec).category.size();
        return sink;
    };
    double knn_s = best_of(3, [&] { volatile auto s = knn_run(Execution::serial); (void)s; });
    double knn_p = best_of(3, [&] { volatile auto s = knn_run(Execution::parallel); (void)s; });
    row("knn scoring (400 q)", knn_s, knn_p);

    std::vector<EvalQuery> eval_queries;
    Qrels qrels;
    for (int q = 0; q < 200; ++q) {
        EvalQuery eq;
        eq.id = "q" + std::to_string(q);
        eq.text = "w" + std::to_string(pick(rng));
        eq.category = docs[std::size_t(q) % docs.size()].category;
        qrels.judgments[eq.id].insert(docs[std::size_t(q) % docs.size()].doc_id);
        eval_queries.push_back(std::move(eq));
    }
    EvalOptions opts;
    opts.mode = MatchMode::disjunctive;
    auto eval_run = [&](Execution exec) {
        opts.execution = exec;
        volatile std::size_t sink =
            run_comparison(index, eval_queries, qrels, opts).evaluated;
        (void)sink;
    };
    double eval_s = best_of(3, [&] { eval_run(Execution::serial); });
    double eval_p = best_of(3, [&] { eval_run(Execution::parallel); });
    row("eval batch (200 q)", eval_s, eval_p);
    return 0;
}
