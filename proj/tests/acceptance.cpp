// Acceptance gate: seven end-to-end criteria, one [PASS]/[FAIL] line
// each. Exits nonzero if any criterion fails. Tolerances are pinned
// here: rational metric checks are exact, floating-point score
// comparisons allow 1e-9.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fihris/classify.hpp"
#include "fihris/corpus.hpp"
#include "fihris/errors.hpp"
#include "fihris/eval.hpp"
#include "fihris/index.hpp"
#include "fihris/index_io.hpp"
#include "fihris/rational.hpp"
#include "fihris/search.hpp"
#include "support/oracles.hpp"
#include "support/synth.hpp"
#include "support/tempdir.hpp"

using namespace fihris;
using testsupport::CountedDoc;
using testsupport::count_docs;
using testsupport::join_terms;
using testsupport::oracle_knn;
using testsupport::oracle_nb;
using testsupport::oracle_search;
using testsupport::random_docs;
using testsupport::random_query;
using testsupport::TempDir;

namespace {

constexpr double kScoreTol = 1e-9;

struct Check {
    bool ok = true;
    std::ostringstream why;

    template <typename T>
    void expect(bool cond, const T& context) {
        if (cond || !ok) return;  // keep only the first failure
        ok = false;
        why << context;
    }
};

std::string two(int n) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d", n);
    return buf;
}

std::set<std::string> hit_ids(const SearchResult& r) {
    std::set<std::string> ids;
    for (const auto& h : r.hits) ids.insert(h.doc_id);
    return ids;
}

bool scores_match(const std::vector<Hit>& actual,
                  const std::vector<testsupport::OracleHit>& expected) {
    if (actual.size() != expected.size()) return false;
    std::map<std::string, double> want;
    for (const auto& h : expected) want[h.doc_id] = h.score;
    for (const auto& h : actual) {
        auto it = want.find(h.doc_id);
        if (it == want.end()) return false;
        if (std::fabs(h.score - it->second) > kScoreTol) return false;
    }
    return true;
}

Query raw_query(std::vector<std::string> terms, Scorer scorer, MatchMode mode,
                std::optional<std::string> category = std::nullopt) {
    Query q;
    q.raw = join_terms(terms);
    q.terms = std::move(terms);
    q.category = std::move(category);
    q.scorer = scorer;
    q.mode = mode;
    return q;
}

// --- criterion 1: the reference result table, exact ------------------

struct TableRow {
    std::size_t retrieved_before;
    std::size_t retrieved_after;
    std::size_t relevant;  // == hit on every row: recall is 1 throughout
    Rational p_before;
    Rational p_after;
};

// nine queries; precision pairs before/after category filtering
const TableRow kReferenceTable[] = {
    {3, 1, 1, {1, 3}, {1, 1}},     {12, 4, 2, {2, 12}, {2, 4}},
    {23, 4, 1, {1, 23}, {1, 4}},   {4, 1, 1, {1, 4}, {1, 1}},
    {62, 23, 1, {1, 62}, {1, 23}}, {17, 6, 1, {1, 17}, {1, 6}},
    {109, 10, 1, {1, 109}, {1, 10}}, {1, 1, 1, {1, 1}, {1, 1}},
    {125, 14, 1, {1, 125}, {1, 14}},
};

bool criterion_table(std::string& detail) {
    Check c;
    int row_no = 0;
    for (const TableRow& row : kReferenceTable) {
        ++row_no;
        QueryEval before =
            precision_recall(row.retrieved_before, row.relevant, row.relevant);
        QueryEval after =
            precision_recall(row.retrieved_after, row.relevant, row.relevant);
        c.expect(before.precision == row.p_before,
                 "row " + std::to_string(row_no) + ": precision before " +
                     before.precision.str() + " != " + row.p_before.str());
        c.expect(after.precision == row.p_after,
                 "row " + std::to_string(row_no) + ": precision after " +
                     after.precision.str() + " != " + row.p_after.str());
        c.expect(before.recall == Rational(1, 1) && after.recall == Rational(1, 1),
                 "row " + std::to_string(row_no) + ": recall is not 1");
    }

    // fractions render unreduced, straight from the counts
    ComparisonReport report;
    ComparisonRow r2;
    r2.query_id = "r2";
    r2.category = "c";
    r2.ok = true;
    r2.before = precision_recall(12, 2, 2);
    r2.after = precision_recall(4, 2, 2);
    ComparisonRow r8 = r2;
    r8.query_id = "r8";
    r8.before = precision_recall(1, 1, 1);
    r8.after = precision_recall(1, 1, 1);
    report.rows = {r2, r8};
    report.evaluated = 2;
    report.mean_precision_before = (Rational(2, 12) + Rational(1, 1)) / Rational(2, 1);
    report.mean_precision_after = (Rational(2, 4) + Rational(1, 1)) / Rational(2, 1);
    std::string tsv = render_tsv(report);
    c.expect(tsv.find("r2\t2/12\t1\t2/4\t1\n") != std::string::npos,
             "unreduced row rendering missing: " + tsv);
    c.expect(tsv.find("r8\t1\t1\t1\t1\n") != std::string::npos,
             "hit==retrieved must render as 1: " + tsv);

    detail = c.why.str();
    return c.ok;
}

// --- criterion 2: filtering lifts precision on a 124-doc corpus ------

bool criterion_filtering(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;

    const std::size_t counts[10] = {6, 19, 14, 17, 12, 18, 3, 9, 11, 15};
    TempDir dir;
    Qrels qrels;
    for (int cat = 0; cat < 10; ++cat) {
        for (std::size_t d = 0; d < counts[cat]; ++d) {
            // every doc carries its category topic; every third doc also
            // leaks the next category's topic so unfiltered retrieval is
            // noisy
            std::string text = "alpha beta gamma topic" + two(cat);
            if (d % 3 == 0) text += " topic" + two((cat + 1) % 10);
            text += " filler" + std::to_string(d % 4) + "\n";
            dir.write("corpus/cat" + two(cat) + "/doc" + std::to_string(d) +
                          ".txt",
                      text);
        }
    }

    IngestResult corpus = ingest(dir.path() / "corpus");
    c.expect(corpus.manifest.total_documents == 124,
             "expected 124 documents, ingested " +
                 std::to_string(corpus.manifest.total_documents));
    InvertedIndex index = build_index(corpus.documents, Analyzer{});

    std::vector<EvalQuery> queries;
    for (int q = 0; q < 9; ++q) {
        EvalQuery eq;
        eq.id = "q" + std::to_string(q);
        eq.text = "topic" + two(q);
        eq.category = "cat" + two(q);
        queries.push_back(eq);
        for (const DocEntry& doc : index.doc_table())
            if (doc.category == *eq.category)
                qrels.judgments[eq.id].insert(doc.doc_id);
    }

    ComparisonReport report = run_comparison(index, queries, qrels);
    c.expect(report.evaluated == 9, "expected 9 evaluated rows");

    Rational sum_before, sum_after;
    for (int q = 0; q < 9 && q < static_cast<int>(report.rows.size()); ++q) {
        const ComparisonRow& row = report.rows[q];
        c.expect(row.ok, "q" + std::to_string(q) + " failed: " + row.error);
        if (!row.ok) continue;

        std::size_t own = counts[q];
        std::size_t leak = (counts[(q + 9) % 10] + 2) / 3;  // docs 0,3,6,...
        Rational expect_before(static_cast<std::int64_t>(own),
                               static_cast<std::int64_t>(own + leak));
        c.expect(row.before.precision == expect_before,
                 "q" + std::to_string(q) + ": precision before " +
                     row.before.precision.str() + " != " + expect_before.str());
        c.expect(row.after.precision == Rational(1, 1),
                 "q" + std::to_string(q) + ": precision after " +
                     row.after.precision.str() + " != 1");
        c.expect(row.before.recall == Rational(1, 1) &&
                     row.after.recall == Rational(1, 1),
                 "q" + std::to_string(q) + ": recall dropped below 1");
        c.expect(row.after.precision >= row.before.precision,
                 "q" + std::to_string(q) + ": filtering lowered precision");

        // the filtered hits must be a subset of the unfiltered ones
        Query plain = make_query(index, queries[q].text);
        Query routed = make_query(index, queries[q].text, queries[q].category);
        auto ids_before = hit_ids(search(index, plain));
        auto ids_after = hit_ids(search(index, routed));
        c.expect(std::includes(ids_before.begin(), ids_before.end(),
                               ids_after.begin(), ids_after.end()),
                 "q" + std::to_string(q) + ": filtered hits not a subset");

        sum_before = sum_before + expect_before;
        sum_after = sum_after + Rational(1, 1);
    }

    c.expect(report.mean_precision_before == sum_before / Rational(9, 1),
             "mean precision before mismatch: " +
                 report.mean_precision_before.str());
    c.expect(report.mean_precision_after == sum_after / Rational(9, 1),
             "mean precision after mismatch: " +
                 report.mean_precision_after.str());
    c.expect(report.mean_precision_after > report.mean_precision_before,
             "mean precision did not strictly improve");

    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    c.expect(elapsed < 5.0,
             "took " + std::to_string(elapsed) + "s, budget is 5s");

    detail = c.why.str();
    return c.ok;
}

// --- criterion 3: search against the brute-force oracle --------------

bool criterion_search_oracle(std::string& detail) {
    Check c;
    std::mt19937 rng(1403001);
    for (int round = 0; round < 200 && c.ok; ++round) {
        auto docs = random_docs(rng, 20, 15, 10, 4);
        auto counted = count_docs(docs, Analyzer{});
        auto index = build_index(docs, Analyzer{});

        for (int qn = 0; qn < 6 && c.ok; ++qn) {
            auto terms = random_query(rng, 15, 4);
            std::optional<std::string> category;
            if (qn % 2 == 1) {
                const auto& cats = index.categories();
                category = cats[rng() % cats.size()];
            }
            for (bool conjunctive : {true, false}) {
                for (bool tfidf : {false, true}) {
                    auto expected =
                        oracle_search(counted, terms, conjunctive, tfidf,
                                      category);
                    auto actual = search(
                        index,
                        raw_query(terms,
                                  tfidf ? Scorer::tfidf : Scorer::tf_sum,
                                  conjunctive ? MatchMode::conjunctive
                                              : MatchMode::disjunctive,
                                  category));
                    c.expect(scores_match(actual.hits, expected),
                             "round " + std::to_string(round) + " query '" +
                                 join_terms(terms) + "' diverges from the "
                                 "oracle");
                }
            }
        }
    }
    detail = c.why.str();
    return c.ok;
}

// --- criterion 4: classifiers against brute-force oracles ------------

std::vector<Document> grid_corpus(int n_docs, int vocab, const int* tf,
                                  unsigned cat_mask) {
    std::vector<Document> docs;
    for (int d = 0; d < n_docs; ++d) {
        Document doc;
        doc.doc_id = "d" + std::to_string(d);
        doc.path = doc.doc_id;
        doc.category = (cat_mask >> d) & 1u ? "B" : "A";
        for (int t = 0; t < vocab; ++t)
            for (int rep = 0; rep < tf[d * vocab + t]; ++rep)
                doc.text += "w" + std::to_string(t) + " ";
        docs.push_back(std::move(doc));
    }
    return docs;
}

bool check_classifiers(Check& c, const std::vector<Document>& docs,
                       const std::vector<std::string>& terms, double alpha,
                       int k, const std::string& context) {
    auto counted = count_docs(docs, Analyzer{});
    auto index = build_index(docs, Analyzer{});

    auto nb_model = train_nb(index, alpha);
    auto expected_nb = oracle_nb(counted, terms, alpha);
    Prediction got_nb = predict_nb(nb_model, terms);
    c.expect(got_nb.category == expected_nb.argmax,
             context + ": nb picked " + got_nb.category + ", oracle " +
                 expected_nb.argmax);
    c.expect(got_nb.ranking.size() == expected_nb.ranking.size(),
             context + ": nb ranking size");
    for (std::size_t i = 0;
         i < got_nb.ranking.size() && i < expected_nb.ranking.size(); ++i) {
        c.expect(got_nb.ranking[i].first == expected_nb.ranking[i].first &&
                     std::fabs(got_nb.ranking[i].second -
                               expected_nb.ranking[i].second) <= kScoreTol,
                 context + ": nb ranking entry " + std::to_string(i));
    }

    auto knn_model = train_knn(index, k);
    auto expected_knn = oracle_knn(counted, terms, k);
    bool threw = false;
    Prediction got_knn;
    try {
        got_knn = predict_knn(knn_model, terms, Execution::serial);
    } catch (const NoSignalError&) {
        threw = true;
    }
    c.expect(threw == expected_knn.no_signal,
             context + ": knn no-signal disagreement");
    if (!threw && !expected_knn.no_signal) {
        c.expect(got_knn.category == expected_knn.argmax,
                 context + ": knn picked " + got_knn.category + ", oracle " +
                     expected_knn.argmax);
        c.expect(std::fabs(got_knn.score - expected_knn.score) <= kScoreTol,
                 context + ": knn score off");
    }
    return c.ok;
}

bool criterion_classifier_oracle(std::string& detail) {
    Check c;

    // exhaustive small grids: every tf layout in {0,1,2}, every two-way
    // category split, every query of length <= 2 over vocab + one
    // unknown term
    for (int n_docs : {2, 3}) {
        for (int vocab : {1, 2}) {
            int cells = n_docs * vocab;
            int layouts = 1;
            for (int i = 0; i < cells; ++i) layouts *= 3;
            for (int layout = 0; layout < layouts && c.ok; ++layout) {
                int tf[6];
                int rem = layout;
                for (int i = 0; i < cells; ++i) {
                    tf[i] = rem % 3;
                    rem /= 3;
                }
                for (unsigned mask = 1;
                     mask + 1 < (1u << n_docs) && c.ok; ++mask) {
                    auto docs = grid_corpus(n_docs, vocab, tf, mask);

                    std::vector<std::string> pool;
                    for (int t = 0; t < vocab; ++t)
                        pool.push_back("w" + std::to_string(t));
                    pool.push_back("zz");
                    std::vector<std::vector<std::string>> queries;
                    for (const auto& a : pool) queries.push_back({a});
                    for (const auto& a : pool)
                        for (const auto& b : pool) queries.push_back({a, b});

                    std::string ctx = "grid n=" + std::to_string(n_docs) +
                                      " v=" + std::to_string(vocab) +
                                      " layout=" + std::to_string(layout) +
                                      " mask=" + std::to_string(mask);
                    for (int k = 1; k <= n_docs && c.ok; ++k)
                        for (const auto& q : queries) {
                            if (!check_classifiers(c, docs, q, 1.0, k, ctx))
                                break;
                        }
                }
            }
        }
    }

    // random corpora over the rest of the small envelope
    std::mt19937 rng(1403002);
    const double alphas[] = {0.5, 1.0, 2.0};
    int done = 0;
    for (int round = 0; done < 300 && round < 3000 && c.ok; ++round) {
        auto docs = random_docs(rng, 5, 10, 8, 3);
        std::set<std::string> cats;
        for (const auto& d : docs) cats.insert(d.category);
        if (cats.size() < 2) continue;  // naive bayes needs two categories
        ++done;
        int k = 1 + static_cast<int>(rng() % docs.size());
        double alpha = alphas[rng() % 3];
        for (int qn = 0; qn < 5 && c.ok; ++qn) {
            auto terms = random_query(rng, 10, 4);
            check_classifiers(c, docs, terms, alpha, k,
                              "random round " + std::to_string(round));
        }
    }
    c.expect(done == 300, "only " + std::to_string(done) +
                              " random two-category corpora generated");

    detail = c.why.str();
    return c.ok;
}

// --- criterion 5: index file integrity --------------------------------

bool criterion_integrity(std::string& detail) {
    Check c;
    std::mt19937 rng(1403003);

    // token conservation on every build
    for (int round = 0; round < 100 && c.ok; ++round) {
        auto docs = random_docs(rng, 25, 15, 12, 4);
        auto counted = count_docs(docs, Analyzer{});
        auto index = build_index(docs, Analyzer{});
        std::uint64_t doc_sum = 0;
        for (const auto& d : index.doc_table()) doc_sum += d.token_count;
        std::uint64_t oracle_sum = 0;
        for (const auto& d : counted) oracle_sum += d.tokens;
        c.expect(index.posting_token_sum() == doc_sum && doc_sum == oracle_sum,
                 "round " + std::to_string(round) + ": token counts diverge");
    }

    TempDir dir;

    // round-trip identity and byte determinism, non-default analyzer
    {
        auto docs = random_docs(rng, 30, 20, 12, 4);
        AnalyzerConfig cfg;
        cfg.stopwords = {"w0", "w1"};
        auto index = build_index(docs, Analyzer{cfg});
        auto p1 = dir.path() / "a.idx";
        auto p2 = dir.path() / "b.idx";
        save_index(index, p1);
        save_index(index, p2);
        c.expect(testsupport::slurp(p1) == testsupport::slurp(p2),
                 "saving twice produced different bytes");

        InvertedIndex loaded = load_index(p1);
        c.expect(loaded == index, "round-trip changed the index");
        c.expect(loaded.analyzer().fingerprint() ==
                     index.analyzer().fingerprint(),
                 "round-trip changed the analyzer fingerprint");
        auto p3 = dir.path() / "c.idx";
        save_index(loaded, p3);
        c.expect(testsupport::slurp(p1) == testsupport::slurp(p3),
                 "re-saving a loaded index changed the bytes");
    }

    // every single-byte corruption must be rejected
    {
        std::vector<Document> docs(3);
        docs[0] = {"a/one.txt", "a/one.txt", "a", "red green red"};
        docs[1] = {"a/two.txt", "a/two.txt", "a", "green blue"};
        docs[2] = {"b/three.txt", "b/three.txt", "b", "blue blue red"};
        auto index = build_index(docs, Analyzer{});
        auto clean_path = dir.path() / "clean.idx";
        save_index(index, clean_path);
        std::string clean = testsupport::slurp(clean_path);
        auto bad_path = dir.path() / "bad.idx";

        for (unsigned char flip : {0x01, 0xFF}) {
            for (std::size_t i = 0; i < clean.size() && c.ok; ++i) {
                std::string bad = clean;
                bad[i] = static_cast<char>(bad[i] ^ flip);
                std::ofstream(bad_path, std::ios::binary | std::ios::trunc)
                    << bad;
                bool rejected = false;
                try {
                    load_index(bad_path);
                } catch (const IndexIoError&) {
                    rejected = true;
                }
                c.expect(rejected, "flipping byte " + std::to_string(i) +
                                       " with 0x" + std::to_string(flip) +
                                       " was not detected");
            }
        }
    }

    detail = c.why.str();
    return c.ok;
}

// --- criterion 6: df pruning stays consistent with the full index ----

bool criterion_pruning(std::string& detail) {
    Check c;
    std::mt19937 rng(1403004);
    for (int round = 0; round < 150 && c.ok; ++round) {
        auto docs = random_docs(rng, 15, 12, 8, 3);
        auto full = build_index(docs, Analyzer{});
        std::size_t threshold = 1 + rng() % 5;
        auto pruned = prune_by_df(full, threshold);

        std::set<std::string> dropped;
        for (std::size_t t = 0; t < full.vocab_size(); ++t)
            if (full.df(t) < threshold) dropped.insert(full.term(t));

        for (int qn = 0; qn < 6 && c.ok; ++qn) {
            auto terms = random_query(rng, 12, 4);
            std::vector<std::string> kept;
            bool has_dropped = false;
            for (const auto& t : terms) {
                if (dropped.contains(t))
                    has_dropped = true;
                else
                    kept.push_back(t);
            }
            std::string ctx = "round " + std::to_string(round) + " query '" +
                              join_terms(terms) + "' threshold " +
                              std::to_string(threshold);

            for (Scorer scorer : {Scorer::tf_sum, Scorer::tfidf}) {
                // disjunctive: dropping a term from the index equals
                // dropping it from the query
                auto lhs = search(
                    pruned, raw_query(terms, scorer, MatchMode::disjunctive));
                if (kept.empty()) {
                    c.expect(lhs.hits.empty(),
                             ctx + ": all terms pruned but hits returned");
                } else {
                    auto rhs = search(
                        full,
                        raw_query(kept, scorer, MatchMode::disjunctive));
                    c.expect(lhs.hits == rhs.hits,
                             ctx + ": disjunctive results diverge");
                }

                // conjunctive: a pruned term can never match, so the
                // result is empty; otherwise the indexes must agree
                auto lc = search(
                    pruned, raw_query(terms, scorer, MatchMode::conjunctive));
                if (has_dropped) {
                    c.expect(lc.hits.empty(),
                             ctx + ": conjunctive with pruned term not empty");
                } else {
                    auto rc = search(
                        full, raw_query(terms, scorer, MatchMode::conjunctive));
                    c.expect(lc.hits == rc.hits,
                             ctx + ": conjunctive results diverge");
                }
            }
        }
    }
    detail = c.why.str();
    return c.ok;
}

// --- criterion 7: analyzer stages against golden fixtures ------------

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool criterion_goldens(std::string& detail) {
    Check c;
    std::filesystem::path golden = FIHRIS_GOLDEN_DIR;
    std::string fixture = testsupport::slurp(golden / "fixture.txt");
    auto stopwords = load_stopwords(golden / "fixture_stopwords.txt");

    AnalyzerConfig base;
    base.stopwords = stopwords;

    struct Case {
        const char* file;
        AnalyzerConfig cfg;
    };
    std::vector<Case> cases;
    cases.push_back({"analyze_default.txt", base});
    {
        AnalyzerConfig cfg = base;
        cfg.normalize_unicode = false;
        cases.push_back({"analyze_no_normalize.txt", cfg});
    }
    {
        AnalyzerConfig cfg = base;
        cfg.strip_diacritics = false;
        cases.push_back({"analyze_keep_diacritics.txt", cfg});
    }
    {
        AnalyzerConfig cfg = base;
        cfg.strip_symbols = false;
        cases.push_back({"analyze_keep_symbols.txt", cfg});
    }
    {
        AnalyzerConfig cfg = base;
        cfg.stopwords.clear();
        cases.push_back({"analyze_no_stopwords.txt", cfg});
    }
    {
        AnalyzerConfig cfg = base;
        cfg.stemmer = "light";
        cases.push_back({"analyze_stem.txt", cfg});
    }

    for (const Case& tc : cases) {
        auto expected = read_lines(golden / tc.file);
        auto actual = Analyzer(tc.cfg).analyze(fixture);
        if (actual == expected) continue;
        c.ok = false;
        c.why << tc.file << ": ";
        std::size_t upto = std::max(actual.size(), expected.size());
        for (std::size_t i = 0; i < upto; ++i) {
            std::string got = i < actual.size() ? actual[i] : "<none>";
            std::string want = i < expected.size() ? expected[i] : "<none>";
            if (got != want) {
                c.why << "token " << i << " got '" << got << "' want '"
                      << want << "'";
                break;
            }
        }
        break;
    }

    detail = c.why.str();
    return c.ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        bool (*run)(std::string&);
    };
    const Criterion criteria[] = {
        {"exact rational precision/recall on the reference result table",
         criterion_table},
        {"category filtering lifts precision on a 124-doc ten-category corpus",
         criterion_filtering},
        {"search agrees with a brute-force oracle on 200 random corpora",
         criterion_search_oracle},
        {"classifiers agree with brute-force oracles on small corpora",
         criterion_classifier_oracle},
        {"index files: conservation, round-trip, determinism, corruption "
         "detection",
         criterion_integrity},
        {"df-pruned search stays consistent with the full index",
         criterion_pruning},
        {"analyzer stage toggles reproduce the golden fixtures",
         criterion_goldens},
    };

    int failed = 0;
    int number = 0;
    for (const Criterion& criterion : criteria) {
        ++number;
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number,
                    criterion.label);
        if (!ok) {
            ++failed;
            if (!detail.empty()) std::printf("       %s\n", detail.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
