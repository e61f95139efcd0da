#pragma once

// Brute-force reference computations for the search and classifier
// tests. Everything here works straight off the documents — no inverted
// index, no posting lists — so agreement with the real implementations
// is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fihris/analysis.hpp"
#include "fihris/corpus.hpp"

namespace testsupport {

struct CountedDoc {
    std::string doc_id;
    std::string category;
    std::map<std::string, std::size_t> tf;
    std::size_t tokens = 0;
};

inline std::vector<CountedDoc> count_docs(
    const std::vector<fihris::Document>& docs,
    const fihris::Analyzer& analyzer) {
    std::vector<CountedDoc> out;
    out.reserve(docs.size());
    for (const auto& doc : docs) {
        CountedDoc c;
        c.doc_id = doc.doc_id;
        c.category = doc.category;
        for (const auto& term : analyzer.analyze(doc.text)) {
            ++c.tf[term];
            ++c.tokens;
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const CountedDoc& a, const CountedDoc& b) {
                  return a.doc_id < b.doc_id;
              });
    return out;
}

inline std::map<std::string, std::size_t> df_of(
    const std::vector<CountedDoc>& docs) {
    std::map<std::string, std::size_t> df;
    for (const auto& d : docs)
        for (const auto& [t, n] : d.tf) ++df[t];
    return df;
}

struct OracleHit {
    std::string doc_id;
    double score = 0.0;
};

// Scores every document by direct scan; conjunctive requires every
// query term, disjunctive any. Query-term repeats count again. Order:
// score descending, doc_id ascending (input is doc_id-sorted).
inline std::vector<OracleHit> oracle_search(
    const std::vector<CountedDoc>& docs, const std::vector<std::string>& terms,
    bool conjunctive, bool tfidf,
    const std::optional<std::string>& category = std::nullopt) {
    auto df = df_of(docs);
    double n = static_cast<double>(docs.size());
    std::vector<OracleHit> hits;
    for (const auto& d : docs) {
        if (category && d.category != *category) continue;
        bool all = true, any = false;
        double score = 0.0;
        for (const auto& t : terms) {
            auto it = d.tf.find(t);
            if (it == d.tf.end()) {
                all = false;
                continue;
            }
            any = true;
            double tf = static_cast<double>(it->second);
            score += tfidf
                         ? tf * std::log(n / static_cast<double>(df.at(t)))
                         : tf;
        }
        if (conjunctive ? all : any) hits.push_back({d.doc_id, score});
    }
    std::stable_sort(hits.begin(), hits.end(),
                     [](const OracleHit& a, const OracleHit& b) {
                         return a.score > b.score;
                     });
    return hits;
}

struct OracleNbResult {
    std::vector<std::pair<std::string, double>> ranking;  // score desc
    std::string argmax;
};

// Multinomial model computed the long way: explicit per-category term
// totals and additive smoothing, log posterior per category.
inline OracleNbResult oracle_nb(const std::vector<CountedDoc>& docs,
                                const std::vector<std::string>& terms,
                                double alpha) {
    std::set<std::string> vocab;
    for (const auto& d : docs)
        for (const auto& [t, n] : d.tf) vocab.insert(t);
    std::map<std::string, std::size_t> cat_docs;
    std::map<std::string, std::size_t> cat_tokens;
    std::map<std::string, std::map<std::string, std::size_t>> cat_tf;
    for (const auto& d : docs) {
        ++cat_docs[d.category];
        cat_tokens[d.category] += d.tokens;
        for (const auto& [t, n] : d.tf) cat_tf[d.category][t] += n;
    }

    double v = static_cast<double>(vocab.size());
    double n = static_cast<double>(docs.size());
    std::vector<std::pair<std::string, double>> ranking;
    for (const auto& [c, nc] : cat_docs) {
        double score = std::log(static_cast<double>(nc) / n);
        for (const auto& t : terms) {
            if (!vocab.contains(t)) continue;
            double count = 0.0;
            auto ti = cat_tf[c].find(t);
            if (ti != cat_tf[c].end())
                count = static_cast<double>(ti->second);
            score += std::log((count + alpha) /
                              (static_cast<double>(cat_tokens[c]) + alpha * v));
        }
        ranking.emplace_back(c, score);
    }
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const auto& a, const auto& b) {
                         return a.second > b.second;
                     });
    return {ranking, ranking.front().first};
}

struct OracleKnnResult {
    std::string argmax;
    double score = 0.0;  // 2 * votes + mean similarity
    bool no_signal = false;
};

// Full cosine matrix against every document, top-k majority vote, ties
// by higher mean similarity then category name.
inline OracleKnnResult oracle_knn(const std::vector<CountedDoc>& docs,
                                  const std::vector<std::string>& terms,
                                  int k) {
    auto df = df_of(docs);
    double n = static_cast<double>(docs.size());
    auto idf = [&](const std::string& t) {
        return std::log(n / static_cast<double>(df.at(t)));
    };

    std::map<std::string, std::size_t> qtf;
    for (const auto& t : terms)
        if (df.contains(t)) ++qtf[t];
    std::map<std::string, double> qw;
    double qnorm = 0.0;
    for (const auto& [t, c] : qtf) {
        double w = static_cast<double>(c) * idf(t);
        qw[t] = w;
        qnorm += w * w;
    }
    qnorm = std::sqrt(qnorm);
    if (qnorm == 0.0) return {"", 0.0, true};

    struct Sim {
        double sim;
        std::size_t ordinal;
        const CountedDoc* doc;
    };
    std::vector<Sim> sims;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto& d = docs[i];
        double dot = 0.0, dnorm = 0.0;
        for (const auto& [t, c] : d.tf) {
            double w = static_cast<double>(c) * idf(t);
            dnorm += w * w;
            auto qi = qw.find(t);
            if (qi != qw.end()) dot += w * qi->second;
        }
        dnorm = std::sqrt(dnorm);
        double sim = dnorm == 0.0 ? 0.0 : dot / (dnorm * qnorm);
        sims.push_back({sim, i, &d});
    }
    std::sort(sims.begin(), sims.end(), [](const Sim& a, const Sim& b) {
        if (a.sim != b.sim) return a.sim > b.sim;
        return a.ordinal < b.ordinal;
    });
    sims.resize(std::min(static_cast<std::size_t>(k), sims.size()));

    std::map<std::string, std::pair<int, double>> tally;  // votes, sim sum
    for (const auto& s : sims) {
        auto& t = tally[s.doc->category];
        ++t.first;
        t.second += s.sim;
    }
    std::string best;
    int best_votes = -1;
    double best_mean = 0.0;
    for (const auto& [c, t] : tally) {
        double mean = t.second / static_cast<double>(t.first);
        if (t.first > best_votes ||
            (t.first == best_votes && mean > best_mean)) {
            best = c;
            best_votes = t.first;
            best_mean = mean;
        }
    }
    return {best, 2.0 * best_votes + best_mean, false};
}

}  // namespace testsupport
