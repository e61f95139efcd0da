#include "fihris/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fihris/errors.hpp"

namespace fihris {

namespace {

std::size_t sorted_index(const std::vector<std::string>& v, std::string_view s) {
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || *it != s) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

std::size_t NaiveBayesModel::term_index(std::string_view term) const {
    return sorted_index(vocab, term);
}

std::size_t KnnModel::term_index(std::string_view term) const {
    return sorted_index(vocab, term);
}

NaiveBayesModel train_nb(const InvertedIndex& index, double alpha) {
    if (alpha <= 0.0) throw TrainingError("naive bayes alpha must be > 0");
    if (index.categories().size() < 2)
        throw TrainingError("naive bayes needs at least two categories, got " +
                            std::to_string(index.categories().size()));

    NaiveBayesModel model;
    model.alpha = alpha;
    model.vocab = index.terms();
    model.categories = index.categories();

    const std::size_t n_cat = model.categories.size();
    const std::size_t n_terms = model.vocab.size();
    const double n_docs = static_cast<double>(index.doc_count());

    std::vector<std::size_t> doc_cat(index.doc_count());
    std::vector<double> cat_docs(n_cat, 0.0);
    for (std::uint32_t d = 0; d < index.doc_count(); ++d) {
        doc_cat[d] = sorted_index(model.categories, index.doc(d).category);
        cat_docs[doc_cat[d]] += 1.0;
    }
    model.priors.resize(n_cat);
    for (std::size_t c = 0; c < n_cat; ++c)
        model.priors[c] = cat_docs[c] / n_docs;

    // per-category term counts; tokens(c) is summed over the model
    // vocabulary so the conditionals stay normalized on pruned indexes
    std::vector<std::vector<double>> counts(n_cat,
                                            std::vector<double>(n_terms, 0.0));
    std::vector<double> cat_tokens(n_cat, 0.0);
    for (std::size_t t = 0; t < n_terms; ++t) {
        for (const Posting& p : index.postings(t)) {
            counts[doc_cat[p.doc]][t] += p.tf;
            cat_tokens[doc_cat[p.doc]] += p.tf;
        }
    }

    model.cond.resize(n_cat);
    const double v = static_cast<double>(n_terms);
    for (std::size_t c = 0; c < n_cat; ++c) {
        model.cond[c].resize(n_terms);
        for (std::size_t t = 0; t < n_terms; ++t)
            model.cond[c][t] = (counts[c][t] + alpha) / (cat_tokens[c] + alpha * v);
    }
    return model;
}

Prediction predict_nb(const NaiveBayesModel& model, const TokenStream& terms) {
    const std::size_t n_cat = model.categories.size();
    std::vector<double> score(n_cat);
    for (std::size_t c = 0; c < n_cat; ++c) score[c] = std::log(model.priors[c]);
    for (const std::string& t : terms) {
        std::size_t ti = model.term_index(t);
        if (ti == NaiveBayesModel::npos) continue;  // out of vocabulary
        for (std::size_t c = 0; c < n_cat; ++c)
            score[c] += std::log(model.cond[c][ti]);
    }

    Prediction pred;
    pred.ranking.reserve(n_cat);
    for (std::size_t c = 0; c < n_cat; ++c)
        pred.ranking.emplace_back(model.categories[c], score[c]);
    // categories are sorted by name, stable sort keeps name order on ties
    std::stable_sort(pred.ranking.begin(), pred.ranking.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    pred.category = pred.ranking.front().first;
    pred.score = pred.ranking.front().second;
    return pred;
}

KnnModel train_knn(const InvertedIndex& index, int k) {
    if (k < 1) throw TrainingError("knn needs k >= 1");
    if (static_cast<std::size_t>(k) > index.doc_count())
        throw TrainingError("knn k exceeds the number of documents");

    KnnModel model;
    model.k = k;
    model.vocab = index.terms();
    model.categories = index.categories();

    const double n_docs = static_cast<double>(index.doc_count());
    model.idf.resize(model.vocab.size());
    for (std::size_t t = 0; t < model.vocab.size(); ++t)
        model.idf[t] = std::log(n_docs / static_cast<double>(index.df(t)));

    model.docs.resize(index.doc_count());
    for (std::uint32_t d = 0; d < index.doc_count(); ++d) {
        model.docs[d].doc_id = index.doc(d).doc_id;
        model.docs[d].category = index.doc(d).category;
    }
    for (std::size_t t = 0; t < model.vocab.size(); ++t)
        for (const Posting& p : index.postings(t))
            model.docs[p.doc].weights.emplace_back(
                static_cast<std::uint32_t>(t), p.tf * model.idf[t]);
    for (auto& doc : model.docs) {
        double sq = 0.0;
        for (const auto& [t, w] : doc.weights) sq += w * w;
        doc.norm = std::sqrt(sq);
    }
    return model;
}

namespace {

double cosine_against(const KnnModel::DocVector& doc,
                      const std::vector<std::pair<std::uint32_t, double>>& query,
                      double query_norm) {
    if (doc.norm == 0.0 || query_norm == 0.0) return 0.0;
    double dot = 0.0;
    std::size_t i = 0, j = 0;
    while (i < doc.weights.size() && j < query.size()) {
        if (doc.weights[i].first < query[j].first)
            ++i;
        else if (doc.weights[i].first > query[j].first)
            ++j;
        else {
            dot += doc.weights[i].second * query[j].second;
            ++i;
            ++j;
        }
    }
    return dot / (doc.norm * query_norm);
}

// The scoring kernel: one cosine per stored document.
std::vector<double> score_all_serial(
    const KnnModel& model,
    const std::vector<std::pair<std::uint32_t, double>>& query, double qnorm) {
    std::vector<double> sims(model.docs.size());
    for (std::size_t d = 0; d < model.docs.size(); ++d)
        sims[d] = cosine_against(model.docs[d], query, qnorm);
    return sims;
}

std::vector<double> score_all_parallel(
    const KnnModel& model,
    const std::vector<std::pair<std::uint32_t, double>>& query, double qnorm) {
    std::vector<double> sims(model.docs.size());
    const auto n = static_cast<std::int64_t>(model.docs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t d = 0; d < n; ++d)
        sims[d] = cosine_against(model.docs[d], query, qnorm);
    return sims;
}

}  // namespace

Prediction predict_knn(const KnnModel& model, const TokenStream& terms,
                       Execution execution) {
    std::map<std::uint32_t, double> counts;
    for (const std::string& t : terms) {
        std::size_t ti = model.term_index(t);
        if (ti != KnnModel::npos)
            counts[static_cast<std::uint32_t>(ti)] += 1.0;
    }
    std::vector<std::pair<std::uint32_t, double>> query;
    double sq = 0.0;
    for (auto& [t, tf] : counts) {
        double w = tf * model.idf[t];
        query.emplace_back(t, w);
        sq += w * w;
    }
    const double qnorm = std::sqrt(sq);
    if (qnorm == 0.0)
        throw NoSignalError("query has no terms with weight in the model");

    std::vector<double> sims = execution == Execution::serial
                                   ? score_all_serial(model, query, qnorm)
                                   : score_all_parallel(model, query, qnorm);

    std::vector<std::uint32_t> order(model.docs.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (sims[a] != sims[b]) return sims[a] > sims[b];
        return a < b;  // ordinal order is doc_id order
    });

    struct Tally {
        int votes = 0;
        double sim_sum = 0.0;
    };
    std::map<std::string, Tally> tally;
    for (int i = 0; i < model.k; ++i) {
        const auto& doc = model.docs[order[i]];
        auto& t = tally[doc.category];
        ++t.votes;
        t.sim_sum += sims[order[i]];
    }

    struct Ranked {
        std::string category;
        int votes;
        double mean_sim;
    };
    std::vector<Ranked> ranked;
    ranked.reserve(model.categories.size());
    for (const auto& cat : model.categories) {
        auto it = tally.find(cat);
        if (it == tally.end())
            ranked.push_back({cat, 0, 0.0});
        else
            ranked.push_back(
                {cat, it->second.votes, it->second.sim_sum / it->second.votes});
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        return a.mean_sim > b.mean_sim;
    });

    Prediction pred;
    pred.ranking.reserve(ranked.size());
    for (const Ranked& r : ranked)
        pred.ranking.emplace_back(r.category, 2.0 * r.votes + r.mean_sim);
    pred.category = pred.ranking.front().first;
    pred.score = pred.ranking.front().second;
    return pred;
}

Prediction predict_query_category(const InvertedIndex& index,
                                  const TokenStream& terms,
                                  const ClassifierConfig& config) {
    if (config.kind == ClassifierKind::naive_bayes)
        return predict_nb(train_nb(index, config.alpha), terms);
    return predict_knn(train_knn(index, config.k), terms);
}

}  // namespace fihris
