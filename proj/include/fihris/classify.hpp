#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fihris/execution.hpp"
#include "fihris/index.hpp"

namespace fihris {

struct Prediction {
    std::string category;  // = ranking.front().first
    double score = 0.0;
    std::vector<std::pair<std::string, double>> ranking;  // every category
};

/// Multinomial Naive Bayes with additive smoothing:
///   prior(c)   = N_c / N
///   cond(t|c)  = (count(t in c) + alpha) / (tokens(c) + alpha * V)
/// Self-contained (carries its vocabulary) so it can be persisted and
/// used without the index.
struct NaiveBayesModel {
    double alpha = 1.0;
    std::vector<std::string> vocab;       // sorted
    std::vector<std::string> categories;  // sorted
    std::vector<double> priors;           // per category
    std::vector<std::vector<double>> cond;  // [category][term]

    std::size_t term_index(std::string_view term) const;  // npos if absent
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Requires at least two categories, each with at least one document,
/// and alpha > 0; throws TrainingError otherwise.
NaiveBayesModel train_nb(const InvertedIndex& index, double alpha = 1.0);

/// Log-space posterior per category; out-of-vocabulary terms are
/// skipped; an empty stream falls back to the priors. Ties break by
/// category name.
Prediction predict_nb(const NaiveBayesModel& model, const TokenStream& terms);

/// K-nearest-neighbors over per-document TF-IDF vectors (tf * ln(N/df)).
struct KnnModel {
    struct DocVector {
        std::string doc_id;
        std::string category;
        std::vector<std::pair<std::uint32_t, double>> weights;  // (term, w)
        double norm = 0.0;
    };

    int k = 3;
    std::vector<std::string> vocab;  // sorted
    std::vector<double> idf;         // ln(N/df), parallel to vocab
    std::vector<DocVector> docs;
    std::vector<std::string> categories;  // sorted distinct

    std::size_t term_index(std::string_view term) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Requires 1 <= k <= N; throws TrainingError otherwise.
KnnModel train_knn(const InvertedIndex& index, int k);

/// Cosine similarity against every stored vector (the OpenMP kernel; the
/// serial path is the reference). The top-k neighbors vote; ties break
/// by higher mean similarity, then category name. Throws NoSignalError
/// when the query vectorizes to zero.
Prediction predict_knn(const KnnModel& model, const TokenStream& terms,
                       Execution execution = Execution::parallel);

enum class ClassifierKind { naive_bayes, knn };

struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::naive_bayes;
    double alpha = 1.0;  // naive bayes smoothing
    int k = 3;           // knn neighbor count
};

/// Trains the configured classifier on the index and predicts a category
/// for an analyzed query; the result can be fed into Query.category.
Prediction predict_query_category(const InvertedIndex& index,
                                  const TokenStream& terms,
                                  const ClassifierConfig& config = {});

// Model files follow the index format conventions: magic, version,
// analyzer fingerprint, sections, trailing crc32.
void save_nb_model(const NaiveBayesModel& model, std::uint64_t analyzer_fingerprint,
                   const std::filesystem::path& path);
NaiveBayesModel load_nb_model(const std::filesystem::path& path,
                              std::uint64_t expected_fingerprint);

void save_knn_model(const KnnModel& model, std::uint64_t analyzer_fingerprint,
                    const std::filesystem::path& path);
KnnModel load_knn_model(const std::filesystem::path& path,
                        std::uint64_t expected_fingerprint);

}  // namespace fihris
