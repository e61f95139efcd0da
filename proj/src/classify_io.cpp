#include "binio.hpp"
#include "fihris/classify.hpp"

// Model files reuse the index file conventions: little-endian header with
// magic, version and analyzer fingerprint, length-prefixed strings, and a
// trailing crc32 over everything before it.

namespace fihris {

namespace {

constexpr std::uint32_t kModelFormatVersion = 1;
constexpr char kNbMagic[4] = {'F', 'N', 'B', 'M'};
constexpr char kKnnMagic[4] = {'F', 'K', 'N', 'N'};

// Validates magic, version, fingerprint, declared size and checksum, then
// returns a reader positioned just past the header.
detail::ByteReader open_model(std::string_view bytes, const std::string& path,
                              const char* magic,
                              std::uint64_t expected_fingerprint) {
    if (bytes.size() < 28 + 4)
        throw TruncatedFileError("file too small to hold a model header: " +
                                 path);
    detail::ByteReader in(bytes);
    if (in.raw(4) != std::string_view(magic, 4))
        throw FileFormatError("wrong model file type: " + path);
    std::uint32_t version = in.u32();
    if (version != kModelFormatVersion)
        throw VersionMismatchError("model format version " +
                                   std::to_string(version) + ", expected " +
                                   std::to_string(kModelFormatVersion));
    std::uint64_t fingerprint = in.u64();
    std::uint64_t declared_size = in.u64();
    if (declared_size != bytes.size())
        throw TruncatedFileError("model file size does not match header");
    detail::ByteReader crc_in(bytes);
    crc_in.raw(bytes.size() - 4);
    if (crc_in.u32() !=
        detail::crc32sum(bytes.substr(0, bytes.size() - 4)))
        throw ChecksumError("model checksum mismatch: " + path);
    if (fingerprint != expected_fingerprint)
        throw ConfigError(
            "model was trained under a different analyzer configuration");
    return in;
}

void finish_model(detail::ByteWriter& out, std::size_t size_field,
                  const std::filesystem::path& path) {
    out.patch_u64(size_field, out.size() + 4);
    out.u32(detail::crc32sum(out.bytes()));
    detail::write_file_exact(path.string(), out.bytes());
}

void require_sorted_unique(const std::vector<std::string>& v,
                           const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1])
            throw FileFormatError(std::string(what) +
                                  " list is not sorted and distinct");
}

}  // namespace

void save_nb_model(const NaiveBayesModel& model,
                   std::uint64_t analyzer_fingerprint,
                   const std::filesystem::path& path) {
    detail::ByteWriter out;
    out.raw(std::string_view(kNbMagic, 4));
    out.u32(kModelFormatVersion);
    out.u64(analyzer_fingerprint);
    const std::size_t size_field = out.size();
    out.u64(0);
    out.f64(model.alpha);
    out.u64(model.categories.size());
    out.u64(model.vocab.size());
    for (const auto& c : model.categories) out.str(c);
    for (double p : model.priors) out.f64(p);
    for (const auto& t : model.vocab) out.str(t);
    for (const auto& row : model.cond)
        for (double p : row) out.f64(p);
    finish_model(out, size_field, path);
}

NaiveBayesModel load_nb_model(const std::filesystem::path& path,
                              std::uint64_t expected_fingerprint) {
    std::string bytes = detail::read_file_exact(path.string());
    detail::ByteReader in =
        open_model(bytes, path.string(), kNbMagic, expected_fingerprint);
    NaiveBayesModel model;
    model.alpha = in.f64();
    std::uint64_t n_cat = in.u64();
    std::uint64_t n_terms = in.u64();
    for (std::uint64_t c = 0; c < n_cat; ++c)
        model.categories.push_back(in.str());
    for (std::uint64_t c = 0; c < n_cat; ++c) model.priors.push_back(in.f64());
    for (std::uint64_t t = 0; t < n_terms; ++t) model.vocab.push_back(in.str());
    model.cond.resize(n_cat);
    for (std::uint64_t c = 0; c < n_cat; ++c) {
        model.cond[c].resize(n_terms);
        for (std::uint64_t t = 0; t < n_terms; ++t) model.cond[c][t] = in.f64();
    }
    if (in.remaining() != 4)
        throw FileFormatError("trailing bytes in model file");
    require_sorted_unique(model.categories, "category");
    require_sorted_unique(model.vocab, "vocabulary");
    return model;
}

void save_knn_model(const KnnModel& model, std::uint64_t analyzer_fingerprint,
                    const std::filesystem::path& path) {
    detail::ByteWriter out;
    out.raw(std::string_view(kKnnMagic, 4));
    out.u32(kModelFormatVersion);
    out.u64(analyzer_fingerprint);
    const std::size_t size_field = out.size();
    out.u64(0);
    out.u32(static_cast<std::uint32_t>(model.k));
    out.u64(model.categories.size());
    out.u64(model.vocab.size());
    out.u64(model.docs.size());
    for (const auto& c : model.categories) out.str(c);
    for (const auto& t : model.vocab) out.str(t);
    for (double v : model.idf) out.f64(v);
    for (const auto& doc : model.docs) {
        out.str(doc.doc_id);
        out.str(doc.category);
        out.f64(doc.norm);
        out.u64(doc.weights.size());
        for (const auto& [t, w] : doc.weights) {
            out.u32(t);
            out.f64(w);
        }
    }
    finish_model(out, size_field, path);
}

KnnModel load_knn_model(const std::filesystem::path& path,
                        std::uint64_t expected_fingerprint) {
    std::string bytes = detail::read_file_exact(path.string());
    detail::ByteReader in =
        open_model(bytes, path.string(), kKnnMagic, expected_fingerprint);
    KnnModel model;
    model.k = static_cast<int>(in.u32());
    std::uint64_t n_cat = in.u64();
    std::uint64_t n_terms = in.u64();
    std::uint64_t n_docs = in.u64();
    for (std::uint64_t c = 0; c < n_cat; ++c)
        model.categories.push_back(in.str());
    for (std::uint64_t t = 0; t < n_terms; ++t) model.vocab.push_back(in.str());
    for (std::uint64_t t = 0; t < n_terms; ++t) model.idf.push_back(in.f64());
    model.docs.resize(n_docs);
    for (auto& doc : model.docs) {
        doc.doc_id = in.str();
        doc.category = in.str();
        doc.norm = in.f64();
        std::uint64_t nnz = in.u64();
        if (nnz > n_terms) throw FileFormatError("vector larger than vocabulary");
        doc.weights.reserve(nnz);
        for (std::uint64_t i = 0; i < nnz; ++i) {
            std::uint32_t t = in.u32();
            double w = in.f64();
            if (t >= n_terms) throw FileFormatError("vector term out of range");
            doc.weights.emplace_back(t, w);
        }
    }
    if (in.remaining() != 4)
        throw FileFormatError("trailing bytes in model file");
    require_sorted_unique(model.categories, "category");
    require_sorted_unique(model.vocab, "vocabulary");
    if (model.k < 1 || static_cast<std::size_t>(model.k) > model.docs.size())
        throw FileFormatError("stored k is out of range for the document set");
    return model;
}

}  // namespace fihris
