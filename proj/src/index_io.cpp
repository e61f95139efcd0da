#include "fihris/index_io.hpp"

#include <algorithm>

#include "binio.hpp"

namespace fihris {

namespace {

constexpr char kMagic[4] = {'F', 'I', 'D', 'X'};
constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 8 + 8 + 8;

constexpr std::uint8_t kFlagStripSymbols = 1;
constexpr std::uint8_t kFlagNormalize = 2;
constexpr std::uint8_t kFlagStripDiacritics = 4;

}  // namespace

class IndexReader {
public:
    static InvertedIndex read(detail::ByteReader& in, std::uint64_t n_docs,
                              std::uint64_t n_terms, std::uint64_t fingerprint) {
        std::uint8_t flags = in.u8();
        AnalyzerConfig cfg;
        cfg.strip_symbols = flags & kFlagStripSymbols;
        cfg.normalize_unicode = flags & kFlagNormalize;
        cfg.strip_diacritics = flags & kFlagStripDiacritics;
        cfg.stemmer = in.str();
        std::uint64_t n_stop = in.u64();
        for (std::uint64_t i = 0; i < n_stop; ++i) cfg.stopwords.insert(in.str());

        InvertedIndex index;
        index.analyzer_ = Analyzer(std::move(cfg));
        if (index.analyzer_.fingerprint() != fingerprint)
            throw FileFormatError(
                "stored analyzer fingerprint does not match its settings");

        index.docs_.reserve(n_docs);
        for (std::uint64_t i = 0; i < n_docs; ++i) {
            DocEntry d;
            d.doc_id = in.str();
            d.path = in.str();
            d.category = in.str();
            d.token_count = in.u64();
            if (i > 0 && !(index.docs_.back().doc_id < d.doc_id))
                throw FileFormatError("doc table not sorted by doc_id");
            index.docs_.push_back(std::move(d));
        }

        index.terms_.reserve(n_terms);
        index.postings_.reserve(n_terms);
        for (std::uint64_t t = 0; t < n_terms; ++t) {
            std::string term = in.str();
            if (t > 0 && !(index.terms_.back() < term))
                throw FileFormatError("vocabulary not sorted");
            std::uint64_t df = in.u64();
            if (df == 0 || df > n_docs)
                throw FileFormatError("posting list length out of range");
            std::vector<Posting> plist;
            plist.reserve(df);
            for (std::uint64_t i = 0; i < df; ++i) {
                Posting p{in.u32(), in.u32()};
                if (p.doc >= n_docs || p.tf == 0)
                    throw FileFormatError("posting entry out of range");
                if (i > 0 && p.doc <= plist.back().doc)
                    throw FileFormatError("posting list not sorted by doc");
                plist.push_back(p);
            }
            index.terms_.push_back(std::move(term));
            index.postings_.push_back(std::move(plist));
        }
        index.rebuild_categories();
        return index;
    }
};

void save_index(const InvertedIndex& index, const std::filesystem::path& path) {
    detail::ByteWriter out;
    out.raw(std::string_view(kMagic, 4));
    out.u32(kIndexFormatVersion);
    out.u64(index.analyzer().fingerprint());
    out.u64(index.doc_count());
    out.u64(index.vocab_size());
    const std::size_t size_field = out.size();
    out.u64(0);  // total size, patched below

    const AnalyzerConfig& cfg = index.analyzer().config();
    std::uint8_t flags = 0;
    if (cfg.strip_symbols) flags |= kFlagStripSymbols;
    if (cfg.normalize_unicode) flags |= kFlagNormalize;
    if (cfg.strip_diacritics) flags |= kFlagStripDiacritics;
    out.u8(flags);
    out.str(cfg.stemmer);
    out.u64(cfg.stopwords.size());
    for (const auto& w : cfg.stopwords) out.str(w);  // std::set: sorted

    for (const DocEntry& d : index.doc_table()) {
        out.str(d.doc_id);
        out.str(d.path);
        out.str(d.category);
        out.u64(d.token_count);
    }

    for (std::size_t t = 0; t < index.vocab_size(); ++t) {
        out.str(index.term(t));
        out.u64(index.df(t));
        for (const Posting& p : index.postings(t)) {
            out.u32(p.doc);
            out.u32(p.tf);
        }
    }

    out.patch_u64(size_field, out.size() + 4);
    detail::ByteWriter fin;
    fin.raw(out.bytes());
    fin.u32(detail::crc32sum(out.bytes()));
    detail::write_file_exact(path.string(), fin.bytes());
}

InvertedIndex load_index(const std::filesystem::path& path) {
    const std::string bytes = detail::read_file_exact(path.string());
    if (bytes.size() < kHeaderSize + 4)
        throw TruncatedFileError("file too small to hold an index header: " +
                                 path.string());
    detail::ByteReader in(bytes);
    if (in.raw(4) != std::string_view(kMagic, 4))
        throw FileFormatError("not an index file: " + path.string());
    std::uint32_t version = in.u32();
    if (version != kIndexFormatVersion)
        throw VersionMismatchError("index format version " +
                                   std::to_string(version) + ", expected " +
                                   std::to_string(kIndexFormatVersion));
    std::uint64_t fingerprint = in.u64();
    std::uint64_t n_docs = in.u64();
    std::uint64_t n_terms = in.u64();
    std::uint64_t declared_size = in.u64();
    if (declared_size != bytes.size())
        throw TruncatedFileError("file size " + std::to_string(bytes.size()) +
                                 " does not match declared " +
                                 std::to_string(declared_size));

    const std::string_view payload(bytes.data(), bytes.size() - 4);
    detail::ByteReader crc_in(bytes);
    crc_in.raw(bytes.size() - 4);
    if (crc_in.u32() != detail::crc32sum(payload))
        throw ChecksumError("index checksum mismatch: " + path.string());

    InvertedIndex index = IndexReader::read(in, n_docs, n_terms, fingerprint);
    if (in.remaining() != 4)
        throw FileFormatError("trailing bytes after postings section");
    return index;
}

}  // namespace fihris
