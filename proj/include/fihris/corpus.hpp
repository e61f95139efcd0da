#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace fihris {

/// One corpus item. doc_id is the normalized path relative to the corpus
/// root ('/' separators), which is stable across rebuilds and doubles as
/// the on-disk identity.
struct Document {
    std::string doc_id;
    std::string path;      // relative to corpus root, same normalization
    std::string category;  // first path segment under the root
    std::string text;      // decoded UTF-8

    bool operator==(const Document&) const = default;
};

struct CategoryCount {
    std::string name;
    std::size_t documents = 0;

    bool operator==(const CategoryCount&) const = default;
};

struct CorpusManifest {
    std::string root;
    std::vector<CategoryCount> categories;  // sorted by name
    std::size_t total_documents = 0;

    bool operator==(const CorpusManifest&) const = default;
};

/// Per-file ingestion diagnostic; ingestion continues past these.
struct IngestIssue {
    std::string path;
    std::string message;
};

enum class TextEncoding {
    utf8,    // required well-formed; bad bytes are a per-file error
    cp1256,  // legacy Arabic, transcoded to UTF-8 at ingest
};

struct IngestResult {
    CorpusManifest manifest;
    std::vector<Document> documents;  // lexicographic by relative path
    std::vector<IngestIssue> issues;
};

/// Walks `<root>/<category>/**/<file>`. Each immediate subdirectory is a
/// category; files nested deeper still belong to the top-level category.
/// Hidden entries are skipped, zero-byte files are ingested. Files lying
/// directly at the root have no category and are reported as issues.
/// Throws IngestError if the root is missing or yields no documents.
IngestResult ingest(const std::filesystem::path& root,
                    TextEncoding encoding = TextEncoding::utf8);

}  // namespace fihris
