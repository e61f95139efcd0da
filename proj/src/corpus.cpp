#include "fihris/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "fihris/errors.hpp"
#include "fihris/unicode.hpp"

namespace fihris {

namespace fs = std::filesystem;

namespace {

bool is_hidden(const fs::path& p) {
    const auto name = p.filename().string();
    return !name.empty() && name[0] == '.';
}

bool read_file(const fs::path& p, std::string& out) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return false;
    out = buf.str();
    return true;
}

}  // namespace

IngestResult ingest(const fs::path& root, TextEncoding encoding) {
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw IngestError("corpus root is not a readable directory: " + root.string());

    IngestResult result;
    result.manifest.root = root.string();

    // candidate files, keyed by normalized relative path for a
    // deterministic traversal order
    struct Candidate {
        std::string rel;
        std::string category;
        fs::path abs;
    };
    std::vector<Candidate> candidates;
    std::map<std::string, std::size_t> category_counts;

    fs::directory_iterator top(root, ec);
    if (ec) throw IngestError("cannot read corpus root: " + root.string());
    for (const auto& entry : top) {
        if (is_hidden(entry.path())) continue;
        if (entry.is_directory()) {
            const std::string category = entry.path().filename().string();
            category_counts.emplace(category, 0);
            for (fs::recursive_directory_iterator it(entry.path(), ec), end;
                 !ec && it != end; it.increment(ec)) {
                if (is_hidden(it->path())) {
                    if (it->is_directory()) it.disable_recursion_pending();
                    continue;
                }
                if (!it->is_regular_file()) continue;
                std::string rel =
                    fs::relative(it->path(), root).generic_string();
                candidates.push_back({std::move(rel), category, it->path()});
            }
            if (ec)
                result.issues.push_back({entry.path().string(),
                                         "cannot walk category directory: " + ec.message()});
        } else if (entry.is_regular_file()) {
            result.issues.push_back(
                {fs::relative(entry.path(), root).generic_string(),
                 "file at corpus root has no category; skipped"});
        }
    }

    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.rel < b.rel; });

    for (auto& cand : candidates) {
        std::string bytes;
        if (!read_file(cand.abs, bytes)) {
            result.issues.push_back({cand.rel, "cannot read file"});
            continue;
        }
        std::string text;
        if (encoding == TextEncoding::cp1256) {
            text = uni::encode_utf8(uni::decode_cp1256(bytes));
        } else {
            if (!uni::valid_utf8(bytes)) {
                result.issues.push_back({cand.rel, "invalid UTF-8 byte sequence"});
                continue;
            }
            text = std::move(bytes);
        }
        ++category_counts[cand.category];
        result.documents.push_back(Document{cand.rel, cand.rel,
                                            std::move(cand.category),
                                            std::move(text)});
    }

    if (result.documents.empty())
        throw IngestError("corpus root contains no ingestible documents: " +
                          root.string());

    for (auto& [name, count] : category_counts)
        result.manifest.categories.push_back({name, count});
    result.manifest.total_documents = result.documents.size();
    return result;
}

}  // namespace fihris
