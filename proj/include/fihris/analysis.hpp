#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace fihris {

/// Ordered list of non-empty normalized index terms.
using TokenStream = std::vector<std::string>;

/// Settings for the text analysis pipeline. The stages run in a fixed
/// order: unicode normalization, whitespace split, symbol stripping,
/// stopword removal, optional stemming.
struct AnalyzerConfig {
    std::set<std::string> stopwords;
    bool strip_symbols = true;
    bool normalize_unicode = true;
    bool strip_diacritics = true;   // only active while normalizing
    std::string stemmer;            // "" (off) or "light"

    bool operator==(const AnalyzerConfig&) const = default;
};

/// Reads a stopword file: one term per line, UTF-8, '#' comments and
/// blank lines ignored, duplicates collapsed. Throws ConfigError if the
/// file cannot be read.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

/// Naive Arabic light stemmer: strips one definite-article prefix and
/// one common suffix. Shipped behind the "light" config flag only.
std::string light_stem(std::string_view term);

/// Compiled analyzer. Stopword entries are themselves run through
/// normalization and symbol stripping at construction, so matching is
/// closed under the pipeline. Immutable and safe to share across threads.
class Analyzer {
public:
    Analyzer() : Analyzer(AnalyzerConfig{}) {}
    explicit Analyzer(AnalyzerConfig cfg);

    /// Runs the full pipeline. Throws std::invalid_argument on text that
    /// is not valid UTF-8 (callers validate at ingestion).
    TokenStream analyze(std::string_view text) const;

    /// Config with the stopword set in its normalized (stored) form.
    const AnalyzerConfig& config() const { return cfg_; }

    /// Stable hash over the effective settings; persisted with every
    /// index so query-time analysis can be checked against build-time.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    AnalyzerConfig cfg_;
    std::uint64_t fingerprint_ = 0;
    bool stem_ = false;
};

}  // namespace fihris
