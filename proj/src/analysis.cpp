#include "fihris/analysis.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

#include "fihris/errors.hpp"
#include "fihris/unicode.hpp"

namespace fihris {

namespace {

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xCBF29CE484222325ULL) {
    for (char c : data) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

void normalize(std::u32string& cps, bool strip_diacritics) {
    uni::compose_arabic(cps);
    std::size_t w = 0;
    for (char32_t cp : cps) {
        if (cp == uni::kTatweel) continue;
        if (strip_diacritics && uni::is_arabic_diacritic(cp)) continue;
        cps[w++] = uni::to_lower(cp);
    }
    cps.resize(w);
}

void strip_punct(std::u32string& tok) {
    std::size_t w = 0;
    for (char32_t cp : tok)
        if (!uni::is_punctuation(cp)) tok[w++] = cp;
    tok.resize(w);
}

// One normalized token (stages 1 and 3 of the pipeline applied to a
// single already-split word). Used for stopword entries.
std::string normalize_entry(std::string_view word, const AnalyzerConfig& cfg) {
    std::u32string cps;
    if (!uni::decode_utf8(word, cps))
        throw ConfigError("stopword entry is not valid UTF-8");
    if (cfg.normalize_unicode) normalize(cps, cfg.strip_diacritics);
    if (cfg.strip_symbols) strip_punct(cps);
    return uni::encode_utf8(cps);
}

}  // namespace

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read stopword file: " + path.string());
    std::set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        std::string word = line.substr(b, e - b + 1);
        if (word.empty() || word[0] == '#') continue;
        words.insert(std::move(word));
    }
    return words;
}

std::string light_stem(std::string_view term) {
    std::u32string cps;
    if (!uni::decode_utf8(term, cps)) return std::string(term);

    // definite-article style prefixes, longest first
    static const std::u32string kPrefixes[] = {
        U"وال",  // wal-
        U"بال",  // bal-
        U"كال",  // kal-
        U"فال",  // fal-
        U"ال",        // al-
        U"لل",        // lil-
    };
    for (const auto& p : kPrefixes) {
        if (cps.size() >= p.size() + 2 && cps.compare(0, p.size(), p) == 0) {
            cps.erase(0, p.size());
            break;
        }
    }

    static const std::u32string kSuffixes[] = {
        U"ية",  // -iyya
        U"ات",  // -at (fem. plural)
        U"ان",  // -an (dual)
        U"ون",  // -un (masc. plural)
        U"ين",  // -in (masc. plural)
        U"ها",  // -ha
        U"ة",        // ta marbuta
        U"ه",        // -h
        U"ي",        // -i
    };
    for (const auto& s : kSuffixes) {
        if (cps.size() >= s.size() + 2 &&
            cps.compare(cps.size() - s.size(), s.size(), s) == 0) {
            cps.erase(cps.size() - s.size());
            break;
        }
    }
    return uni::encode_utf8(cps);
}

Analyzer::Analyzer(AnalyzerConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.stemmer.empty() && cfg_.stemmer != "light")
        throw ConfigError("unknown stemmer: " + cfg_.stemmer);
    stem_ = cfg_.stemmer == "light";

    // store stopwords closed under the pipeline
    std::set<std::string> closed;
    for (const auto& raw : cfg_.stopwords) {
        std::string w = normalize_entry(raw, cfg_);
        if (!w.empty()) closed.insert(std::move(w));
    }
    cfg_.stopwords = std::move(closed);

    std::string canon = "fihris-analyzer-v1";
    canon += cfg_.strip_symbols ? "|strip" : "|nostrip";
    canon += cfg_.normalize_unicode ? "|norm" : "|nonorm";
    canon += cfg_.strip_diacritics ? "|nodiac" : "|diac";
    canon += "|stem=" + cfg_.stemmer;
    for (const auto& w : cfg_.stopwords) {
        canon += '|';
        canon += w;
    }
    fingerprint_ = fnv1a(canon);
}

TokenStream Analyzer::analyze(std::string_view text) const {
    std::u32string cps;
    if (!uni::decode_utf8(text, cps))
        throw std::invalid_argument("analyze: text is not valid UTF-8");
    if (cfg_.normalize_unicode) normalize(cps, cfg_.strip_diacritics);

    TokenStream out;
    std::u32string tok;
    const auto flush = [&] {
        if (tok.empty()) return;
        if (cfg_.strip_symbols) strip_punct(tok);
        if (!tok.empty()) {
            std::string term = uni::encode_utf8(tok);
            if (!cfg_.stopwords.contains(term)) {
                if (stem_) term = light_stem(term);
                if (!term.empty()) out.push_back(std::move(term));
            }
        }
        tok.clear();
    };
    for (char32_t cp : cps) {
        if (uni::is_whitespace(cp))
            flush();
        else
            tok.push_back(cp);
    }
    flush();
    return out;
}

}  // namespace fihris
