#include "fihris/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace fihris::uni {

#include "unicode_tables.inc"

namespace {

// Windows-1256 high half (0x80..0xFF); low half is ASCII.
constexpr char32_t kCp1256High[128] = {
    0x20AC, 0x067E, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
    0x02C6, 0x2030, 0x0679, 0x2039, 0x0152, 0x0686, 0x0698, 0x0688,
    0x06AF, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
    0x06A9, 0x2122, 0x0691, 0x203A, 0x0153, 0x200C, 0x200D, 0x06BA,
    0x00A0, 0x060C, 0x00A2, 0x00A3, 0x00A4, 0x00A5, 0x00A6, 0x00A7,
    0x00A8, 0x00A9, 0x06BE, 0x00AB, 0x00AC, 0x00AD, 0x00AE, 0x00AF,
    0x00B0, 0x00B1, 0x00B2, 0x00B3, 0x00B4, 0x00B5, 0x00B6, 0x00B7,
    0x00B8, 0x00B9, 0x061B, 0x00BB, 0x00BC, 0x00BD, 0x00BE, 0x061F,
    0x06C1, 0x0621, 0x0622, 0x0623, 0x0624, 0x0625, 0x0626, 0x0627,
    0x0628, 0x0629, 0x062A, 0x062B, 0x062C, 0x062D, 0x062E, 0x062F,
    0x0630, 0x0631, 0x0632, 0x0633, 0x0634, 0x0635, 0x0636, 0x00D7,
    0x0637, 0x0638, 0x0639, 0x063A, 0x0640, 0x0641, 0x0642, 0x0643,
    0x00E0, 0x0644, 0x00E2, 0x0645, 0x0646, 0x0647, 0x0648, 0x00E7,
    0x00E8, 0x00E9, 0x00EA, 0x00EB, 0x0649, 0x064A, 0x00EE, 0x00EF,
    0x064B, 0x064C, 0x064D, 0x064E, 0x00F4, 0x064F, 0x0650, 0x00F7,
    0x0651, 0x00F9, 0x0652, 0x00FB, 0x00FC, 0x200E, 0x200F, 0x06D2,
};

// Canonical compositions inside the Arabic block.
struct ArComp { char32_t base; char32_t mark; char32_t composed; };
constexpr ArComp kArabicComp[] = {
    {0x0627, 0x0653, 0x0622},  // alef + madda
    {0x0627, 0x0654, 0x0623},  // alef + hamza above
    {0x0648, 0x0654, 0x0624},  // waw  + hamza above
    {0x0627, 0x0655, 0x0625},  // alef + hamza below
    {0x064A, 0x0654, 0x0626},  // yeh  + hamza above
};

}  // namespace

bool decode_utf8(std::string_view in, std::u32string& out) {
    out.clear();
    out.reserve(in.size());
    std::size_t i = 0;
    const auto byte = [&](std::size_t k) {
        return static_cast<unsigned char>(in[k]);
    };
    while (i < in.size()) {
        unsigned char b0 = byte(i);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            return false;
        }
        if (i + len > in.size()) return false;
        for (int k = 1; k < len; ++k) {
            unsigned char bk = byte(i + k);
            if ((bk & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (bk & 0x3F);
        }
        // overlong forms, surrogates and out-of-range values are invalid
        static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        out.push_back(cp);
        i += len;
    }
    return true;
}

bool valid_utf8(std::string_view in) {
    std::u32string tmp;
    return decode_utf8(in, tmp);
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(std::u32string_view cps) {
    std::string out;
    out.reserve(cps.size() * 2);
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

bool is_whitespace(char32_t cp) {
    return std::binary_search(std::begin(kWhitespace), std::end(kWhitespace), cp);
}

bool is_punctuation(char32_t cp) {
    auto it = std::upper_bound(
        std::begin(kPunctRanges), std::end(kPunctRanges), cp,
        [](char32_t v, const CpRange& r) { return v < r.lo; });
    if (it == std::begin(kPunctRanges)) return false;
    --it;
    return cp >= it->lo && cp <= it->hi;
}

bool is_arabic_diacritic(char32_t cp) {
    return (cp >= 0x0610 && cp <= 0x061A) || (cp >= 0x064B && cp <= 0x065F) ||
           cp == 0x0670 || (cp >= 0x06D6 && cp <= 0x06DC) ||
           (cp >= 0x06DF && cp <= 0x06E4) || cp == 0x06E7 || cp == 0x06E8 ||
           (cp >= 0x06EA && cp <= 0x06ED);
}

char32_t to_lower(char32_t cp) {
    auto it = std::lower_bound(
        std::begin(kLowerMap), std::end(kLowerMap), cp,
        [](const CpPair& p, char32_t v) { return p.from < v; });
    if (it != std::end(kLowerMap) && it->from == cp) return it->to;
    return cp;
}

void compose_arabic(std::u32string& cps) {
    std::size_t w = 0;
    for (std::size_t r = 0; r < cps.size(); ++r) {
        char32_t cur = cps[r];
        if (w > 0) {
            bool composed = false;
            for (const auto& c : kArabicComp) {
                if (cps[w - 1] == c.base && cur == c.mark) {
                    cps[w - 1] = c.composed;
                    composed = true;
                    break;
                }
            }
            if (composed) continue;
        }
        cps[w++] = cur;
    }
    cps.resize(w);
}

std::u32string decode_cp1256(std::string_view in) {
    std::u32string out;
    out.reserve(in.size());
    for (char ch : in) {
        auto b = static_cast<unsigned char>(ch);
        out.push_back(b < 0x80 ? b : kCp1256High[b - 0x80]);
    }
    return out;
}

}  // namespace fihris::uni
