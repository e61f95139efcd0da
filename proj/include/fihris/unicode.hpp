#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fihris::uni {

inline constexpr char32_t kReplacement = 0xFFFD;
inline constexpr char32_t kTatweel = 0x0640;

/// Decodes UTF-8 into code points. Returns false on the first invalid
/// byte sequence (out holds the prefix decoded so far).
bool decode_utf8(std::string_view in, std::u32string& out);

/// True iff the whole string is well-formed UTF-8.
bool valid_utf8(std::string_view in);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);   // Unicode general category P*
bool is_arabic_diacritic(char32_t cp);
char32_t to_lower(char32_t cp);     // simple mapping, identity outside tables

/// Canonical composition for the Arabic block: combining madda/hamza
/// over alef, waw and yeh fold into the precomposed letters
/// (U+0622..U+0626). Other scripts pass through unchanged.
void compose_arabic(std::u32string& cps);

/// Decodes legacy Windows-1256 (Arabic) bytes into code points.
std::u32string decode_cp1256(std::string_view in);

}  // namespace fihris::uni
