#pragma once

#include <filesystem>

#include "fihris/index.hpp"

namespace fihris {

// Index file layout (all integers little-endian, strings u32
// length-prefixed UTF-8):
//
//   magic "FIDX" | version u32 | analyzer fingerprint u64 | N u64 |
//   vocab size u64 | total file size u64 |
//   analyzer section (flags u8, stemmer str, stopword count u64,
//                     stopwords str...) |
//   doc table (doc_id, path, category str, token_count u64) x N |
//   postings (term str, df u64, (doc u32, tf u32) x df) x V |
//   crc32 u32 over everything before it
//
// Writing is canonical (docs by doc_id, terms and stopwords sorted), so
// persisting the same index twice produces identical bytes.

inline constexpr std::uint32_t kIndexFormatVersion = 1;

/// Writes the index. Byte-deterministic for equal indexes.
void save_index(const InvertedIndex& index, const std::filesystem::path& path);

/// Reads an index written by save_index. Throws FileFormatError,
/// VersionMismatchError, TruncatedFileError or ChecksumError; a valid
/// file round-trips to an index structurally equal to the saved one.
InvertedIndex load_index(const std::filesystem::path& path);

}  // namespace fihris
