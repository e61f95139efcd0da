#include "binio.hpp"

#include <zlib.h>

#include <fstream>

namespace fihris::detail {

std::uint32_t crc32sum(std::string_view data) {
    uLong crc = ::crc32(0L, Z_NULL, 0);
    crc = ::crc32(crc, reinterpret_cast<const Bytef*>(data.data()),
                  static_cast<uInt>(data.size()));
    return static_cast<std::uint32_t>(crc);
}

void write_file_exact(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IndexIoError("cannot open for writing: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IndexIoError("short write: " + path);
}

std::string read_file_exact(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IndexIoError("cannot open: " + path);
    std::string bytes((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
    if (in.bad()) throw IndexIoError("read failed: " + path);
    return bytes;
}

}  // namespace fihris::detail
