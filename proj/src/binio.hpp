#pragma once

// Little-endian binary writer/reader shared by the index and model file
// formats. Strings are u32 length-prefixed UTF-8; doubles are the IEEE
// bit pattern as u64.

#include <bit>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

#include "fihris/errors.hpp"

namespace fihris::detail {

class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }

    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i)
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }

    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    }

    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

    void str(std::string_view s) {
        u32(static_cast<std::uint32_t>(s.size()));
        buf_.append(s);
    }

    void raw(std::string_view s) { buf_.append(s); }

    void patch_u64(std::size_t offset, std::uint64_t v) {
        for (int i = 0; i < 8; ++i)
            buf_[offset + i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    }

    std::size_t size() const { return buf_.size(); }
    const std::string& bytes() const { return buf_; }

private:
    std::string buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::string_view data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(data_[pos_++]);
    }

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(
                     static_cast<unsigned char>(data_[pos_ + i]))
                 << (8 * i);
        pos_ += 4;
        return v;
    }

    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(
                     static_cast<unsigned char>(data_[pos_ + i]))
                 << (8 * i);
        pos_ += 8;
        return v;
    }

    double f64() { return std::bit_cast<double>(u64()); }

    std::string str() {
        std::uint32_t len = u32();
        need(len);
        std::string s(data_.substr(pos_, len));
        pos_ += len;
        return s;
    }

    std::string_view raw(std::size_t n) {
        need(n);
        auto s = data_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n)
            throw TruncatedFileError("file ends inside a record");
    }

    std::string_view data_;
    std::size_t pos_ = 0;
};

std::uint32_t crc32sum(std::string_view data);

/// Writes `bytes` to `path`, failing with IndexIoError on any I/O error.
void write_file_exact(const std::string& path, std::string_view bytes);

/// Reads the whole file; throws IndexIoError if it cannot be opened.
std::string read_file_exact(const std::string& path);

}  // namespace fihris::detail
