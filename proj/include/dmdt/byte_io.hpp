#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmdt/error.hpp"

namespace dmdt {

/// Little-endian appender.
class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) { put(v, 4); }
    void u64(std::uint64_t v) { put(v, 8); }
    void i64(std::int64_t v) { put(static_cast<std::uint64_t>(v), 8); }
    void f64(double v) { put(std::bit_cast<std::uint64_t>(v), 8); }
    void bytes(std::span<const std::uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void tag(const char (&magic)[5]) {
        for (int i = 0; i < 4; ++i)
            out_.push_back(static_cast<std::uint8_t>(magic[i]));
    }

    std::vector<std::uint8_t> take() { return std::move(out_); }

private:
    void put(std::uint64_t v, int n) {
        for (int i = 0; i < n; ++i)
            out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }

    std::vector<std::uint8_t> out_;
};

/// Little-endian cursor; reading past the end throws DecodeError.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> in) : in_(in) {}

    std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
    std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
    std::uint64_t u64() { return get(8); }
    std::int64_t i64() { return static_cast<std::int64_t>(get(8)); }
    double f64() { return std::bit_cast<double>(get(8)); }
    std::span<const std::uint8_t> bytes(std::size_t n) {
        require(n);
        auto s = in_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    bool tag_is(const char (&magic)[5]) {
        auto b = bytes(4);
        for (int i = 0; i < 4; ++i)
            if (b[i] != static_cast<std::uint8_t>(magic[i]))
                return false;
        return true;
    }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return in_.size() - pos_; }

private:
    void require(std::size_t n) const {
        if (in_.size() - pos_ < n)
            throw DecodeError("container truncated: need " + std::to_string(n) + " more bytes at offset " +
                              std::to_string(pos_));
    }
    std::uint64_t get(int n) {
        require(static_cast<std::size_t>(n));
        std::uint64_t v = 0;
        for (int i = 0; i < n; ++i)
            v |= static_cast<std::uint64_t>(in_[pos_ + i]) << (8 * i);
        pos_ += static_cast<std::size_t>(n);
        return v;
    }

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

/// CRC32 (zlib polynomial) of the symbols serialized as int32 little-endian.
std::uint32_t symbol_crc32(std::span<const std::int32_t> symbols);

} // namespace dmdt
