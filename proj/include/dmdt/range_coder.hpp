#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dmdt {

/// Adaptive probability that the next bit is 1, in units of 2^-16.
/// Starts at 1/2; the adaptation shift grows 2, 3, 4, 5 over the first
/// updates and then stays at 5.
class BitModel {
public:
    std::uint32_t p1() const noexcept { return p_; }
    void update(int bit) noexcept;

private:
    std::uint32_t p_ = 1u << 15;
    std::uint32_t seen_ = 0;
};

/// Carry-less binary arithmetic coder over a 32-bit interval [low, high].
/// Leading bytes are shifted out once low and high agree on them; the flush
/// writes all four bytes of `low`.
class BinaryEncoder {
public:
    void encode(int bit, BitModel& model);
    /// Codes a bit with probability exactly 1/2.
    void encode_raw(int bit);
    /// Writes the final four bytes and returns the payload.
    std::vector<std::uint8_t> finish();

private:
    void encode_with(int bit, std::uint32_t p1);

    std::uint32_t low_ = 0;
    std::uint32_t high_ = 0xFFFFFFFFu;
    std::vector<std::uint8_t> out_;
};

/// Mirror of BinaryEncoder. Every step verifies low <= code <= high and
/// finish() requires that the code equals `low` and that every payload byte
/// was consumed; any violation throws DecodeError.
class BinaryDecoder {
public:
    explicit BinaryDecoder(std::span<const std::uint8_t> payload);

    int decode(BitModel& model);
    int decode_raw();
    void finish() const;

private:
    int decode_with(std::uint32_t p1);
    std::uint8_t next_byte();

    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
    std::uint32_t low_ = 0;
    std::uint32_t high_ = 0xFFFFFFFFu;
    std::uint32_t code_ = 0;
};

} // namespace dmdt
