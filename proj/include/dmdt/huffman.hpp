#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dmdt::huffman {

inline constexpr unsigned kMaxCodeLength = 24;

/// MSB-first bit packer.
class BitWriter {
public:
    void put(std::uint32_t value, unsigned bits);
    /// Pads the last byte with zeros.
    std::vector<std::uint8_t> finish();

private:
    std::vector<std::uint8_t> out_;
    std::uint32_t acc_ = 0;
    unsigned used_ = 0;
};

/// Throws DecodeError when reading past the end.
class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> in) : in_(in) {}
    std::uint32_t get(unsigned bits);
    /// Requires that only zero padding bits of the final byte remain.
    void finish() const;

private:
    std::span<const std::uint8_t> in_;
    std::size_t bitpos_ = 0;
};

/// Code lengths (0 for absent symbols) of a length-limited Huffman code.
/// Ties are broken by symbol index so the table is reproducible.
std::vector<unsigned> code_lengths(std::span<const std::uint64_t> freqs,
                                   unsigned max_len = kMaxCodeLength);

/// Canonical code words for the given lengths: shorter codes first, and
/// ascending symbol order within a length.
std::vector<std::uint32_t> canonical_codes(std::span<const unsigned> lengths);

/// Canonical decoder for a set of code lengths.
class Decoder {
public:
    explicit Decoder(std::span<const unsigned> lengths);
    unsigned decode(BitReader& in) const;

private:
    std::vector<std::uint32_t> first_code_;  // per length
    std::vector<std::uint32_t> first_index_; // per length, into symbols_
    std::vector<std::uint32_t> count_;       // per length
    std::vector<unsigned> symbols_;          // sorted canonically
};

/// Codes a signed integer stream as bucket symbols (see entropy::bucket_of)
/// through one canonical Huffman table, each followed by the bucket's raw
/// low bits. The table travels at the head of the stream.
std::vector<std::uint8_t> encode_symbols(std::span<const std::int32_t> values);
std::vector<std::int32_t> decode_symbols(std::span<const std::uint8_t> bytes, std::size_t count);

} // namespace dmdt::huffman
