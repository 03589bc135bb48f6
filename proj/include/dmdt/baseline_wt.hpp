#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dmdt::wt {

/// Wavelet baseline settings: CDF 9/7, `levels` dyadic levels, one global
/// quantization step theta in the near-orthonormal coefficient frame.
struct WtConfig {
    std::size_t levels = 4;
    double theta = 5.0;
    std::size_t block_len = 512;

    void validate() const;
};

/// Byte layout (little-endian):
///
///   "WTBL" | version u8 | flags u8 (0) | n u32 | levels u8 | theta f64
///   | crc32 u32 | payload_len u32 | payload
///
/// The payload is the canonical-Huffman bit stream from
/// huffman::encode_symbols. A ragged block is zero-padded to the next
/// multiple of 2^levels and n records the true length.
struct WtContainer {
    static constexpr std::uint8_t kVersion = 1;

    std::uint32_t n = 0;
    std::uint8_t levels = 0;
    double theta = 0.0;
    std::uint32_t checksum = 0;
    std::vector<std::uint8_t> payload;

    std::size_t padded_len() const;
    std::vector<std::uint8_t> to_bytes() const;
    std::size_t size_bytes() const;
    static WtContainer parse(std::span<const std::uint8_t> bytes, std::size_t* consumed = nullptr);
};

WtContainer wt_compress(std::span<const double> x, const WtConfig& cfg);

/// Throws DecodeError on corrupt payloads or checksum mismatch.
std::vector<double> wt_decompress(const WtContainer& c);

std::vector<WtContainer> wt_compress_stream(std::span<const double> samples, const WtConfig& cfg);
std::vector<double> wt_decompress_stream(std::span<const WtContainer> blocks);
std::uint64_t wt_stream_bits(std::span<const WtContainer> blocks);

} // namespace dmdt::wt
