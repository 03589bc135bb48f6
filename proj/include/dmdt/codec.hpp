#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dmdt {

enum class MeanMode { automatic, on, off };

/// Two-level codec settings. block_len must be a multiple of d1 * d2 and
/// both divisors fit in one octet.
struct CodecConfig {
    std::size_t d1 = 32;
    std::size_t d2 = 16;
    double theta = 5.0;
    std::size_t block_len = 512;
    MeanMode subtract_mean = MeanMode::automatic;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// One compressed block. Byte layout (little-endian):
///
///   "DMDT" | version u8 | flags u8 (bit0: mean present) | n u32 | d1 u8 | d2 u8
///   | theta f64 | [mean_offset i64] | crc32 u32 | payload_len u32 | payload
///
/// n is the true sample count. When n is not a multiple of d1*d2 the block
/// was zero-padded to the next multiple and decompression truncates.
struct CompressedContainer {
    static constexpr std::uint8_t kVersion = 1;

    std::uint32_t n = 0;
    std::uint8_t d1 = 0;
    std::uint8_t d2 = 0;
    double theta = 0.0;
    std::optional<std::int64_t> mean_offset;
    std::uint32_t checksum = 0;
    std::vector<std::uint8_t> payload;

    /// Length of the block that was transformed.
    std::size_t padded_len() const;

    std::vector<std::uint8_t> to_bytes() const;
    std::size_t size_bytes() const;

    /// Parses one container from the front of `bytes`; `consumed` receives its
    /// length. Throws DecodeError on bad magic, version or truncation.
    static CompressedContainer parse(std::span<const std::uint8_t> bytes,
                                     std::size_t* consumed = nullptr);
};

/// decompose (cosine bases, plan (d1, d2)) -> quantize -> z-order serialize
/// -> entropy encode. len(x) must equal cfg.block_len.
CompressedContainer compress(std::span<const double> x, const CodecConfig& cfg);

/// Throws DecodeError on corrupt payloads or checksum mismatch.
std::vector<double> decompress(const CompressedContainer& c);

/// Splits `samples` into consecutive blocks of cfg.block_len. A ragged final
/// block is zero-padded to the next multiple of d1*d2. Blocks are compressed
/// concurrently when OpenMP is available; output order follows the input.
std::vector<CompressedContainer> compress_stream(std::span<const double> samples,
                                                 const CodecConfig& cfg);

std::vector<double> decompress_stream(std::span<const CompressedContainer> blocks);

/// Concatenation of container bytes, and its inverse.
std::vector<std::uint8_t> serialize_stream(std::span<const CompressedContainer> blocks);
std::vector<CompressedContainer> parse_stream(std::span<const std::uint8_t> bytes);

/// Total size in bits of a container sequence, for compression ratios.
std::uint64_t stream_bits(std::span<const CompressedContainer> blocks);

} // namespace dmdt
