#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dmdt::entropy {

/// zigzag(v) = (v << 1) ^ (v >> 31): 0, -1, 1, -2, 2 ... -> 0, 1, 2, 3, 4 ...
constexpr std::uint32_t zigzag(std::int32_t v) noexcept {
    return (static_cast<std::uint32_t>(v) << 1) ^ static_cast<std::uint32_t>(v >> 31);
}

constexpr std::int32_t unzigzag(std::uint32_t u) noexcept {
    return static_cast<std::int32_t>((u >> 1) ^ (~(u & 1u) + 1u));
}

/// Number of significant bits of u: 0 for u == 0, up to 32.
constexpr unsigned bucket_of(std::uint32_t u) noexcept {
    unsigned b = 0;
    while (u != 0) {
        ++b;
        u >>= 1;
    }
    return b;
}

inline constexpr unsigned kMaxBucket = 32;

/// Adaptive arithmetic coding of a signed integer stream. The first
/// `average_count` symbols use the average-subband context set, the rest the
/// detail context set. The symbol count is not stored; the caller carries it.
std::vector<std::uint8_t> encode(std::span<const std::int32_t> symbols,
                                 std::size_t average_count = 0);

/// Throws DecodeError on truncated or corrupt payloads.
std::vector<std::int32_t> decode(std::span<const std::uint8_t> payload, std::size_t count,
                                 std::size_t average_count = 0);

} // namespace dmdt::entropy
