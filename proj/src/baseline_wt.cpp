#include "dmdt/baseline_wt.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>

#include "dmdt/byte_io.hpp"
#include "dmdt/cdf97.hpp"
#include "dmdt/error.hpp"
#include "dmdt/huffman.hpp"

namespace dmdt::wt {

namespace {

constexpr char kMagic[5] = "WTBL";

std::size_t round_up(std::size_t n, std::size_t m) { return (n + m - 1) / m * m; }

WtContainer compress_block(std::span<const double> block, std::size_t true_len, const WtConfig& cfg) {
    std::vector<double> c(block.begin(), block.end());
    forward(c, cfg.levels);

    // Bands are already in a near-orthonormal frame, so one step serves all.
    constexpr double lo = std::numeric_limits<std::int32_t>::min();
    constexpr double hi = std::numeric_limits<std::int32_t>::max();
    std::vector<std::int32_t> q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!std::isfinite(c[i]))
            throw std::invalid_argument("wt_compress: non-finite coefficient");
        const double r = std::floor(c[i] / cfg.theta + 0.5);
        if (r < lo || r > hi)
            throw std::overflow_error("wt_compress: coefficient exceeds the 32-bit range");
        q[i] = static_cast<std::int32_t>(r);
    }

    WtContainer out;
    out.n = static_cast<std::uint32_t>(true_len);
    out.levels = static_cast<std::uint8_t>(cfg.levels);
    out.theta = cfg.theta;
    out.checksum = symbol_crc32(q);
    out.payload = huffman::encode_symbols(q);
    return out;
}

} // namespace

void WtConfig::validate() const {
    if (levels < 1 || levels > 16)
        throw std::invalid_argument("wt: levels must be in [1, 16]");
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("wt: theta must be positive and finite");
    if (block_len == 0 || block_len % (std::size_t{1} << levels) != 0)
        throw std::invalid_argument("wt: block length " + std::to_string(block_len) +
                                    " must be a positive multiple of 2^" + std::to_string(levels));
    if (block_len > UINT32_MAX)
        throw std::invalid_argument("wt: block length exceeds 32 bits");
}

std::size_t WtContainer::padded_len() const { return round_up(n, std::size_t{1} << levels); }

std::vector<std::uint8_t> WtContainer::to_bytes() const {
    ByteWriter w;
    w.tag(kMagic);
    w.u8(kVersion);
    w.u8(0);
    w.u32(n);
    w.u8(levels);
    w.f64(theta);
    w.u32(checksum);
    w.u32(static_cast<std::uint32_t>(payload.size()));
    w.bytes(payload);
    return w.take();
}

std::size_t WtContainer::size_bytes() const { return 4 + 1 + 1 + 4 + 1 + 8 + 4 + 4 + payload.size(); }

WtContainer WtContainer::parse(std::span<const std::uint8_t> bytes, std::size_t* consumed) {
    ByteReader r(bytes);
    if (!r.tag_is(kMagic))
        throw DecodeError("bad magic: not a WTBL container");
    const std::uint8_t version = r.u8();
    if (version != kVersion)
        throw DecodeError("unsupported WTBL container version " + std::to_string(version));
    if (r.u8() != 0)
        throw DecodeError("WTBL container has unknown flag bits");
    WtContainer c;
    c.n = r.u32();
    c.levels = r.u8();
    c.theta = r.f64();
    c.checksum = r.u32();
    const std::uint32_t len = r.u32();
    const auto payload = r.bytes(len);
    c.payload.assign(payload.begin(), payload.end());
    if (c.levels < 1 || c.levels > 16)
        throw DecodeError("WTBL container has an invalid level count");
    if (c.n == 0)
        throw DecodeError("WTBL container declares zero samples");
    if (!(c.theta > 0.0) || !std::isfinite(c.theta))
        throw DecodeError("WTBL container has an invalid theta");
    if (consumed)
        *consumed = r.position();
    return c;
}

WtContainer wt_compress(std::span<const double> x, const WtConfig& cfg) {
    cfg.validate();
    if (x.size() != cfg.block_len)
        throw std::invalid_argument("wt_compress: input has " + std::to_string(x.size()) +
                                    " samples, block length is " + std::to_string(cfg.block_len));
    return compress_block(x, x.size(), cfg);
}

std::vector<double> wt_decompress(const WtContainer& c) {
    const std::size_t len = c.padded_len();
    const auto q = huffman::decode_symbols(c.payload, len);
    if (symbol_crc32(q) != c.checksum)
        throw DecodeError("CRC32 mismatch: decoded symbols do not match the container checksum");
    std::vector<double> x(len);
    for (std::size_t i = 0; i < len; ++i)
        x[i] = static_cast<double>(q[i]) * c.theta;
    inverse(x, c.levels);
    x.resize(c.n);
    return x;
}

std::vector<WtContainer> wt_compress_stream(std::span<const double> samples, const WtConfig& cfg) {
    cfg.validate();
    const std::size_t nblocks = (samples.size() + cfg.block_len - 1) / cfg.block_len;
    std::vector<WtContainer> out(nblocks);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        try {
            const std::size_t begin = static_cast<std::size_t>(b) * cfg.block_len;
            const std::size_t len = std::min(cfg.block_len, samples.size() - begin);
            std::vector<double> block(round_up(len, std::size_t{1} << cfg.levels), 0.0);
            std::copy_n(samples.begin() + static_cast<std::ptrdiff_t>(begin), len, block.begin());
            out[b] = compress_block(block, len, cfg);
        } catch (...) {
#pragma omp critical(dmdt_wt_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<double> wt_decompress_stream(std::span<const WtContainer> blocks) {
    std::vector<double> out;
    for (const auto& c : blocks) {
        const auto part = wt_decompress(c);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::uint64_t wt_stream_bits(std::span<const WtContainer> blocks) {
    std::uint64_t bits = 0;
    for (const auto& c : blocks)
        bits += 8ull * c.size_bytes();
    return bits;
}

} // namespace dmdt::wt
