#include "dmdt/codec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>

#include "dmdt/basis.hpp"
#include "dmdt/byte_io.hpp"
#include "dmdt/entropy.hpp"
#include "dmdt/error.hpp"
#include "dmdt/quantizer.hpp"
#include "dmdt/transform.hpp"

namespace dmdt {

namespace {

constexpr char kMagic[5] = "DMDT";

std::size_t round_up(std::size_t n, std::size_t m) { return (n + m - 1) / m * m; }

void check_divisors(std::size_t d1, std::size_t d2) {
    if (d1 < 2 || d2 < 2)
        throw std::invalid_argument("codec: divisors must be >= 2");
    if (d1 > 255 || d2 > 255)
        throw std::invalid_argument("codec: divisors must fit in one octet (<= 255)");
}

bool all_non_negative(std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0; });
}

// Transform and code a block whose length is already a multiple of d1*d2;
// `true_len` is what goes into the header.
CompressedContainer compress_block(std::span<const double> block, std::size_t true_len,
                                   const CodecConfig& cfg) {
    const DecompositionPlan plan({cfg.d1, cfg.d2}, block.size());
    const auto bases = cosine_bases(plan.divisors());

    bool mean = false;
    switch (cfg.subtract_mean) {
    case MeanMode::on:
        mean = true;
        break;
    case MeanMode::off:
        mean = false;
        break;
    case MeanMode::automatic:
        mean = all_non_negative(block);
        break;
    }

    const SubbandPyramid pyramid = decompose(block, plan, bases, Execution::serial);
    const QuantizedPyramid q = quantize(pyramid, QuantizerParams{cfg.theta, plan}, mean);

    CompressedContainer c;
    c.n = static_cast<std::uint32_t>(true_len);
    c.d1 = static_cast<std::uint8_t>(cfg.d1);
    c.d2 = static_cast<std::uint8_t>(cfg.d2);
    c.theta = cfg.theta;
    c.mean_offset = q.mean_offset;
    c.checksum = symbol_crc32(q.coeffs);
    c.payload = entropy::encode(q.coeffs, plan.deepest_len());
    return c;
}

} // namespace

void CodecConfig::validate() const {
    check_divisors(d1, d2);
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("codec: theta must be positive and finite");
    if (block_len == 0 || block_len % (d1 * d2) != 0)
        throw std::invalid_argument("codec: block length " + std::to_string(block_len) +
                                    " must be a positive multiple of d1*d2 = " +
                                    std::to_string(d1 * d2));
    if (block_len > UINT32_MAX)
        throw std::invalid_argument("codec: block length exceeds 32 bits");
}

std::size_t CompressedContainer::padded_len() const {
    return round_up(n, static_cast<std::size_t>(d1) * d2);
}

std::vector<std::uint8_t> CompressedContainer::to_bytes() const {
    ByteWriter w;
    w.tag(kMagic);
    w.u8(kVersion);
    w.u8(mean_offset ? 1 : 0);
    w.u32(n);
    w.u8(d1);
    w.u8(d2);
    w.f64(theta);
    if (mean_offset)
        w.i64(*mean_offset);
    w.u32(checksum);
    w.u32(static_cast<std::uint32_t>(payload.size()));
    w.bytes(payload);
    return w.take();
}

std::size_t CompressedContainer::size_bytes() const {
    return 4 + 1 + 1 + 4 + 1 + 1 + 8 + (mean_offset ? 8 : 0) + 4 + 4 + payload.size();
}

CompressedContainer CompressedContainer::parse(std::span<const std::uint8_t> bytes,
                                               std::size_t* consumed) {
    ByteReader r(bytes);
    if (!r.tag_is(kMagic))
        throw DecodeError("bad magic: not a DMDT container");
    const std::uint8_t version = r.u8();
    if (version != kVersion)
        throw DecodeError("unsupported DMDT container version " + std::to_string(version));
    const std::uint8_t flags = r.u8();
    if ((flags & ~1u) != 0)
        throw DecodeError("DMDT container has unknown flag bits");

    CompressedContainer c;
    c.n = r.u32();
    c.d1 = r.u8();
    c.d2 = r.u8();
    c.theta = r.f64();
    if (flags & 1u)
        c.mean_offset = r.i64();
    c.checksum = r.u32();
    const std::uint32_t len = r.u32();
    const auto payload = r.bytes(len);
    c.payload.assign(payload.begin(), payload.end());

    if (c.d1 < 2 || c.d2 < 2)
        throw DecodeError("DMDT container has a divisor < 2");
    if (c.n == 0)
        throw DecodeError("DMDT container declares zero samples");
    if (!(c.theta > 0.0) || !std::isfinite(c.theta))
        throw DecodeError("DMDT container has an invalid theta");
    if (consumed)
        *consumed = r.position();
    return c;
}

CompressedContainer compress(std::span<const double> x, const CodecConfig& cfg) {
    cfg.validate();
    if (x.size() != cfg.block_len)
        throw std::invalid_argument("compress: input has " + std::to_string(x.size()) +
                                    " samples, block length is " + std::to_string(cfg.block_len));
    return compress_block(x, x.size(), cfg);
}

std::vector<double> decompress(const CompressedContainer& c) {
    check_divisors(c.d1, c.d2);
    const std::size_t len = c.padded_len();
    const DecompositionPlan plan({c.d1, c.d2}, len);

    std::vector<std::int32_t> symbols = entropy::decode(c.payload, len, plan.deepest_len());
    if (symbol_crc32(symbols) != c.checksum)
        throw DecodeError("CRC32 mismatch: decoded symbols do not match the container checksum");

    QuantizedPyramid q{QuantizerParams{c.theta, plan}, std::move(symbols), c.mean_offset};
    const auto bases = cosine_bases(plan.divisors());
    std::vector<double> x = reconstruct(dequantize(q), bases, Execution::serial);
    x.resize(c.n);
    return x;
}

std::vector<CompressedContainer> compress_stream(std::span<const double> samples,
                                                 const CodecConfig& cfg) {
    cfg.validate();
    const std::size_t nblocks = (samples.size() + cfg.block_len - 1) / cfg.block_len;
    std::vector<CompressedContainer> out(nblocks);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
        try {
            const std::size_t begin = static_cast<std::size_t>(b) * cfg.block_len;
            const std::size_t len = std::min(cfg.block_len, samples.size() - begin);
            auto block = samples.subspan(begin, len);
            if (len == cfg.block_len) {
                out[b] = compress_block(block, len, cfg);
            } else {
                std::vector<double> padded(round_up(len, cfg.d1 * cfg.d2), 0.0);
                std::copy(block.begin(), block.end(), padded.begin());
                out[b] = compress_block(padded, len, cfg);
            }
        } catch (...) {
#pragma omp critical(dmdt_stream_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<double> decompress_stream(std::span<const CompressedContainer> blocks) {
    std::vector<std::vector<double>> parts(blocks.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks.size()); ++b) {
        try {
            parts[b] = decompress(blocks[b]);
        } catch (...) {
#pragma omp critical(dmdt_stream_failure)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<double> out;
    for (const auto& p : parts)
        out.insert(out.end(), p.begin(), p.end());
    return out;
}

std::vector<std::uint8_t> serialize_stream(std::span<const CompressedContainer> blocks) {
    std::vector<std::uint8_t> out;
    for (const auto& c : blocks) {
        const auto b = c.to_bytes();
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::vector<CompressedContainer> parse_stream(std::span<const std::uint8_t> bytes) {
    std::vector<CompressedContainer> out;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        std::size_t used = 0;
        out.push_back(CompressedContainer::parse(bytes.subspan(pos), &used));
        pos += used;
    }
    return out;
}

std::uint64_t stream_bits(std::span<const CompressedContainer> blocks) {
    std::uint64_t bits = 0;
    for (const auto& c : blocks)
        bits += 8ull * c.size_bytes();
    return bits;
}

} // namespace dmdt
