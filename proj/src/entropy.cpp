#include "dmdt/entropy.hpp"

#include <algorithm>
#include <array>

#include "dmdt/error.hpp"
#include "dmdt/range_coder.hpp"

namespace dmdt::entropy {

namespace {

// Context i answers "is the bucket greater than i?" for a unary bucket code.
struct ContextSet {
    std::array<BitModel, kMaxBucket> more;
};

struct Model {
    ContextSet average;
    ContextSet detail;

    ContextSet& for_index(std::size_t i, std::size_t average_count) {
        return i < average_count ? average : detail;
    }
};

} // namespace

std::vector<std::uint8_t> encode(std::span<const std::int32_t> symbols, std::size_t average_count) {
    Model model;
    BinaryEncoder enc;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        ContextSet& ctx = model.for_index(i, average_count);
        const std::uint32_t u = zigzag(symbols[i]);
        const unsigned b = bucket_of(u);
        for (unsigned k = 0; k < b; ++k)
            enc.encode(1, ctx.more[k]);
        if (b < kMaxBucket)
            enc.encode(0, ctx.more[b]);
        // Bit b-1 is implied by the bucket.
        for (unsigned k = b > 1 ? b - 1 : 0; k-- > 0;)
            enc.encode_raw(static_cast<int>((u >> k) & 1u));
    }
    return enc.finish();
}

std::vector<std::int32_t> decode(std::span<const std::uint8_t> payload, std::size_t count,
                                 std::size_t average_count) {
    Model model;
    BinaryDecoder dec(payload);
    std::vector<std::int32_t> out;
    out.reserve(std::min<std::size_t>(count, std::size_t{1} << 20));
    for (std::size_t i = 0; i < count; ++i) {
        ContextSet& ctx = model.for_index(i, average_count);
        unsigned b = 0;
        while (b < kMaxBucket && dec.decode(ctx.more[b]))
            ++b;
        std::uint32_t u = 0;
        if (b > 0) {
            u = 1;
            for (unsigned k = 1; k < b; ++k)
                u = (u << 1) | static_cast<std::uint32_t>(dec.decode_raw());
        }
        out.push_back(unzigzag(u));
    }
    dec.finish();
    return out;
}

} // namespace dmdt::entropy
