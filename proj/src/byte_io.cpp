#include "dmdt/byte_io.hpp"

#include <zlib.h>

namespace dmdt {

std::uint32_t symbol_crc32(std::span<const std::int32_t> symbols) {
    std::vector<std::uint8_t> buf;
    buf.reserve(symbols.size() * 4);
    for (std::int32_t s : symbols) {
        const auto u = static_cast<std::uint32_t>(s);
        for (int i = 0; i < 4; ++i)
            buf.push_back(static_cast<std::uint8_t>(u >> (8 * i)));
    }
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, buf.data(), static_cast<uInt>(buf.size()));
    return static_cast<std::uint32_t>(crc);
}

} // namespace dmdt
