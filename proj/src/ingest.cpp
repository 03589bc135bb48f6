#include "dmdt/ingest.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "dmdt/byte_io.hpp"
#include "dmdt/error.hpp"

namespace dmdt {

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IngestError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    const bool delimited = line.find_first_of(",;") != std::string_view::npos;
    if (delimited) {
        std::size_t start = 0;
        while (true) {
            const std::size_t pos = line.find_first_of(",;", start);
            out.push_back(trim(line.substr(start, pos - start)));
            if (pos == std::string_view::npos)
                break;
            start = pos + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                ++i;
            if (i > start)
                out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return v;
}

Signal read_csv(const IngestSpec& spec) {
    std::ifstream in(spec.path);
    if (!in)
        throw IngestError("cannot open " + spec.path.string());
    Signal sig;
    std::string line;
    std::size_t lineno = 0;
    bool first_data_line = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view view = trim(line);
        if (view.empty() || view.front() == '#')
            continue;
        const auto fields = split_fields(view);
        if (spec.channel >= fields.size())
            throw IngestError(spec.path.string() + ":" + std::to_string(lineno) + ": channel " +
                              std::to_string(spec.channel) + " out of range (" +
                              std::to_string(fields.size()) + " columns)");
        const auto value = parse_number(fields[spec.channel]);
        if (!value) {
            if (first_data_line) { // header row
                first_data_line = false;
                continue;
            }
            throw IngestError(spec.path.string() + ":" + std::to_string(lineno) +
                              ": not a number: '" + std::string(fields[spec.channel]) + "'");
        }
        first_data_line = false;
        if (!std::isfinite(*value))
            throw IngestError(spec.path.string() + ":" + std::to_string(lineno) + ": non-finite value");
        sig.samples.push_back(*value);
    }
    sig.bit_depth = infer_bit_depth(sig.samples);
    return sig;
}

Signal read_wav(const IngestSpec& spec) {
    const auto bytes = read_file(spec.path);
    try {
        ByteReader r(bytes);
        const auto riff = r.bytes(4);
        r.u32();
        const auto wave = r.bytes(4);
        if (!std::equal(riff.begin(), riff.end(), "RIFF") || !std::equal(wave.begin(), wave.end(), "WAVE"))
            throw IngestError(spec.path.string() + ": not a RIFF/WAVE file");

        std::uint16_t channels = 0;
        std::uint16_t bits = 0;
        std::uint32_t rate = 0;
        bool have_fmt = false;
        while (r.remaining() >= 8) {
            const auto id = r.bytes(4);
            const std::uint32_t size = r.u32();
            const std::string tag(id.begin(), id.end());
            if (tag == "fmt ") {
                ByteReader f(r.bytes(size));
                const auto format = static_cast<std::uint16_t>(f.u8() | (f.u8() << 8));
                channels = static_cast<std::uint16_t>(f.u8() | (f.u8() << 8));
                rate = f.u32();
                f.u32();
                f.u8();
                f.u8();
                bits = static_cast<std::uint16_t>(f.u8() | (f.u8() << 8));
                if (format != 1 || bits != 16)
                    throw IngestError(spec.path.string() + ": only 16-bit PCM WAV is supported");
                have_fmt = true;
            } else if (tag == "data") {
                if (!have_fmt || channels == 0)
                    throw IngestError(spec.path.string() + ": data chunk before fmt chunk");
                if (spec.channel >= channels)
                    throw IngestError(spec.path.string() + ": channel " + std::to_string(spec.channel) +
                                      " out of range (" + std::to_string(channels) + " channels)");
                const auto data = r.bytes(std::min<std::size_t>(size, r.remaining()));
                const std::size_t frame = 2u * channels;
                Signal sig;
                sig.bit_depth = 16;
                sig.sample_rate = rate;
                for (std::size_t off = 0; off + frame <= data.size(); off += frame) {
                    const std::size_t p = off + 2 * spec.channel;
                    const auto v = static_cast<std::int16_t>(data[p] | (data[p + 1] << 8));
                    sig.samples.push_back(v);
                }
                return sig;
            } else {
                r.bytes(std::min<std::size_t>(size + (size & 1u), r.remaining()));
            }
        }
    } catch (const DecodeError&) {
        throw IngestError(spec.path.string() + ": truncated WAV file");
    }
    throw IngestError(spec.path.string() + ": WAV file has no data chunk");
}

Signal read_raw(const IngestSpec& spec, bool is_float) {
    if (spec.channel != 0)
        throw IngestError("raw inputs carry a single channel; channel " + std::to_string(spec.channel) +
                          " requested");
    const auto bytes = read_file(spec.path);
    const std::size_t width = is_float ? 4 : 2;
    if (bytes.size() % width != 0)
        throw IngestError(spec.path.string() + ": size is not a multiple of " + std::to_string(width));
    Signal sig;
    sig.bit_depth = is_float ? 32 : 16;
    for (std::size_t off = 0; off < bytes.size(); off += width) {
        if (is_float) {
            const std::uint32_t u = bytes[off] | (bytes[off + 1] << 8) | (bytes[off + 2] << 16) |
                                    (static_cast<std::uint32_t>(bytes[off + 3]) << 24);
            const float f = std::bit_cast<float>(u);
            if (!std::isfinite(f))
                throw IngestError(spec.path.string() + ": non-finite float sample");
            sig.samples.push_back(f);
        } else {
            sig.samples.push_back(static_cast<std::int16_t>(bytes[off] | (bytes[off + 1] << 8)));
        }
    }
    return sig;
}

template <typename T>
T clamp_round(double v) {
    const double r = std::nearbyint(v);
    return static_cast<T>(std::clamp(r, static_cast<double>(std::numeric_limits<T>::min()),
                                     static_cast<double>(std::numeric_limits<T>::max())));
}

} // namespace

std::optional<SampleFormat> parse_format(std::string_view name) {
    if (name == "csv")
        return SampleFormat::csv;
    if (name == "wav")
        return SampleFormat::wav;
    if (name == "raw-i16")
        return SampleFormat::raw_i16;
    if (name == "raw-f32")
        return SampleFormat::raw_f32;
    return std::nullopt;
}

std::string_view format_name(SampleFormat f) {
    switch (f) {
    case SampleFormat::csv:
        return "csv";
    case SampleFormat::wav:
        return "wav";
    case SampleFormat::raw_i16:
        return "raw-i16";
    case SampleFormat::raw_f32:
        return "raw-f32";
    }
    return "?";
}

SampleFormat guess_format(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".csv" || ext == ".txt")
        return SampleFormat::csv;
    if (ext == ".wav")
        return SampleFormat::wav;
    if (ext == ".i16" || ext == ".raw")
        return SampleFormat::raw_i16;
    if (ext == ".f32")
        return SampleFormat::raw_f32;
    throw IngestError("cannot infer the format of " + path.string() + "; pass --format");
}

int infer_bit_depth(std::span<const double> samples) {
    if (samples.empty())
        return 16;
    double lo = 0.0;
    double hi = 0.0;
    for (double v : samples) {
        if (v != std::floor(v) || std::abs(v) > 2147483647.0)
            return 32;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto mag = [](double v) { return static_cast<std::uint64_t>(v); };
    if (lo >= 0.0)
        return std::max(1, static_cast<int>(std::bit_width(mag(hi))));
    const std::uint64_t need = std::max(mag(-lo) - 1, mag(hi));
    return 1 + static_cast<int>(std::bit_width(need));
}

Signal ingest(const IngestSpec& spec) {
    Signal sig;
    switch (spec.format) {
    case SampleFormat::csv:
        sig = read_csv(spec);
        break;
    case SampleFormat::wav:
        sig = read_wav(spec);
        break;
    case SampleFormat::raw_i16:
        sig = read_raw(spec, false);
        break;
    case SampleFormat::raw_f32:
        sig = read_raw(spec, true);
        break;
    }
    if (spec.bit_depth) {
        if (*spec.bit_depth < 1 || *spec.bit_depth > 64)
            throw IngestError("bit depth must be in [1, 64]");
        sig.bit_depth = *spec.bit_depth;
    }
    if (spec.sample_rate > 0.0)
        sig.sample_rate = spec.sample_rate;
    return sig;
}

void write_samples(const std::filesystem::path& path, SampleFormat format,
                   std::span<const double> samples, double sample_rate) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IngestError("cannot write " + path.string());
    ByteWriter w;
    switch (format) {
    case SampleFormat::csv: {
        std::ostringstream s;
        s.precision(17);
        for (double v : samples)
            s << v << '\n';
        out << s.str();
        return;
    }
    case SampleFormat::wav: {
        const auto rate = static_cast<std::uint32_t>(sample_rate > 0.0 ? sample_rate : 8000.0);
        const auto data_bytes = static_cast<std::uint32_t>(samples.size() * 2);
        w.tag("RIFF");
        w.u32(36 + data_bytes);
        w.tag("WAVE");
        w.tag("fmt ");
        w.u32(16);
        w.u8(1); // PCM
        w.u8(0);
        w.u8(1); // mono
        w.u8(0);
        w.u32(rate);
        w.u32(rate * 2);
        w.u8(2);
        w.u8(0);
        w.u8(16);
        w.u8(0);
        w.tag("data");
        w.u32(data_bytes);
        for (double v : samples) {
            const auto u = static_cast<std::uint16_t>(clamp_round<std::int16_t>(v));
            w.u8(static_cast<std::uint8_t>(u));
            w.u8(static_cast<std::uint8_t>(u >> 8));
        }
        break;
    }
    case SampleFormat::raw_i16:
        for (double v : samples) {
            const auto u = static_cast<std::uint16_t>(clamp_round<std::int16_t>(v));
            w.u8(static_cast<std::uint8_t>(u));
            w.u8(static_cast<std::uint8_t>(u >> 8));
        }
        break;
    case SampleFormat::raw_f32:
        for (double v : samples)
            w.u32(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
        break;
    }
    const auto bytes = w.take();
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

} // namespace dmdt
