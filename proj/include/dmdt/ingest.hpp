#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmdt {

enum class SampleFormat { csv, wav, raw_i16, raw_f32 };

std::optional<SampleFormat> parse_format(std::string_view name);
std::string_view format_name(SampleFormat f);

/// Guess from the file extension (.csv/.txt, .wav, .i16/.raw, .f32);
/// throws IngestError when unknown.
SampleFormat guess_format(const std::filesystem::path& path);

struct IngestSpec {
    std::filesystem::path path;
    SampleFormat format = SampleFormat::csv;
    std::size_t channel = 0;
    /// Overrides the inferred source bit depth used for compression ratios.
    std::optional<int> bit_depth;
    double sample_rate = 0.0;
};

struct Signal {
    std::vector<double> samples;
    int bit_depth = 0;
    double sample_rate = 0.0;
};

/// Reads one channel. Bit depth: 16 for WAV and raw-i16, 32 for raw-f32, and
/// for CSV the smallest integer width that holds every value (32 when any
/// value is fractional). Throws IngestError on malformed input or a missing
/// channel.
Signal ingest(const IngestSpec& spec);

/// Integer sample width needed for `samples`: unsigned when none is
/// negative, two's complement otherwise; 32 for non-integer data.
int infer_bit_depth(std::span<const double> samples);

void write_samples(const std::filesystem::path& path, SampleFormat format,
                   std::span<const double> samples, double sample_rate = 0.0);

} // namespace dmdt
