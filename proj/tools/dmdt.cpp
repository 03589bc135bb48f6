#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include "CLI11.hpp"
#include "dmdt/baseline_wt.hpp"
#include "dmdt/codec.hpp"
#include "dmdt/error.hpp"
#include "dmdt/golden.hpp"
#include "dmdt/ingest.hpp"
#include "dmdt/metrics.hpp"
#include "dmdt/sweep.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitVerify = 3;

struct Options {
    std::string codec = "dmdt";
    std::size_t d1 = 32;
    std::size_t d2 = 16;
    double theta = 5.0;
    std::size_t block_len = 512;
    std::size_t levels = 4;
    std::string format;
    std::size_t channel = 0;
    int bit_depth = 0;
    std::string input;
    std::string out;
    std::string report;
    std::string sweep;
    std::string mean = "auto";
    std::string fixtures;
    std::string plot;
    bool regenerate = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

dmdt::CodecKind codec_of(const Options& o) {
    const auto c = dmdt::parse_codec(o.codec);
    if (!c)
        throw UsageError("unknown codec '" + o.codec + "' (dmdt or wt)");
    return *c;
}

dmdt::MeanMode mean_of(const Options& o) {
    if (o.mean == "auto")
        return dmdt::MeanMode::automatic;
    if (o.mean == "on")
        return dmdt::MeanMode::on;
    if (o.mean == "off")
        return dmdt::MeanMode::off;
    throw UsageError("--mean must be auto, on or off");
}

std::optional<dmdt::SampleFormat> format_of(const Options& o) {
    if (o.format.empty())
        return std::nullopt;
    const auto f = dmdt::parse_format(o.format);
    if (!f)
        throw UsageError("unknown format '" + o.format + "' (csv, wav, raw-i16, raw-f32)");
    return f;
}

dmdt::CodecConfig codec_config(const Options& o) {
    dmdt::CodecConfig c{o.d1, o.d2, o.theta, o.block_len, mean_of(o)};
    c.validate();
    return c;
}

dmdt::wt::WtConfig wt_config(const Options& o) {
    dmdt::wt::WtConfig c{o.levels, o.theta, o.block_len};
    c.validate();
    return c;
}

dmdt::Signal load_signal(const Options& o) {
    if (o.input.empty())
        throw UsageError("--input is required");
    dmdt::IngestSpec spec;
    spec.path = o.input;
    spec.format = format_of(o).value_or(dmdt::guess_format(spec.path));
    spec.channel = o.channel;
    if (o.bit_depth > 0)
        spec.bit_depth = o.bit_depth;
    return dmdt::ingest(spec);
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw dmdt::IngestError("cannot open " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const fs::path& p, std::span<const std::uint8_t> bytes) {
    std::ofstream out(p, std::ios::binary);
    if (!out || !out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size())))
        throw dmdt::IngestError("cannot write " + p.string());
}

bool is_wt_stream(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 4 && std::equal(bytes.begin(), bytes.begin() + 4, "WTBL");
}

std::vector<dmdt::wt::WtContainer> parse_wt_stream(std::span<const std::uint8_t> bytes) {
    std::vector<dmdt::wt::WtContainer> out;
    while (!bytes.empty()) {
        std::size_t used = 0;
        out.push_back(dmdt::wt::WtContainer::parse(bytes, &used));
        bytes = bytes.subspan(used);
    }
    if (out.empty())
        throw dmdt::DecodeError("empty container stream");
    return out;
}

struct Encoded {
    std::vector<std::uint8_t> bytes;
    std::size_t blocks = 0;
};

Encoded encode(const Options& o, std::span<const double> x) {
    if (codec_of(o) == dmdt::CodecKind::wt) {
        const auto s = dmdt::wt::wt_compress_stream(x, wt_config(o));
        Encoded e{{}, s.size()};
        for (const auto& c : s) {
            const auto b = c.to_bytes();
            e.bytes.insert(e.bytes.end(), b.begin(), b.end());
        }
        return e;
    }
    const auto s = dmdt::compress_stream(x, codec_config(o));
    return {dmdt::serialize_stream(s), s.size()};
}

std::vector<double> decode(std::span<const std::uint8_t> bytes) {
    if (is_wt_stream(bytes))
        return dmdt::wt::wt_decompress_stream(parse_wt_stream(bytes));
    return dmdt::decompress_stream(dmdt::parse_stream(bytes));
}

int cmd_compress(const Options& o) {
    const auto sig = load_signal(o);
    if (sig.samples.empty())
        throw dmdt::IngestError(o.input + " has no samples");
    const auto e = encode(o, sig.samples);
    const fs::path out = o.out.empty() ? fs::path(o.input).replace_extension(codec_of(o) == dmdt::CodecKind::wt ? ".wtbl" : ".dmdt") : fs::path(o.out);
    write_bytes(out, e.bytes);
    const double cr = dmdt::metrics::cr(sig.samples.size() * static_cast<std::uint64_t>(sig.bit_depth),
                                        8 * static_cast<std::uint64_t>(e.bytes.size()));
    std::printf("%s: %zu samples, %d-bit, %zu blocks, %zu bytes, CR %.3f\n", out.c_str(), sig.samples.size(),
                sig.bit_depth, e.blocks, e.bytes.size(), cr);
    return 0;
}

int cmd_decompress(const Options& o) {
    if (o.input.empty())
        throw UsageError("--input is required");
    const auto x = decode(read_bytes(o.input));
    const fs::path out = o.out.empty() ? fs::path(o.input).replace_extension(".csv") : fs::path(o.out);
    const auto fmt = format_of(o).value_or(dmdt::guess_format(out));
    dmdt::write_samples(out, fmt, x);
    std::printf("%s: %zu samples\n", out.c_str(), x.size());
    return 0;
}

int cmd_info(const Options& o) {
    if (o.input.empty())
        throw UsageError("--input is required");
    const auto bytes = read_bytes(o.input);
    if (is_wt_stream(bytes)) {
        std::printf("block  n       levels  theta       payload  crc32\n");
        std::size_t i = 0;
        for (const auto& c : parse_wt_stream(bytes))
            std::printf("%-6zu %-7u %-7u %-11g %-8zu %08x\n", i++, c.n, c.levels, c.theta, c.payload.size(),
                        c.checksum);
        return 0;
    }
    std::printf("block  n       d1   d2   theta       mean        payload  crc32\n");
    std::size_t i = 0;
    for (const auto& c : dmdt::parse_stream(bytes)) {
        const std::string mean = c.mean_offset ? std::to_string(*c.mean_offset) : "-";
        std::printf("%-6zu %-7u %-4u %-4u %-11g %-11s %-8zu %08x\n", i++, c.n, c.d1, c.d2, c.theta, mean.c_str(),
                    c.payload.size(), c.checksum);
    }
    return 0;
}

void emit_report(const Options& o, const std::vector<dmdt::ReportRow>& rows) {
    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file)
            throw dmdt::IngestError("cannot write " + o.out);
    }
    std::ostream& out = o.out.empty() ? std::cout : file;
    if (o.report == "json")
        dmdt::write_report_json(out, rows);
    else if (o.report.empty() || o.report == "csv")
        dmdt::write_report_csv(out, rows);
    else
        throw UsageError("--report must be csv or json");
    if (!o.plot.empty()) {
        std::ofstream p(o.plot);
        if (!p)
            throw dmdt::IngestError("cannot write " + o.plot);
        dmdt::write_plot_data(p, rows);
    }
}

dmdt::SweepConfig sweep_config(const Options& o, std::vector<double> thetas) {
    dmdt::SweepConfig c;
    c.codec = codec_of(o);
    c.d1 = o.d1;
    c.d2 = o.d2;
    c.block_len = o.block_len;
    c.levels = o.levels;
    c.subtract_mean = mean_of(o);
    c.thetas = std::move(thetas);
    if (c.codec == dmdt::CodecKind::wt)
        wt_config(o);
    else
        codec_config(o);
    return c;
}

dmdt::Dataset load(const Options& o) {
    if (o.input.empty())
        throw UsageError("--input is required");
    dmdt::DatasetOptions d;
    d.format = format_of(o);
    d.channel = o.channel;
    if (o.bit_depth > 0)
        d.bit_depth = o.bit_depth;
    return dmdt::load_dataset(o.input, d);
}

int cmd_bench(const Options& o) {
    const auto ds = load(o);
    const auto rows = dmdt::run_sweep(ds, sweep_config(o, {o.theta}));
    if (!o.report.empty() || !o.out.empty()) {
        emit_report(o, rows);
        return 0;
    }
    for (const auto& r : rows) {
        const std::string qs = r.qs ? std::to_string(*r.qs) : "undefined";
        std::printf("%s: n=%zu theta=%g CR=%.3f PRD=%.4f%% SNR=%.2f dB QS=%s max_dev=%.4g enc=%.2f ms dec=%.2f ms\n",
                    r.record.c_str(), r.n, r.theta, r.cr, r.prd, r.snr_db, qs.c_str(), r.max_dev, r.enc_time_ms,
                    r.dec_time_ms);
    }
    return 0;
}

int cmd_sweep(const Options& o) {
    if (o.sweep.empty())
        throw UsageError("--sweep is required (a:b:step or a comma list)");
    const auto ds = load(o);
    emit_report(o, dmdt::run_sweep(ds, sweep_config(o, dmdt::parse_theta_grid(o.sweep))));
    return 0;
}

int cmd_verify(const Options& o) {
    const fs::path dir = o.fixtures.empty() ? fs::path("tests/fixtures") : fs::path(o.fixtures);
    if (o.regenerate) {
        dmdt::write_golden(dir);
        std::printf("wrote golden fixtures to %s\n", dir.c_str());
        return 0;
    }
    int failures = 0;
    for (const auto& r : dmdt::verify_golden(dir)) {
        std::printf("%s %s%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.message.empty() ? "" : ": ",
                    r.message.c_str());
        failures += !r.pass;
    }
    return failures ? kExitVerify : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DMDT lossy compression for 1D sensor signals"};
    app.set_config("--config", "", "key=value file supplying defaults for any flag");
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--codec", o.codec, "dmdt or wt")->capture_default_str();
    app.add_option("--d1", o.d1, "first-level divisor")->capture_default_str();
    app.add_option("--d2", o.d2, "second-level divisor")->capture_default_str();
    app.add_option("--theta", o.theta, "quantization parameter")->capture_default_str();
    app.add_option("--block-len", o.block_len, "samples per container")->capture_default_str();
    app.add_option("--levels", o.levels, "wavelet levels for --codec wt")->capture_default_str();
    app.add_option("--format", o.format, "csv, wav, raw-i16 or raw-f32 (default: by extension)");
    app.add_option("--channel", o.channel, "column or channel index")->capture_default_str();
    app.add_option("--bit-depth", o.bit_depth, "bits per original sample (default: inferred)");
    app.add_option("--mean", o.mean, "mean subtraction: auto, on or off")->capture_default_str();
    app.add_option("-i,--input", o.input, "input file or dataset directory");
    app.add_option("-o,--out", o.out, "output path");
    app.add_option("--report", o.report, "report format: csv or json");
    app.add_option("--sweep", o.sweep, "theta grid, a:b:step or a comma list");
    app.add_option("--plot", o.plot, "also write theta/CR/SNR plot data here");
    app.add_option("--fixtures", o.fixtures, "golden fixture directory");

    std::map<std::string, int (*)(const Options&)> handlers{
        {"compress", cmd_compress}, {"decompress", cmd_decompress}, {"info", cmd_info},
        {"bench", cmd_bench},       {"sweep", cmd_sweep},           {"verify", cmd_verify},
    };
    app.add_subcommand("compress", "encode a signal into a container stream");
    app.add_subcommand("decompress", "decode a container stream into samples");
    app.add_subcommand("info", "print container headers");
    app.add_subcommand("bench", "compress, decompress and report metrics at one theta");
    app.add_subcommand("sweep", "run a theta sweep over a file or dataset directory");
    app.add_subcommand("verify", "check the golden container fixtures")
        ->add_flag("--regenerate", o.regenerate, "rewrite the fixtures instead of checking");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (const auto* sub : app.get_subcommands())
            return handlers.at(sub->get_name())(o);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "dmdt: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "dmdt: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "dmdt: %s\n", e.what());
        return kExitData;
    }
    return kExitUsage;
}
