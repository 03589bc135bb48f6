#include "dmdt/golden.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "dmdt/error.hpp"
#include "dmdt/ingest.hpp"

namespace dmdt {

namespace {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw IngestError("missing fixture file " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<double> read_input(const std::filesystem::path& dir, const GoldenFixture& f) {
    IngestSpec spec;
    spec.path = dir / (f.name + ".csv");
    return ingest(spec).samples;
}

GoldenResult check(const std::filesystem::path& dir, const GoldenFixture& f) {
    GoldenResult res{f.name, false, {}};
    try {
        const auto x = read_input(dir, f);
        const auto expected = read_bytes(dir / (f.name + ".dmdt"));
        const auto actual = compress(x, f.cfg).to_bytes();

        std::ostringstream msg;
        bool ok = true;
        if (actual != expected) {
            ok = false;
            std::size_t at = 0;
            while (at < actual.size() && at < expected.size() && actual[at] == expected[at])
                ++at;
            msg << "container bytes differ from fixture at offset " << at << " (" << actual.size()
                << " vs " << expected.size() << " bytes)";
        }

        try {
            const auto c = CompressedContainer::parse(expected);
            const auto y = decompress(c);
            double err = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
                err += (x[i] - y[i]) * (x[i] - y[i]);
            const double bound = 0.5 * f.cfg.theta * std::sqrt(static_cast<double>(x.size()));
            if (y.size() != x.size() || std::sqrt(err) > bound) {
                ok = false;
                msg << (msg.tellp() > 0 ? "; " : "") << "reconstruction error " << std::sqrt(err)
                    << " exceeds bound " << bound;
            }
        } catch (const DecodeError& e) {
            ok = false;
            msg << (msg.tellp() > 0 ? "; " : "") << "fixture does not decode: " << e.what();
        }
        res.pass = ok;
        res.message = ok ? "byte-identical, error bound holds" : msg.str();
    } catch (const std::exception& e) {
        res.message = e.what();
    }
    return res;
}

} // namespace

std::vector<GoldenFixture> golden_fixtures() {
    return {
        {"golden_64", CodecConfig{8, 4, 1.0, 64, MeanMode::automatic}},
        {"zeros_64", CodecConfig{8, 4, 1.0, 64, MeanMode::automatic}},
    };
}

std::vector<GoldenResult> verify_golden(const std::filesystem::path& dir) {
    std::vector<GoldenResult> out;
    for (const auto& f : golden_fixtures())
        out.push_back(check(dir, f));
    return out;
}

void write_golden(const std::filesystem::path& dir) {
    for (const auto& f : golden_fixtures()) {
        const auto bytes = compress(read_input(dir, f), f.cfg).to_bytes();
        std::ofstream out(dir / (f.name + ".dmdt"), std::ios::binary);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    }
}

} // namespace dmdt
