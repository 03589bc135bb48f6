#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "dmdt/codec.hpp"

namespace dmdt {

/// A committed input `<name>.csv` and its expected container `<name>.dmdt`.
struct GoldenFixture {
    std::string name;
    CodecConfig cfg;
};

std::vector<GoldenFixture> golden_fixtures();

struct GoldenResult {
    std::string name;
    bool pass = false;
    std::string message;
};

/// Recompresses every fixture input, byte-compares against the committed
/// container, then decompresses the committed container and checks the
/// (theta/2)*sqrt(N) error bound. Mismatches carry a diagnosis.
std::vector<GoldenResult> verify_golden(const std::filesystem::path& dir);

/// Writes the fixture containers from their inputs.
void write_golden(const std::filesystem::path& dir);

} // namespace dmdt
