#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "dmdt/golden.hpp"

namespace fs = std::filesystem;

namespace {

fs::path copy_fixtures() {
    const auto dir = fs::temp_directory_path() / "dmdt_golden_copy";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& f : dmdt::golden_fixtures())
        for (const char* ext : {".csv", ".dmdt"})
            fs::copy_file(fs::path(DMDT_FIXTURE_DIR) / (f.name + ext), dir / (f.name + ext));
    return dir;
}

void flip_byte(const fs::path& p, std::size_t offset_from_end) {
    std::fstream f(p, std::ios::in | std::ios::out | std::ios::binary);
    f.seekg(0, std::ios::end);
    const auto pos = static_cast<std::streamoff>(f.tellg()) - static_cast<std::streamoff>(offset_from_end);
    f.seekg(pos);
    char c = 0;
    f.get(c);
    f.seekp(pos);
    f.put(static_cast<char>(c ^ 0x21));
}

} // namespace

TEST_CASE("committed fixtures verify") {
    const auto results = dmdt::verify_golden(DMDT_FIXTURE_DIR);
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.message);
        CHECK(r.pass);
    }
}

TEST_CASE("tampered payload fails with a CRC diagnosis") {
    const auto dir = copy_fixtures();
    flip_byte(dir / "golden_64.dmdt", 3);
    const auto results = dmdt::verify_golden(dir);
    CHECK_FALSE(results[0].pass);
    CHECK(results[0].name == "golden_64");
    CHECK(results[0].message.find("offset") != std::string::npos);
    CHECK(results[1].pass);
    fs::remove_all(dir);
}

TEST_CASE("tampered checksum field fails with a CRC diagnosis") {
    const auto dir = copy_fixtures();
    // Header with a mean offset: checksum at 28, payload length at 32.
    std::ifstream in(dir / "golden_64.dmdt", std::ios::binary);
    std::vector<char> bytes((std::istreambuf_iterator<char>(in)), {});
    in.close();
    std::uint32_t plen = 0;
    for (int i = 0; i < 4; ++i)
        plen |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[32 + i])) << (8 * i);
    REQUIRE(36 + plen == bytes.size());
    flip_byte(dir / "golden_64.dmdt", bytes.size() - 28);
    const auto results = dmdt::verify_golden(dir);
    CHECK_FALSE(results[0].pass);
    CHECK(results[0].message.find("CRC32") != std::string::npos);
    fs::remove_all(dir);
}
