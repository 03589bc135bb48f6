#include <cmath>
#include <random>

#include "doctest.h"
#include "dmdt/codec.hpp"
#include "dmdt/error.hpp"
#include "oracles.hpp"

using dmdt::CodecConfig;
using dmdt::CompressedContainer;

TEST_CASE("all-zero input") {
    const CodecConfig cfg;
    const std::vector<double> x(512, 0.0);
    const auto c = dmdt::compress(x, cfg);
    CHECK(c.n == 512);
    CHECK(c.d1 == 32);
    CHECK(c.d2 == 16);
    CHECK(c.payload.size() < 100);
    const auto y = dmdt::decompress(c);
    CHECK(y == x);
}

TEST_CASE("fine theta keeps the half-step bound") {
    std::mt19937_64 rng(12);
    CodecConfig cfg;
    cfg.theta = 0.001;
    const auto x = oracle::random_vector(rng, 512);
    const auto y = dmdt::decompress(dmdt::compress(x, cfg));
    CHECK(oracle::l2_diff(x, y) <= 0.0005 * std::sqrt(512.0));
}

TEST_CASE("container bytes round trip through parse") {
    std::mt19937_64 rng(13);
    for (auto mean : {dmdt::MeanMode::on, dmdt::MeanMode::off}) {
        CodecConfig cfg{8, 4, 2.5, 64, mean};
        const auto x = oracle::random_vector(rng, 64, 0.0, 4000.0);
        const auto c = dmdt::compress(x, cfg);
        CHECK(c.mean_offset.has_value() == (mean == dmdt::MeanMode::on));
        const auto bytes = c.to_bytes();
        CHECK(bytes.size() == c.size_bytes());
        std::size_t used = 0;
        const auto p = CompressedContainer::parse(bytes, &used);
        CHECK(used == bytes.size());
        CHECK(p.to_bytes() == bytes);
        CHECK(dmdt::decompress(p) == dmdt::decompress(c));
    }
}

TEST_CASE("automatic mean mode follows the sign of the input") {
    CodecConfig cfg{8, 4, 1.0, 64, dmdt::MeanMode::automatic};
    CHECK(dmdt::compress(std::vector<double>(64, 7.0), cfg).mean_offset.has_value());
    std::vector<double> neg(64, 7.0);
    neg[3] = -1.0;
    CHECK_FALSE(dmdt::compress(neg, cfg).mean_offset.has_value());
}

TEST_CASE("flipped payload byte is reported") {
    std::mt19937_64 rng(14);
    const auto x = oracle::random_vector(rng, 512);
    const auto c = dmdt::compress(x, CodecConfig{});
    REQUIRE(c.payload.size() > 8);
    for (std::size_t at = 0; at < c.payload.size(); ++at) {
        auto bad = c;
        bad.payload[at] ^= 0x5A;
        CHECK_THROWS_AS(dmdt::decompress(bad), dmdt::DecodeError);
    }
    auto crc = c;
    crc.checksum ^= 1;
    CHECK_THROWS_WITH_AS(dmdt::decompress(crc), doctest::Contains("CRC32"), dmdt::DecodeError);
}

TEST_CASE("stream block counts and ragged tail") {
    std::mt19937_64 rng(15);
    const CodecConfig cfg;
    {
        const auto x = oracle::random_vector(rng, 1536);
        const auto s = dmdt::compress_stream(x, cfg);
        CHECK(s.size() == 3);
        CHECK(dmdt::decompress_stream(s).size() == 1536);
    }
    const auto x = oracle::random_vector(rng, 1300);
    const auto s = dmdt::compress_stream(x, cfg);
    REQUIRE(s.size() == 3);
    CHECK(s[2].n == 276);
    CHECK(s[2].padded_len() == 512);
    const auto y = dmdt::decompress_stream(s);
    REQUIRE(y.size() == 1300);
    CHECK(oracle::l2_diff(std::vector<double>(x.end() - 276, x.end()),
                          std::vector<double>(y.end() - 276, y.end())) <= 2.5 * std::sqrt(512.0));

    const auto bytes = dmdt::serialize_stream(s);
    CHECK(dmdt::stream_bits(s) == 8 * bytes.size());
    const auto back = dmdt::parse_stream(bytes);
    CHECK(dmdt::decompress_stream(back) == y);

    // Smaller block: the tail pads to the next multiple of d1*d2 only.
    const CodecConfig small{4, 2, 1.0, 64, dmdt::MeanMode::off};
    const auto t = dmdt::compress_stream(oracle::random_vector(rng, 70), small);
    REQUIRE(t.size() == 2);
    CHECK(t[1].n == 6);
    CHECK(t[1].padded_len() == 8);
}

TEST_CASE("container parse errors") {
    const auto good = dmdt::compress(std::vector<double>(64, 1.0), CodecConfig{8, 4, 1.0, 64}).to_bytes();
    auto bad = good;
    bad[0] = 'X';
    CHECK_THROWS_WITH_AS(CompressedContainer::parse(bad), doctest::Contains("magic"), dmdt::DecodeError);
    bad = good;
    bad[4] = 9;
    CHECK_THROWS_AS(CompressedContainer::parse(bad), dmdt::DecodeError);
    bad = good;
    bad[5] |= 0x80;
    CHECK_THROWS_AS(CompressedContainer::parse(bad), dmdt::DecodeError);
    bad = good;
    bad[10] = 1;
    CHECK_THROWS_AS(CompressedContainer::parse(bad), dmdt::DecodeError);
    CHECK_THROWS_AS(CompressedContainer::parse(std::span(good).first(good.size() - 1)), dmdt::DecodeError);
    CHECK_THROWS_AS(CompressedContainer::parse(std::span(good).first(10)), dmdt::DecodeError);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(dmdt::compress(std::vector<double>(500), CodecConfig{}), std::invalid_argument);
    CHECK_THROWS_AS((CodecConfig{32, 16, 5.0, 500}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CodecConfig{1, 16, 5.0, 512}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CodecConfig{256, 2, 5.0, 512}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((CodecConfig{32, 16, 0.0, 512}.validate()), std::invalid_argument);
}
