#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "doctest.h"
#include "dmdt/entropy.hpp"
#include "dmdt/error.hpp"
#include "dmdt/range_coder.hpp"

namespace entropy = dmdt::entropy;

TEST_CASE("zigzag and buckets") {
    CHECK(entropy::zigzag(0) == 0);
    CHECK(entropy::zigzag(-1) == 1);
    CHECK(entropy::zigzag(1) == 2);
    CHECK(entropy::zigzag(std::numeric_limits<std::int32_t>::min()) == 0xFFFFFFFFu);
    for (std::int32_t v : {0, 1, -1, 12345, -98765, std::numeric_limits<std::int32_t>::max(),
                           std::numeric_limits<std::int32_t>::min()})
        CHECK(entropy::unzigzag(entropy::zigzag(v)) == v);
    CHECK(entropy::bucket_of(0) == 0);
    CHECK(entropy::bucket_of(1) == 1);
    CHECK(entropy::bucket_of(3) == 2);
    CHECK(entropy::bucket_of(0xFFFFFFFFu) == entropy::kMaxBucket);
}

TEST_CASE("binary coder round trip with mixed modeled and raw bits") {
    std::mt19937_64 rng(8);
    std::bernoulli_distribution skew(0.9);
    std::vector<int> bits(20000);
    for (auto& b : bits)
        b = skew(rng);
    dmdt::BinaryEncoder enc;
    dmdt::BitModel m;
    for (std::size_t i = 0; i < bits.size(); ++i)
        i % 3 ? enc.encode(bits[i], m) : enc.encode_raw(bits[i]);
    const auto bytes = enc.finish();
    dmdt::BinaryDecoder dec(bytes);
    dmdt::BitModel m2;
    for (std::size_t i = 0; i < bits.size(); ++i)
        CHECK((i % 3 ? dec.decode(m2) : dec.decode_raw()) == bits[i]);
    CHECK_NOTHROW(dec.finish());
}

TEST_CASE("entropy examples") {
    const std::vector<std::int32_t> zeros(10000, 0);
    const auto p = entropy::encode(zeros);
    CHECK(p.size() < 100);
    CHECK(entropy::decode(p, zeros.size()) == zeros);

    const auto empty = entropy::encode({});
    CHECK(empty.size() == 4);
    CHECK(entropy::decode(empty, 0).empty());

    const std::vector<std::int32_t> three{0, 0, 0};
    CHECK(entropy::decode(entropy::encode(three), 3) == three);
}

TEST_CASE("random streams round trip") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int32_t> val(-1000, 1000);
    std::uniform_int_distribution<std::size_t> len(0, 600);
    for (int t = 0; t < 1000; ++t) {
        std::vector<std::int32_t> s(len(rng));
        for (auto& v : s)
            v = val(rng);
        const std::size_t avg = s.empty() ? 0 : s.size() / 7;
        REQUIRE(entropy::decode(entropy::encode(s, avg), s.size(), avg) == s);
    }
    const std::vector<std::int32_t> extremes{std::numeric_limits<std::int32_t>::min(),
                                             std::numeric_limits<std::int32_t>::max(), 0, -1, 1};
    CHECK(entropy::decode(entropy::encode(extremes), extremes.size()) == extremes);
}

TEST_CASE("geometric source codes within entropy + 0.2 bits per symbol") {
    std::mt19937_64 rng(5);
    for (double q : {0.3, 0.6, 0.85}) {
        std::geometric_distribution<int> g(1.0 - q);
        std::bernoulli_distribution sign(0.5);
        std::vector<std::int32_t> s(100000);
        std::map<std::int32_t, std::size_t> hist;
        for (auto& v : s) {
            const int k = g(rng);
            v = sign(rng) ? k : -k;
            ++hist[v];
        }
        double h = 0.0;
        for (const auto& [v, c] : hist) {
            const double pr = double(c) / double(s.size());
            h -= pr * std::log2(pr);
        }
        const auto p = entropy::encode(s);
        CHECK(8.0 * double(p.size()) / double(s.size()) <= h + 0.2);
    }
}

TEST_CASE("corrupt or mismatched payloads raise") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int32_t> val(-50, 50);
    std::vector<std::int32_t> s(500);
    for (auto& v : s)
        v = val(rng);
    const auto p = entropy::encode(s);
    CHECK_THROWS_AS(entropy::decode(p, s.size() + 1), dmdt::DecodeError);
    CHECK_THROWS_AS(entropy::decode(p, s.size() - 1), dmdt::DecodeError);
    CHECK_THROWS_AS(entropy::decode(std::span(p).first(p.size() - 1), s.size()), dmdt::DecodeError);
    CHECK_THROWS_AS(entropy::decode(std::span(p).first(2), 0), dmdt::DecodeError);
    auto extra = p;
    extra.push_back(0);
    CHECK_THROWS_AS(entropy::decode(extra, s.size()), dmdt::DecodeError);
}
