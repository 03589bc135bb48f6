#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "dmdt/quantizer.hpp"
#include "oracles.hpp"

using dmdt::DecompositionPlan;
using dmdt::QuantizerParams;

TEST_CASE("quantizer factors") {
    const QuantizerParams p{5.0, DecompositionPlan({32, 16}, 512)};
    CHECK(dmdt::average_factor(p) == doctest::Approx(1.0 / (5.0 * std::sqrt(512.0))));
    CHECK(dmdt::detail_factor(p, 0) == doctest::Approx(std::sqrt(2.0) / (5.0 * std::sqrt(32.0))));
    CHECK(dmdt::detail_factor(p, 1) == doctest::Approx(std::sqrt(2.0) / (5.0 * std::sqrt(512.0))));
    const QuantizerParams unit{1.0, DecompositionPlan({2}, 2)};
    CHECK(dmdt::detail_factor(unit, 0) == doctest::Approx(1.0));
}

TEST_CASE("quantize examples") {
    const DecompositionPlan plan({32, 16}, 512);
    dmdt::SubbandPyramid pyr(plan);
    pyr.deepest_average()[0] = 10.0;
    const auto q = dmdt::quantize(pyr, {5.0, plan}, false);
    CHECK(q.coeffs[0] == 0);
    for (auto v : q.coeffs)
        CHECK(v == 0);

    const DecompositionPlan p2({2}, 2);
    dmdt::SubbandPyramid w(p2, {0.0, 7.2});
    const auto qw = dmdt::quantize(w, {1.0, p2}, false);
    CHECK(qw.coeffs[1] == 7);
    CHECK(dmdt::dequantize(qw).coeffs()[1] == 7.0);

    // floor(c f + 0.5): -2.5 rounds up to -2, 2.5 to 3.
    dmdt::SubbandPyramid h(p2, {0.0, -2.5});
    CHECK(dmdt::quantize(h, {1.0, p2}, false).coeffs[1] == -2);
    h.coeffs()[1] = 2.5;
    CHECK(dmdt::quantize(h, {1.0, p2}, false).coeffs[1] == 3);
}

TEST_CASE("dequantize of zeros is zeros") {
    const DecompositionPlan plan({4, 2}, 16);
    dmdt::QuantizedPyramid q{{2.0, plan}, std::vector<std::int32_t>(16, 0), std::nullopt};
    const auto pyr = dmdt::dequantize(q);
    for (double v : pyr.coeffs())
        CHECK(v == 0.0);
}

TEST_CASE("mean subtraction stores the rounded mean") {
    const DecompositionPlan plan({4, 2}, 16);
    const auto bases = dmdt::cosine_bases(plan.divisors());
    std::vector<double> x(16, 1000.4);
    const auto q = dmdt::quantize(dmdt::decompose(x, plan, bases), {1.0, plan}, true);
    REQUIRE(q.mean_offset.has_value());
    // Deepest average entries sum 8 samples: 8003.2 rounds to 8003.
    CHECK(*q.mean_offset == 8003);
    CHECK(q.deepest_average()[0] == 0);
    const auto y = dmdt::reconstruct(dmdt::dequantize(q), bases);
    CHECK(oracle::l2_diff(x, y) <= 0.5 * std::sqrt(16.0));
}

TEST_CASE("property: error bound, monotone coarseness, determinism") {
    std::mt19937_64 rng(404);
    for (int t = 0; t < 100; ++t) {
        const auto rp = oracle::random_plan(rng, 2048);
        const DecompositionPlan plan(rp.divisors, rp.n);
        const auto bases = dmdt::cosine_bases(plan.divisors());
        const auto x = oracle::random_vector(rng, rp.n);
        const auto pyr = dmdt::decompose(x, plan, bases);
        std::size_t prev_nonzero = std::numeric_limits<std::size_t>::max();
        for (double theta : {0.01, 0.1, 1.0, 5.0, 50.0}) {
            const QuantizerParams qp{theta, plan};
            const auto q = dmdt::quantize(pyr, qp, t % 2 == 0);
            const auto y = dmdt::reconstruct(dmdt::dequantize(q), bases);
            CHECK(oracle::l2_diff(x, y) <= theta / 2.0 * std::sqrt(double(rp.n)) * (1 + 1e-12));
            CHECK(dmdt::quantize(pyr, qp, t % 2 == 0).coeffs == q.coeffs);
            std::size_t nz = 0;
            for (std::size_t i = plan.deepest_len(); i < q.coeffs.size(); ++i)
                nz += q.coeffs[i] != 0;
            CHECK(nz <= prev_nonzero);
            prev_nonzero = nz;
        }
    }
}

TEST_CASE("quantizer errors") {
    const DecompositionPlan plan({2}, 4);
    dmdt::SubbandPyramid pyr(plan);
    CHECK_THROWS_AS(dmdt::quantize(pyr, {0.0, plan}, false), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::quantize(pyr, {-1.0, plan}, false), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::quantize(pyr, {std::nan(""), plan}, false), std::invalid_argument);
    CHECK_THROWS_AS(dmdt::quantize(pyr, {1.0, DecompositionPlan({4}, 4)}, false), std::invalid_argument);
    pyr.coeffs()[1] = 1e20;
    CHECK_THROWS_AS(dmdt::quantize(pyr, {1.0, plan}, false), std::overflow_error);
    pyr.coeffs()[1] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(dmdt::quantize(pyr, {1.0, plan}, false), std::invalid_argument);
}
