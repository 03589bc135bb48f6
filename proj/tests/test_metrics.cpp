#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dmdt/metrics.hpp"

namespace metrics = dmdt::metrics;
using doctest::Approx;
using V = std::vector<double>;

TEST_CASE("prd") {
    CHECK(metrics::prd(V{1, 2, 3}, V{1, 2, 3}) == 0.0);
    CHECK(metrics::prd(V{1, 0}, V{0, 0}) == Approx(100.0));
    CHECK(metrics::prd(V{3, 4}, V{3, 4.5}) == Approx(10.0));
    CHECK_THROWS_AS(metrics::prd(V{0, 0}, V{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(metrics::prd(V{1}, V{1, 2}), std::invalid_argument);
}

TEST_CASE("snr") {
    CHECK(metrics::snr_db(V{1, 2}, V{1, 2}) == std::numeric_limits<double>::infinity());
    V x(100, 0.0), y(100, 0.0);
    x[0] = 1.0;
    y = x;
    y[1] = 0.1; // |e|^2 = |x|^2 / 100
    CHECK(metrics::snr_db(x, y) == Approx(20.0));
    // SNR and PRD are tied by SNR = -20 log10(PRD / 100).
    const V a{3, 1, 4, 1, 5}, b{3.1, 0.8, 4.2, 1.0, 4.9};
    CHECK(metrics::snr_db(a, b) == Approx(-20.0 * std::log10(metrics::prd(a, b) / 100.0)));
}

TEST_CASE("cr and qs") {
    CHECK(metrics::cr(5632, 1224) == Approx(4.60).epsilon(1e-3));
    CHECK(metrics::cr(800, 800) == 1.0);
    CHECK(metrics::cr(100, 400) == 0.25);
    CHECK_THROWS_AS(metrics::cr(100, 0), std::invalid_argument);
    CHECK(metrics::qs(4.60, 0.13).value() == Approx(35.38).epsilon(1e-3));
    CHECK(metrics::qs(10, 2).value() == 5.0);
    CHECK_FALSE(metrics::qs(10, 0).has_value());
}

TEST_CASE("max deviation") {
    CHECK(metrics::max_deviation(V{1, 2}, V{1, 2}) == 0.0);
    CHECK(metrics::max_deviation(V{0, 0, 0}, V{0, 0.05, -0.1}) == Approx(0.1));
}

TEST_CASE("evaluate bundles the metrics") {
    const V x{3, 4}, y{3, 4.5};
    const auto r = metrics::evaluate(x, y, 22, 11, 1.5);
    CHECK(r.prd == Approx(10.0));
    CHECK(r.cr == 2.0);
    CHECK(r.qs.value() == Approx(0.2));
    CHECK(r.max_dev == Approx(0.5));
    CHECK(r.n == 2);
    CHECK(r.theta == 1.5);
}
