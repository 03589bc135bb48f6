#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace dmdt::metrics {

/// 100 * ||x - y|| / ||x||. Throws std::invalid_argument on a length
/// mismatch or a zero-energy reference.
double prd(std::span<const double> x, std::span<const double> y);

/// 10 * log10(||x||^2 / ||x - y||^2) in dB; +infinity for an exact
/// reconstruction. Throws on length mismatch or zero-energy reference.
double snr_db(std::span<const double> x, std::span<const double> y);

/// original / compressed. Values below 1 are reported as they are.
double cr(std::uint64_t original_bits, std::uint64_t compressed_bits);

/// cr / prd, empty when prd == 0.
std::optional<double> qs(double cr, double prd);

/// ||x - y||_inf
double max_deviation(std::span<const double> x, std::span<const double> y);

struct MetricsReport {
    double prd = 0.0;
    double cr = 0.0;
    std::optional<double> qs;
    double snr_db = 0.0;
    double max_dev = 0.0;
    std::size_t n = 0;
    double theta = 0.0;
};

MetricsReport evaluate(std::span<const double> x, std::span<const double> y,
                       std::uint64_t original_bits, std::uint64_t compressed_bits, double theta);

} // namespace dmdt::metrics
