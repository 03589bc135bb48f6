#include "dmdt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dmdt::metrics {

namespace {

struct Energies {
    double signal = 0.0;
    double error = 0.0;
};

Energies energies(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("metrics: length mismatch");
    Energies e;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double diff = x[i] - y[i];
        e.signal += x[i] * x[i];
        e.error += diff * diff;
    }
    if (e.signal == 0.0)
        throw std::invalid_argument("metrics: reference signal has zero energy");
    return e;
}

} // namespace

double prd(std::span<const double> x, std::span<const double> y) {
    const Energies e = energies(x, y);
    return 100.0 * std::sqrt(e.error / e.signal);
}

double snr_db(std::span<const double> x, std::span<const double> y) {
    const Energies e = energies(x, y);
    if (e.error == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(e.signal / e.error);
}

double cr(std::uint64_t original_bits, std::uint64_t compressed_bits) {
    if (original_bits == 0 || compressed_bits == 0)
        throw std::invalid_argument("metrics: bit counts must be positive");
    return static_cast<double>(original_bits) / static_cast<double>(compressed_bits);
}

std::optional<double> qs(double cr, double prd) {
    if (prd == 0.0)
        return std::nullopt;
    return cr / prd;
}

double max_deviation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("metrics: length mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

MetricsReport evaluate(std::span<const double> x, std::span<const double> y,
                       std::uint64_t original_bits, std::uint64_t compressed_bits, double theta) {
    MetricsReport r;
    r.prd = prd(x, y);
    r.cr = cr(original_bits, compressed_bits);
    r.qs = qs(r.cr, r.prd);
    r.snr_db = snr_db(x, y);
    r.max_dev = max_deviation(x, y);
    r.n = x.size();
    r.theta = theta;
    return r;
}

} // namespace dmdt::metrics
