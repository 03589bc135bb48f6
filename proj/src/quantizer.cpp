#include "dmdt/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dmdt {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("quantizer: theta must be positive and finite");
}

double divisor_product(const DecompositionPlan& plan, std::size_t levels) {
    double p = 1.0;
    for (std::size_t j = 0; j < levels; ++j)
        p *= static_cast<double>(plan.divisor(j));
    return p;
}

} // namespace

double average_factor(const QuantizerParams& params) {
    check_theta(params.theta);
    return 1.0 / (params.theta * std::sqrt(divisor_product(params.plan, params.plan.levels())));
}

double detail_factor(const QuantizerParams& params, std::size_t level) {
    check_theta(params.theta);
    return std::numbers::sqrt2 / (params.theta * std::sqrt(divisor_product(params.plan, level + 1)));
}

std::vector<double> coefficient_factors(const QuantizerParams& params) {
    const DecompositionPlan& plan = params.plan;
    std::vector<double> f(plan.signal_len());
    const std::size_t avg = plan.deepest_len();
    std::fill(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(avg), average_factor(params));
    for (std::size_t j = 0; j < plan.levels(); ++j) {
        const std::size_t begin = plan.subband_len(j);
        const std::size_t end = plan.input_len(j);
        std::fill(f.begin() + static_cast<std::ptrdiff_t>(begin),
                  f.begin() + static_cast<std::ptrdiff_t>(end), detail_factor(params, j));
    }
    return f;
}

QuantizedPyramid quantize(const SubbandPyramid& pyramid, const QuantizerParams& params,
                          bool subtract_mean) {
    check_theta(params.theta);
    if (!(pyramid.plan() == params.plan))
        throw std::invalid_argument("quantize: pyramid plan does not match quantizer plan");

    QuantizedPyramid q{params, std::vector<std::int32_t>(pyramid.coeffs().size()), std::nullopt};
    const std::vector<double> factors = coefficient_factors(params);
    const auto coeffs = pyramid.coeffs();
    const std::size_t avg = params.plan.deepest_len();

    double mean = 0.0;
    if (subtract_mean) {
        const auto v = pyramid.deepest_average();
        const double m = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
        if (!std::isfinite(m) || std::abs(m) > 9.0e18)
            throw std::overflow_error("quantize: mean of the average component is out of range");
        q.mean_offset = std::llround(m);
        mean = static_cast<double>(*q.mean_offset);
    }

    constexpr double lo = std::numeric_limits<std::int32_t>::min();
    constexpr double hi = std::numeric_limits<std::int32_t>::max();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double c = i < avg ? coeffs[i] - mean : coeffs[i];
        if (!std::isfinite(c))
            throw std::invalid_argument("quantize: non-finite coefficient at " + std::to_string(i));
        const double r = std::floor(c * factors[i] + 0.5);
        if (r < lo || r > hi)
            throw std::overflow_error("quantize: coefficient " + std::to_string(i) +
                                      " exceeds the 32-bit range");
        q.coeffs[i] = static_cast<std::int32_t>(r);
    }
    return q;
}

SubbandPyramid dequantize(const QuantizedPyramid& q) {
    const QuantizerParams& params = q.params;
    if (q.coeffs.size() != params.plan.signal_len())
        throw std::invalid_argument("dequantize: coefficient count does not match plan");
    const std::vector<double> factors = coefficient_factors(params);
    std::vector<double> c(q.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = static_cast<double>(q.coeffs[i]) / factors[i];
    if (q.mean_offset) {
        const double mean = static_cast<double>(*q.mean_offset);
        for (std::size_t i = 0; i < params.plan.deepest_len(); ++i)
            c[i] += mean;
    }
    return SubbandPyramid(params.plan, std::move(c));
}

} // namespace dmdt
