#include "dmdt/cdf97.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmdt::wt {

namespace {

const double kLowScale = std::numbers::sqrt2 / kZeta;
const double kHighScale = kZeta / std::numbers::sqrt2;

// x[i] += c * (x[i-1] + x[i+1]) over indices of one parity, mirroring at the
// borders (x[-1] = x[1], x[n] = x[n-2]).
void lift(std::span<double> x, std::size_t first, double c) {
    const std::size_t n = x.size();
    for (std::size_t i = first; i < n; i += 2) {
        const double left = i > 0 ? x[i - 1] : x[i + 1];
        const double right = i + 1 < n ? x[i + 1] : x[i - 1];
        x[i] += c * (left + right);
    }
}

void check_len(std::size_t n, std::size_t levels) {
    if (levels == 0 || levels >= 32)
        throw std::invalid_argument("cdf97: levels must be in [1, 31]");
    if (n == 0 || n % (std::size_t{1} << levels) != 0)
        throw std::invalid_argument("cdf97: length " + std::to_string(n) +
                                    " is not a multiple of 2^" + std::to_string(levels));
}

} // namespace

void forward_level(std::span<double> x) {
    const std::size_t n = x.size();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("cdf97: level length must be even and >= 2");
    lift(x, 1, kAlpha);
    lift(x, 0, kBeta);
    lift(x, 1, kGamma);
    lift(x, 0, kDelta);

    std::vector<double> tmp(n);
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
        tmp[i] = x[2 * i] * kLowScale;
        tmp[half + i] = x[2 * i + 1] * kHighScale;
    }
    std::copy(tmp.begin(), tmp.end(), x.begin());
}

void inverse_level(std::span<double> x) {
    const std::size_t n = x.size();
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("cdf97: level length must be even and >= 2");
    std::vector<double> tmp(n);
    const std::size_t half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
        tmp[2 * i] = x[i] / kLowScale;
        tmp[2 * i + 1] = x[half + i] / kHighScale;
    }
    std::copy(tmp.begin(), tmp.end(), x.begin());
    lift(x, 0, -kDelta);
    lift(x, 1, -kGamma);
    lift(x, 0, -kBeta);
    lift(x, 1, -kAlpha);
}

void forward(std::span<double> x, std::size_t levels) {
    check_len(x.size(), levels);
    for (std::size_t j = 0; j < levels; ++j)
        forward_level(x.first(x.size() >> j));
}

void inverse(std::span<double> x, std::size_t levels) {
    check_len(x.size(), levels);
    for (std::size_t j = levels; j-- > 0;)
        inverse_level(x.first(x.size() >> j));
}

} // namespace dmdt::wt
