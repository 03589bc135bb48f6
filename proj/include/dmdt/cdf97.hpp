#pragma once

#include <cstddef>
#include <span>

namespace dmdt::wt {

/// CDF 9/7 lifting constants.
inline constexpr double kAlpha = -1.586134342059924;
inline constexpr double kBeta = -0.052980118572961;
inline constexpr double kGamma = 0.882911075530934;
inline constexpr double kDelta = 0.443506852043971;
inline constexpr double kZeta = 1.230174104914001;

/// One analysis level on an even-length vector, in place: the result is
/// [low | high] with whole-sample symmetric extension at both ends. Bands are
/// scaled so the transform is close to orthonormal (low DC gain sqrt 2).
void forward_level(std::span<double> x);
void inverse_level(std::span<double> x);

/// `levels` dyadic levels, each applied to the low band of the previous one.
/// Length must be a multiple of 2^levels. Output is
/// [avg_L | detail_L | detail_{L-1} | ... | detail_1].
void forward(std::span<double> x, std::size_t levels);
void inverse(std::span<double> x, std::size_t levels);

} // namespace dmdt::wt
