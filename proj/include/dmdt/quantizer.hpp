#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dmdt/plan.hpp"
#include "dmdt/transform.hpp"

namespace dmdt {

struct QuantizerParams {
    double theta;
    DecompositionPlan plan;
};

/// Integer image of a SubbandPyramid in the same z-order layout.
struct QuantizedPyramid {
    QuantizerParams params;
    std::vector<std::int32_t> coeffs;
    /// Rounded mean of the deepest average, removed before quantization.
    std::optional<std::int64_t> mean_offset;

    std::span<const std::int32_t> deepest_average() const noexcept {
        return std::span<const std::int32_t>(coeffs).first(params.plan.deepest_len());
    }
};

/// Scale applied to the deepest average before rounding: 1 / (theta * sqrt(d_1 ... d_k)).
double average_factor(const QuantizerParams& params);

/// Scale applied to the details of `level` (0-based):
/// sqrt(2) / (theta * sqrt(d_1 ... d_{level+1})).
double detail_factor(const QuantizerParams& params, std::size_t level);

/// Factor for every coefficient position of the z-order layout.
std::vector<double> coefficient_factors(const QuantizerParams& params);

/// q = floor(c * f + 0.5) per coefficient. Throws std::invalid_argument for
/// theta <= 0, non-finite coefficients or a plan mismatch, and
/// std::overflow_error when a value leaves the int32 range.
QuantizedPyramid quantize(const SubbandPyramid& pyramid, const QuantizerParams& params,
                          bool subtract_mean);

/// c = q / f per coefficient, then the mean offset is added back to the
/// deepest average.
SubbandPyramid dequantize(const QuantizedPyramid& q);

} // namespace dmdt
