#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dmdt {

/// Ordered divisors (d_1, ..., d_k) validated against a signal length N.
/// Level j (0-based) transforms a vector of length N / (d_1 * ... * d_j).
class DecompositionPlan {
public:
    /// Throws std::invalid_argument unless k >= 1, every d >= 2 and the
    /// divisibility chain N | d_1, (N/d_1) | d_2, ... holds.
    DecompositionPlan(std::vector<std::size_t> divisors, std::size_t signal_len);

    std::span<const std::size_t> divisors() const noexcept { return divisors_; }
    std::size_t divisor(std::size_t level) const { return divisors_.at(level); }
    std::size_t levels() const noexcept { return divisors_.size(); }
    std::size_t signal_len() const noexcept { return signal_len_; }

    /// Length of the vector entering `level`.
    std::size_t input_len(std::size_t level) const { return lengths_.at(level); }

    /// Length of each subband produced by `level`.
    std::size_t subband_len(std::size_t level) const { return lengths_.at(level + 1); }

    /// Length of the deepest average component.
    std::size_t deepest_len() const noexcept { return lengths_.back(); }

    friend bool operator==(const DecompositionPlan&, const DecompositionPlan&) = default;

private:
    std::vector<std::size_t> divisors_;
    std::size_t signal_len_;
    std::vector<std::size_t> lengths_;
};

} // namespace dmdt
