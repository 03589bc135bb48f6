#include "dmdt/plan.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace dmdt {

DecompositionPlan::DecompositionPlan(std::vector<std::size_t> divisors, std::size_t signal_len)
    : divisors_(std::move(divisors)), signal_len_(signal_len) {
    if (divisors_.empty())
        throw std::invalid_argument("DecompositionPlan: at least one level is required");
    if (signal_len_ == 0)
        throw std::invalid_argument("DecompositionPlan: signal length must be positive");
    lengths_.reserve(divisors_.size() + 1);
    lengths_.push_back(signal_len_);
    for (std::size_t j = 0; j < divisors_.size(); ++j) {
        const std::size_t d = divisors_[j];
        if (d < 2)
            throw std::invalid_argument("DecompositionPlan: divisor " + std::to_string(d) + " < 2");
        const std::size_t len = lengths_.back();
        if (len % d != 0)
            throw std::invalid_argument("DecompositionPlan: level " + std::to_string(j + 1) +
                                        " length " + std::to_string(len) +
                                        " is not divisible by " + std::to_string(d));
        lengths_.push_back(len / d);
    }
}

} // namespace dmdt
