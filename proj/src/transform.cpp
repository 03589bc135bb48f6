#include "dmdt/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "dmdt/kernels.hpp"

namespace dmdt {

namespace {

bool use_parallel(Execution exec, std::size_t n) {
    switch (exec) {
    case Execution::serial:
        return false;
    case Execution::parallel:
        return true;
    case Execution::automatic:
        break;
    }
    return n >= kernels::kParallelThreshold && kernels::max_threads() > 1;
}

void check_block_args(std::size_t in, std::size_t out, std::size_t d, const char* who) {
    if (in % d != 0)
        throw std::invalid_argument(std::string(who) + ": length " + std::to_string(in) +
                                    " is not divisible by " + std::to_string(d));
    if (out != in)
        throw std::invalid_argument(std::string(who) + ": output length mismatch");
}

void check_bases(const DecompositionPlan& plan, std::span<const DivisorBasis> bases) {
    if (bases.size() != plan.levels())
        throw std::invalid_argument("basis count " + std::to_string(bases.size()) +
                                    " does not match plan levels " + std::to_string(plan.levels()));
    for (std::size_t j = 0; j < plan.levels(); ++j)
        if (bases[j].d() != plan.divisor(j))
            throw std::invalid_argument("level " + std::to_string(j + 1) + " basis radix " +
                                        std::to_string(bases[j].d()) + " != divisor " +
                                        std::to_string(plan.divisor(j)));
}

} // namespace

void forward_block(std::span<const double> x, const DivisorBasis& basis, std::span<double> out,
                   Execution exec) {
    check_block_args(x.size(), out.size(), basis.d(), "forward_block");
    if (use_parallel(exec, x.size()))
        kernels::forward_block_parallel(x, basis.rows(), basis.d(), out);
    else
        kernels::forward_block_serial<double>(x, basis.rows(), basis.d(), out);
}

std::vector<double> forward_block(std::span<const double> x, const DivisorBasis& basis,
                                  Execution exec) {
    std::vector<double> out(x.size());
    forward_block(x, basis, out, exec);
    return out;
}

void inverse_block(std::span<const double> s, const DivisorBasis& basis, std::span<double> out,
                   Execution exec) {
    check_block_args(s.size(), out.size(), basis.d(), "inverse_block");
    if (use_parallel(exec, s.size()))
        kernels::inverse_block_parallel(s, basis.synthesis(), basis.d(), out);
    else
        kernels::inverse_block_serial<double>(s, basis.synthesis(), basis.d(), out);
}

std::vector<double> inverse_block(std::span<const double> s, const DivisorBasis& basis,
                                  Execution exec) {
    std::vector<double> out(s.size());
    inverse_block(s, basis, out, exec);
    return out;
}

// --- SubbandPyramid ---------------------------------------------------------

SubbandPyramid::SubbandPyramid(DecompositionPlan plan)
    : plan_(std::move(plan)), coeffs_(plan_.signal_len(), 0.0) {}

SubbandPyramid::SubbandPyramid(DecompositionPlan plan, std::vector<double> coeffs)
    : plan_(std::move(plan)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != plan_.signal_len())
        throw std::invalid_argument("SubbandPyramid: coefficient count " +
                                    std::to_string(coeffs_.size()) + " != plan length " +
                                    std::to_string(plan_.signal_len()));
}

std::span<double> SubbandPyramid::deepest_average() noexcept {
    return std::span<double>(coeffs_).first(plan_.deepest_len());
}

std::span<const double> SubbandPyramid::deepest_average() const noexcept {
    return std::span<const double>(coeffs_).first(plan_.deepest_len());
}

// In z-order the detail block of level j starts right after the whole
// subband array that level j produced its average into, i.e. at the
// subband length of level j.
std::size_t SubbandPyramid::detail_offset(std::size_t level) const {
    return plan_.subband_len(level);
}

std::span<double> SubbandPyramid::detail(std::size_t level, std::size_t i) {
    if (i == 0 || i >= plan_.divisor(level))
        throw std::out_of_range("SubbandPyramid::detail index");
    const std::size_t len = plan_.subband_len(level);
    return std::span<double>(coeffs_).subspan(i * len, len);
}

std::span<const double> SubbandPyramid::detail(std::size_t level, std::size_t i) const {
    if (i == 0 || i >= plan_.divisor(level))
        throw std::out_of_range("SubbandPyramid::detail index");
    const std::size_t len = plan_.subband_len(level);
    return std::span<const double>(coeffs_).subspan(i * len, len);
}

SubbandPyramid decompose(std::span<const double> x, const DecompositionPlan& plan,
                         std::span<const DivisorBasis> bases, Execution exec) {
    if (x.size() != plan.signal_len())
        throw std::invalid_argument("decompose: signal length " + std::to_string(x.size()) +
                                    " != plan length " + std::to_string(plan.signal_len()));
    check_bases(plan, bases);

    std::vector<double> z(x.begin(), x.end());
    std::vector<double> scratch(x.size());
    // Each level rewrites the prefix holding the previous average; the
    // subband layout [avg | w_1 | ... | w_{d-1}] leaves z-order behind.
    for (std::size_t j = 0; j < plan.levels(); ++j) {
        const std::size_t len = plan.input_len(j);
        std::span<double> in(z.data(), len);
        std::span<double> out(scratch.data(), len);
        forward_block(in, bases[j], out, exec);
        std::copy(out.begin(), out.end(), in.begin());
    }
    return SubbandPyramid(plan, std::move(z));
}

std::vector<double> reconstruct(const SubbandPyramid& pyramid, std::span<const DivisorBasis> bases,
                                Execution exec) {
    const DecompositionPlan& plan = pyramid.plan();
    check_bases(plan, bases);

    std::vector<double> x(pyramid.coeffs().begin(), pyramid.coeffs().end());
    std::vector<double> scratch(x.size());
    for (std::size_t j = plan.levels(); j-- > 0;) {
        const std::size_t len = plan.input_len(j);
        std::span<double> in(x.data(), len);
        std::span<double> out(scratch.data(), len);
        inverse_block(in, bases[j], out, exec);
        std::copy(out.begin(), out.end(), in.begin());
    }
    return x;
}

std::vector<double> normalized_coefficients(const SubbandPyramid& pyramid,
                                            std::span<const DivisorBasis> bases) {
    const DecompositionPlan& plan = pyramid.plan();
    check_bases(plan, bases);
    std::vector<double> z(pyramid.coeffs().begin(), pyramid.coeffs().end());
    // Every coefficient of level j and deeper passed through level j's rows;
    // the prefix of length input_len(j) holds exactly those.
    for (std::size_t j = 0; j < plan.levels(); ++j) {
        const std::size_t len = plan.subband_len(j);
        const auto norms = bases[j].row_norms();
        for (std::size_t i = 0; i < plan.divisor(j); ++i)
            for (std::size_t m = 0; m < len; ++m)
                z[i * len + m] /= norms[i];
    }
    return z;
}

} // namespace dmdt
