#include "dmdt/kernels.hpp"

#include <cstdint>

#ifdef DMDT_HAVE_OPENMP
#include <omp.h>
#endif

namespace dmdt::kernels {

void forward_block_parallel(std::span<const double> x, std::span<const double> rows, std::size_t d,
                            std::span<double> out) {
    const auto blocks = static_cast<std::int64_t>(x.size() / d);
    const double* xp = x.data();
    const double* bp = rows.data();
    double* op = out.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < blocks; ++m) {
        const double* xb = xp + m * d;
        for (std::size_t i = 0; i < d; ++i) {
            const double* b = bp + i * d;
            double acc = b[0] * xb[0];
            for (std::size_t j = 1; j < d; ++j)
                acc += b[j] * xb[j];
            op[i * blocks + m] = acc;
        }
    }
}

void inverse_block_parallel(std::span<const double> s, std::span<const double> synthesis,
                            std::size_t d, std::span<double> out) {
    const auto blocks = static_cast<std::int64_t>(s.size() / d);
    const double* sp = s.data();
    const double* gp = synthesis.data();
    double* op = out.data();
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < blocks; ++m) {
        double* xb = op + m * d;
        for (std::size_t j = 0; j < d; ++j) {
            const double* g = gp + j * d;
            double acc = g[0] * sp[m];
            for (std::size_t i = 1; i < d; ++i)
                acc += g[i] * sp[i * blocks + m];
            xb[j] = acc;
        }
    }
}

int max_threads() noexcept {
#ifdef DMDT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace dmdt::kernels
