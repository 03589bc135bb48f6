#pragma once

// Block-transform kernels. The *_serial templates are the reference path:
// generic over the scalar so tests can run them with an operation-counting
// type. The *_parallel variants split the independent blocks across OpenMP
// threads and perform the same per-element arithmetic, so their output is
// bit-identical to the reference.

#include <cstddef>
#include <span>

namespace dmdt::kernels {

/// Inputs shorter than this stay on one thread.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

/// out[i * (N/d) + m] = <rows[i], x[m*d : (m+1)*d]>.
/// Per block: d*d multiplications and d*(d-1) additions.
template <typename T>
void forward_block_serial(std::span<const T> x, std::span<const double> rows, std::size_t d,
                          std::span<T> out) {
    const std::size_t blocks = x.size() / d;
    for (std::size_t m = 0; m < blocks; ++m) {
        const T* xb = x.data() + m * d;
        for (std::size_t i = 0; i < d; ++i) {
            const double* b = rows.data() + i * d;
            T acc = b[0] * xb[0];
            for (std::size_t j = 1; j < d; ++j)
                acc += b[j] * xb[j];
            out[i * blocks + m] = acc;
        }
    }
}

/// x[m*d + j] = sum_i synthesis[j][i] * s[i * (N/d) + m].
template <typename T>
void inverse_block_serial(std::span<const T> s, std::span<const double> synthesis, std::size_t d,
                          std::span<T> out) {
    const std::size_t blocks = s.size() / d;
    for (std::size_t m = 0; m < blocks; ++m) {
        T* xb = out.data() + m * d;
        for (std::size_t j = 0; j < d; ++j) {
            const double* g = synthesis.data() + j * d;
            T acc = g[0] * s[m];
            for (std::size_t i = 1; i < d; ++i)
                acc += g[i] * s[i * blocks + m];
            xb[j] = acc;
        }
    }
}

void forward_block_parallel(std::span<const double> x, std::span<const double> rows, std::size_t d,
                            std::span<double> out);

void inverse_block_parallel(std::span<const double> s, std::span<const double> synthesis,
                            std::size_t d, std::span<double> out);

/// Number of OpenMP threads available, 1 when built without OpenMP.
int max_threads() noexcept;

} // namespace dmdt::kernels
