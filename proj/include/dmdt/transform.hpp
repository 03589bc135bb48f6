#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dmdt/basis.hpp"
#include "dmdt/plan.hpp"

namespace dmdt {

/// Kernel selection. `automatic` uses the OpenMP kernels for inputs of at
/// least kernels::kParallelThreshold samples and the serial reference below.
enum class Execution { automatic, serial, parallel };

/// One level of the block transform. Output is the concatenation of d
/// subbands of length N/d; subband i, entry m is <rows[i], x[m*d:(m+1)*d]>.
/// Throws std::invalid_argument when N is not a multiple of d.
std::vector<double> forward_block(std::span<const double> x, const DivisorBasis& basis,
                                  Execution exec = Execution::automatic);
void forward_block(std::span<const double> x, const DivisorBasis& basis, std::span<double> out,
                   Execution exec = Execution::automatic);

/// Exact inverse of forward_block.
std::vector<double> inverse_block(std::span<const double> s, const DivisorBasis& basis,
                                  Execution exec = Execution::automatic);
void inverse_block(std::span<const double> s, const DivisorBasis& basis, std::span<double> out,
                   Execution exec = Execution::automatic);

/// Multi-level decomposition stored flat in z-order:
///   v^k, w^k_1 .. w^k_{d_k-1}, w^{k-1}_1 .. , ..., w^1_1 .. w^1_{d_1-1}
/// Levels are 0-based here: level 0 is the first split applied to the signal.
class SubbandPyramid {
public:
    explicit SubbandPyramid(DecompositionPlan plan);
    SubbandPyramid(DecompositionPlan plan, std::vector<double> coeffs);

    const DecompositionPlan& plan() const noexcept { return plan_; }

    std::span<double> coeffs() noexcept { return coeffs_; }
    std::span<const double> coeffs() const noexcept { return coeffs_; }

    std::span<double> deepest_average() noexcept;
    std::span<const double> deepest_average() const noexcept;

    /// Detail component i (1 <= i < d_level) of `level`.
    std::span<double> detail(std::size_t level, std::size_t i);
    std::span<const double> detail(std::size_t level, std::size_t i) const;

    /// Offset of the first detail of `level` inside coeffs().
    std::size_t detail_offset(std::size_t level) const;

private:
    DecompositionPlan plan_;
    std::vector<double> coeffs_;
};

/// Throws std::invalid_argument if len(x) differs from the plan or a basis
/// radix does not match its level's divisor.
SubbandPyramid decompose(std::span<const double> x, const DecompositionPlan& plan,
                         std::span<const DivisorBasis> bases,
                         Execution exec = Execution::automatic);

std::vector<double> reconstruct(const SubbandPyramid& pyramid, std::span<const DivisorBasis> bases,
                                Execution exec = Execution::automatic);

/// Pyramid with every subband divided by the row norm that produced it, at
/// every level. With orthogonal rows this is the coefficient vector in an
/// orthonormal basis, so its l2 norm equals that of the signal.
std::vector<double> normalized_coefficients(const SubbandPyramid& pyramid,
                                            std::span<const DivisorBasis> bases);

/// Dense row-major matrix.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) noexcept { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data[r * cols + c]; }
};

/// Two-dimensional decomposition kept in place: at each level the current
/// average block (top-left) is replaced by a d x d grid of sub-blocks whose
/// (0,0) entry is the next average.
class Subband2D {
public:
    Subband2D(DecompositionPlan row_plan, DecompositionPlan col_plan, Matrix coeffs);

    const DecompositionPlan& row_plan() const noexcept { return row_plan_; }
    const DecompositionPlan& col_plan() const noexcept { return col_plan_; }
    const Matrix& coeffs() const noexcept { return coeffs_; }
    Matrix& coeffs() noexcept { return coeffs_; }

    Matrix deepest_average() const;
    /// The d_level^2 - 1 detail blocks of `level`, grid row-major, skipping (0,0).
    std::vector<Matrix> details(std::size_t level) const;
    Matrix block(std::size_t level, std::size_t grid_row, std::size_t grid_col) const;

private:
    DecompositionPlan row_plan_;
    DecompositionPlan col_plan_;
    Matrix coeffs_;
};

/// S = R X H^T per level, recursing on the average block. Both plans must use
/// the same divisor at every level.
Subband2D decompose_2d(const Matrix& x, const DecompositionPlan& row_plan,
                       const DecompositionPlan& col_plan, std::span<const DivisorBasis> bases,
                       Execution exec = Execution::automatic);

Matrix reconstruct_2d(const Subband2D& s, std::span<const DivisorBasis> bases,
                      Execution exec = Execution::automatic);

} // namespace dmdt
