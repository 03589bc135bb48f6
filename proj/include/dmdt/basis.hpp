#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dmdt {

/// A d x d analysis matrix B whose rows seed the block transform.
///
/// Rows are stored unnormalized (row-major). The synthesis matrix is the
/// inverse of B, precomputed once: for pairwise-orthogonal rows it is
/// B^T scaled column-wise by 1/||b_i||^2, otherwise it comes from Gaussian
/// elimination with partial pivoting.
class DivisorBasis {
public:
    /// Builds a basis from `d*d` row-major entries. Throws std::invalid_argument
    /// for d < 2, a size mismatch, a zero row or a singular matrix.
    DivisorBasis(std::size_t d, std::vector<double> rows);

    std::size_t d() const noexcept { return d_; }

    std::span<const double> row(std::size_t n) const noexcept { return {rows_.data() + n * d_, d_}; }
    double at(std::size_t n, std::size_t m) const noexcept { return rows_[n * d_ + m]; }
    std::span<const double> rows() const noexcept { return rows_; }

    std::span<const double> row_norms() const noexcept { return row_norms_; }

    /// Row-major d x d inverse of B: x_block = synthesis * s_block.
    std::span<const double> synthesis() const noexcept { return synthesis_; }

    bool has_orthogonal_rows() const noexcept { return orthogonal_; }

private:
    std::size_t d_;
    std::vector<double> rows_;
    std::vector<double> row_norms_;
    std::vector<double> synthesis_;
    bool orthogonal_ = false;
};

/// b[n][m] = cos(pi * n * (2m + 1) / (2d)). Row 0 is all ones.
DivisorBasis build_cosine_basis(std::size_t d);

/// [[1, 1], [1, -1]]
DivisorBasis build_haar_basis();

/// [[1, 1, 1], [2, -1, -1], [0, 1, -1]], a Ramanujan-sum style radix-3 basis.
DivisorBasis build_ramanujan3_basis();

/// One cosine basis per divisor, in order.
std::vector<DivisorBasis> cosine_bases(std::span<const std::size_t> divisors);

} // namespace dmdt
