#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "dmdt/transform.hpp"

namespace dmdt {

namespace {

void check_plans(const DecompositionPlan& row_plan, const DecompositionPlan& col_plan,
                 std::span<const DivisorBasis> bases) {
    if (row_plan.levels() != col_plan.levels() ||
        !std::equal(row_plan.divisors().begin(), row_plan.divisors().end(),
                    col_plan.divisors().begin()))
        throw std::invalid_argument("2D decomposition needs the same divisor per level in both dimensions");
    if (bases.size() != row_plan.levels())
        throw std::invalid_argument("2D decomposition: basis count does not match plan levels");
    for (std::size_t j = 0; j < bases.size(); ++j)
        if (bases[j].d() != row_plan.divisor(j))
            throw std::invalid_argument("2D decomposition: level " + std::to_string(j + 1) +
                                        " basis radix mismatch");
}

using BlockFn = void (*)(std::span<const double>, const DivisorBasis&, std::span<double>, Execution);

// Applies `fn` to every column, then every row, of the top-left rows x cols
// corner of `m`. Columns and rows are independent, so they are split across
// threads; each line runs the serial kernel.
void apply_separable(Matrix& m, std::size_t rows, std::size_t cols, const DivisorBasis& basis,
                     BlockFn fn, bool parallel, bool columns_first) {
    auto do_columns = [&] {
        const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static) if (parallel)
        for (std::int64_t c = 0; c < n; ++c) {
            std::vector<double> line(rows), out(rows);
            for (std::size_t r = 0; r < rows; ++r)
                line[r] = m(r, c);
            fn(line, basis, out, Execution::serial);
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = out[r];
        }
    };
    auto do_rows = [&] {
        const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(static) if (parallel)
        for (std::int64_t r = 0; r < n; ++r) {
            std::span<double> line(m.data.data() + r * m.cols, cols);
            std::vector<double> out(cols);
            fn(line, basis, out, Execution::serial);
            std::copy(out.begin(), out.end(), line.begin());
        }
    };
    if (columns_first) {
        do_columns();
        do_rows();
    } else {
        do_rows();
        do_columns();
    }
}

bool parallel_2d(Execution exec, std::size_t elements) {
    if (exec == Execution::serial)
        return false;
    if (exec == Execution::parallel)
        return true;
    return elements >= 4096;
}

void forward_fn(std::span<const double> x, const DivisorBasis& b, std::span<double> out, Execution e) {
    forward_block(x, b, out, e);
}

void inverse_fn(std::span<const double> x, const DivisorBasis& b, std::span<double> out, Execution e) {
    inverse_block(x, b, out, e);
}

} // namespace

Subband2D::Subband2D(DecompositionPlan row_plan, DecompositionPlan col_plan, Matrix coeffs)
    : row_plan_(std::move(row_plan)), col_plan_(std::move(col_plan)), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows != row_plan_.signal_len() || coeffs_.cols != col_plan_.signal_len())
        throw std::invalid_argument("Subband2D: matrix shape does not match plans");
}

Matrix Subband2D::block(std::size_t level, std::size_t grid_row, std::size_t grid_col) const {
    const std::size_t d = row_plan_.divisor(level);
    if (grid_row >= d || grid_col >= d)
        throw std::out_of_range("Subband2D::block grid index");
    const std::size_t br = row_plan_.subband_len(level);
    const std::size_t bc = col_plan_.subband_len(level);
    Matrix out(br, bc);
    for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c)
            out(r, c) = coeffs_(grid_row * br + r, grid_col * bc + c);
    return out;
}

Matrix Subband2D::deepest_average() const { return block(row_plan_.levels() - 1, 0, 0); }

std::vector<Matrix> Subband2D::details(std::size_t level) const {
    const std::size_t d = row_plan_.divisor(level);
    std::vector<Matrix> out;
    out.reserve(d * d - 1);
    for (std::size_t gr = 0; gr < d; ++gr)
        for (std::size_t gc = 0; gc < d; ++gc)
            if (gr != 0 || gc != 0)
                out.push_back(block(level, gr, gc));
    return out;
}

Subband2D decompose_2d(const Matrix& x, const DecompositionPlan& row_plan,
                       const DecompositionPlan& col_plan, std::span<const DivisorBasis> bases,
                       Execution exec) {
    if (x.rows != row_plan.signal_len() || x.cols != col_plan.signal_len())
        throw std::invalid_argument("decompose_2d: matrix shape does not match plans");
    check_plans(row_plan, col_plan, bases);

    Matrix s = x;
    const bool par = parallel_2d(exec, x.rows * x.cols);
    for (std::size_t j = 0; j < row_plan.levels(); ++j)
        apply_separable(s, row_plan.input_len(j), col_plan.input_len(j), bases[j], forward_fn, par,
                        true);
    return Subband2D(row_plan, col_plan, std::move(s));
}

Matrix reconstruct_2d(const Subband2D& s, std::span<const DivisorBasis> bases, Execution exec) {
    check_plans(s.row_plan(), s.col_plan(), bases);
    Matrix x = s.coeffs();
    const bool par = parallel_2d(exec, x.rows * x.cols);
    for (std::size_t j = s.row_plan().levels(); j-- > 0;)
        apply_separable(x, s.row_plan().input_len(j), s.col_plan().input_len(j), bases[j],
                        inverse_fn, par, false);
    return x;
}

} // namespace dmdt
