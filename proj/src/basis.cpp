#include "dmdt/basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace dmdt {

namespace {

// Gauss-Jordan with partial pivoting; returns the row-major inverse.
std::vector<double> invert(std::size_t d, std::vector<double> a) {
    std::vector<double> inv(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
        inv[i * d + i] = 1.0;

    double scale = 0.0;
    for (double v : a)
        scale = std::max(scale, std::abs(v));

    for (std::size_t col = 0; col < d; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < d; ++r)
            if (std::abs(a[r * d + col]) > std::abs(a[pivot * d + col]))
                pivot = r;
        if (std::abs(a[pivot * d + col]) <= 1e-12 * scale)
            throw std::invalid_argument("DivisorBasis: matrix is singular");
        if (pivot != col) {
            for (std::size_t c = 0; c < d; ++c) {
                std::swap(a[pivot * d + c], a[col * d + c]);
                std::swap(inv[pivot * d + c], inv[col * d + c]);
            }
        }
        const double p = a[col * d + col];
        for (std::size_t c = 0; c < d; ++c) {
            a[col * d + c] /= p;
            inv[col * d + c] /= p;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == col)
                continue;
            const double f = a[r * d + col];
            if (f == 0.0)
                continue;
            for (std::size_t c = 0; c < d; ++c) {
                a[r * d + c] -= f * a[col * d + c];
                inv[r * d + c] -= f * inv[col * d + c];
            }
        }
    }
    return inv;
}

} // namespace

DivisorBasis::DivisorBasis(std::size_t d, std::vector<double> rows) : d_(d), rows_(std::move(rows)) {
    if (d_ < 2)
        throw std::invalid_argument("DivisorBasis: radix must be >= 2, got " + std::to_string(d_));
    if (rows_.size() != d_ * d_)
        throw std::invalid_argument("DivisorBasis: expected d*d entries");

    row_norms_.resize(d_);
    for (std::size_t n = 0; n < d_; ++n) {
        double ss = 0.0;
        for (double v : row(n))
            ss += v * v;
        if (ss == 0.0)
            throw std::invalid_argument("DivisorBasis: zero row " + std::to_string(n));
        row_norms_[n] = std::sqrt(ss);
    }

    orthogonal_ = true;
    for (std::size_t i = 0; i < d_ && orthogonal_; ++i) {
        for (std::size_t j = i + 1; j < d_; ++j) {
            double dot = 0.0;
            for (std::size_t m = 0; m < d_; ++m)
                dot += at(i, m) * at(j, m);
            if (std::abs(dot) > 1e-12 * row_norms_[i] * row_norms_[j]) {
                orthogonal_ = false;
                break;
            }
        }
    }

    if (orthogonal_) {
        synthesis_.resize(d_ * d_);
        for (std::size_t m = 0; m < d_; ++m)
            for (std::size_t i = 0; i < d_; ++i)
                synthesis_[m * d_ + i] = at(i, m) / (row_norms_[i] * row_norms_[i]);
    } else {
        synthesis_ = invert(d_, rows_);
    }
}

DivisorBasis build_cosine_basis(std::size_t d) {
    if (d < 2)
        throw std::invalid_argument("build_cosine_basis: d must be >= 2, got " + std::to_string(d));
    std::vector<double> rows(d * d);
    for (std::size_t n = 0; n < d; ++n) {
        // Mirror the left half: b[n][d-1-m] == (-1)^n b[n][m] exactly.
        for (std::size_t m = 0; m < (d + 1) / 2; ++m) {
            double v = 1.0;
            if (n != 0) {
                const std::size_t k = n * (2 * m + 1) % (4 * d);
                v = 2 * m + 1 == d && n % 2 == 1 ? 0.0
                                                 : std::cos(std::numbers::pi * static_cast<double>(k) /
                                                            static_cast<double>(2 * d));
            }
            rows[n * d + m] = v;
            rows[n * d + (d - 1 - m)] = n % 2 == 0 ? v : -v;
        }
    }
    return DivisorBasis(d, std::move(rows));
}

DivisorBasis build_haar_basis() { return DivisorBasis(2, {1.0, 1.0, 1.0, -1.0}); }

DivisorBasis build_ramanujan3_basis() {
    return DivisorBasis(3, {1.0, 1.0, 1.0, 2.0, -1.0, -1.0, 0.0, 1.0, -1.0});
}

std::vector<DivisorBasis> cosine_bases(std::span<const std::size_t> divisors) {
    std::vector<DivisorBasis> out;
    out.reserve(divisors.size());
    for (std::size_t d : divisors)
        out.push_back(build_cosine_basis(d));
    return out;
}

} // namespace dmdt
