#pragma once

// Test-only reference computations. Nothing here calls the library's
// transform kernels.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

/// The N x N matrix A stacked from circulant blocks C_i: row (i*N/d + m) holds
/// B's row i at columns m*d .. m*d + d - 1.
inline Dense dense_a(const std::vector<std::vector<double>>& b, std::size_t n) {
    const std::size_t d = b.size();
    const std::size_t blocks = n / d;
    Dense a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < blocks; ++m)
            for (std::size_t j = 0; j < d; ++j)
                a[i * blocks + m][m * d + j] = b[i][j];
    return a;
}

inline std::vector<double> matvec(const Dense& a, const std::vector<double>& x) {
    std::vector<double> y(a.size(), 0.0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c)
            y[r] += a[r][c] * x[c];
    return y;
}

inline Dense matmul(const Dense& a, const Dense& b) {
    Dense c(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Dense transpose(const Dense& a) {
    Dense t(a[0].size(), std::vector<double>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

/// Plain Gauss-Jordan inverse with partial pivoting.
inline Dense inverse(Dense a) {
    const std::size_t n = a.size();
    Dense inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c]))
                p = r;
        if (std::abs(a[p][c]) < 1e-14)
            throw std::runtime_error("oracle: singular");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        const double piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c)
                continue;
            const double f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

/// cos(pi n (2m+1) / 2d), written out independently of the library.
inline std::vector<std::vector<double>> cosine_rows(std::size_t d) {
    std::vector<std::vector<double>> b(d, std::vector<double>(d));
    for (std::size_t n = 0; n < d; ++n)
        for (std::size_t m = 0; m < d; ++m)
            b[n][m] = std::cos(M_PI * static_cast<double>(n) * (2.0 * static_cast<double>(m) + 1.0) /
                               (2.0 * static_cast<double>(d)));
    return b;
}

/// Textbook unnormalized Haar analysis: a = x0 + x1, w = x0 - x1, repeated on
/// the averages. Returns {averages of the last level, details per level}.
struct HaarResult {
    std::vector<double> average;
    std::vector<std::vector<double>> details; // details[0] is the first level
};

inline HaarResult haar(std::vector<double> x, std::size_t levels) {
    HaarResult r;
    for (std::size_t l = 0; l < levels; ++l) {
        std::vector<double> a(x.size() / 2), w(x.size() / 2);
        for (std::size_t k = 0; k < a.size(); ++k) {
            a[k] = x[2 * k] + x[2 * k + 1];
            w[k] = x[2 * k] - x[2 * k + 1];
        }
        r.details.push_back(w);
        x = a;
    }
    r.average = x;
    return r;
}

/// One CDF 9/7 analysis level by direct convolution with the published 9-tap
/// and 7-tap filters, whole-sample symmetric extension. Low band from even
/// phases, high band from odd phases, unscaled.
inline void cdf97_filter_bank(const std::vector<double>& x, std::vector<double>& low,
                              std::vector<double>& high) {
    static const double h[9] = {0.026748757411,  -0.016864118443, -0.078223266529,
                                0.266864118443,  0.602949018236,  0.266864118443,
                                -0.078223266529, -0.016864118443, 0.026748757411};
    static const double g[7] = {0.091271763114,  -0.057543526229, -0.591271763114, 1.115087052457,
                                -0.591271763114, -0.057543526229, 0.091271763114};
    const long n = static_cast<long>(x.size());
    auto at = [&](long i) {
        while (i < 0 || i >= n)
            i = i < 0 ? -i : 2 * (n - 1) - i;
        return x[static_cast<std::size_t>(i)];
    };
    low.assign(x.size() / 2, 0.0);
    high.assign(x.size() / 2, 0.0);
    for (long m = 0; m < n / 2; ++m) {
        for (long k = -4; k <= 4; ++k)
            low[m] += h[k + 4] * at(2 * m + k);
        for (long k = -3; k <= 3; ++k)
            high[m] += g[k + 3] * at(2 * m + 1 + k);
    }
}

/// Scalar that counts additions and multiplications.
struct Counted {
    double v = 0.0;
    static inline std::uint64_t adds = 0;
    static inline std::uint64_t muls = 0;

    Counted() = default;
    Counted(double x) : v(x) {}
    Counted& operator+=(const Counted& o) {
        ++adds;
        v += o.v;
        return *this;
    }
    static void reset() { adds = muls = 0; }
};

inline Counted operator*(double a, const Counted& b) {
    ++Counted::muls;
    return Counted(a * b.v);
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1000.0,
                                         double hi = 1000.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> x(n);
    for (auto& v : x)
        v = dist(rng);
    return x;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double l2(const std::vector<double>& a) {
    double s = 0.0;
    for (double v : a)
        s += v * v;
    return std::sqrt(s);
}

inline double l2_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Random valid plan over the divisor pool with product dividing at most
/// `max_len`; the signal length is the product times a random multiplier.
struct RandomPlan {
    std::vector<std::size_t> divisors;
    std::size_t n;
};

inline RandomPlan random_plan(std::mt19937_64& rng, std::size_t max_len) {
    static const std::size_t pool[] = {2, 3, 4, 8, 16, 32};
    std::uniform_int_distribution<std::size_t> pick(0, 5);
    std::uniform_int_distribution<std::size_t> levels(1, 4);
    RandomPlan p;
    std::size_t prod = 1;
    const std::size_t k = levels(rng);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t d = pool[pick(rng)];
        if (prod * d > max_len)
            break;
        p.divisors.push_back(d);
        prod *= d;
    }
    if (p.divisors.empty()) {
        p.divisors.push_back(2);
        prod = 2;
    }
    std::uniform_int_distribution<std::size_t> mult(1, max_len / prod);
    p.n = prod * mult(rng);
    return p;
}

} // namespace oracle
