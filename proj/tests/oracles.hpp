#pragma once

// Test-only reference implementations, kept independent of the library's
// solver paths: plain Gaussian elimination, dense convolution matrices, and
// companion-matrix root finding.

#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

extern "C" {
void dgeev_(const char* jobvl, const char* jobvr, const int* n, double* a,
            const int* lda, double* wr, double* wi, double* vl, const int* ldvl,
            double* vr, const int* ldvr, double* work, const int* lwork, int* info);
}

namespace oracle {

/// Solves the dense system M x = b by Gaussian elimination with partial
/// pivoting. M is row-major n x n and is destroyed.
inline std::vector<double> gauss_solve(std::vector<double> m, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
        if (m[pivot * n + col] == 0.0) throw std::runtime_error("singular oracle system");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
            std::swap(b[pivot], b[col]);
        }
        const double d = m[col * n + col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m[r * n + col] / d;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t ri = n; ri-- > 0;) {
        double acc = b[ri];
        for (std::size_t c = ri + 1; c < n; ++c) acc -= m[ri * n + c] * x[c];
        x[ri] = acc / m[ri * n + ri];
    }
    return x;
}

/// Dense Yule-Walker solve: minimizes the zero-padded prediction error
/// energy over [1, a_2, ..., a_{p+1}] given the autocorrelation sequence r.
inline std::vector<double> yule_walker_dense(std::span<const double> r) {
    const std::size_t p = r.size() - 1;
    std::vector<double> m(p * p);
    std::vector<double> rhs(p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j)
            m[i * p + j] = r[i > j ? i - j : j - i];
        rhs[i] = -r[i + 1];
    }
    std::vector<double> tail = gauss_solve(std::move(m), std::move(rhs));
    std::vector<double> a(p + 1, 0.0);
    a[0] = 1.0;
    for (std::size_t i = 0; i < p; ++i) a[i + 1] = tail[i];
    return a;
}

/// Dense (N+p) x N full convolution matrix of the coefficient vector a.
inline std::vector<double> convolution_matrix(std::span<const double> a, std::size_t n) {
    const std::size_t p = a.size() - 1;
    const std::size_t rows = n + p;
    std::vector<double> m(rows * n, 0.0);
    for (std::size_t col = 0; col < n; ++col)
        for (std::size_t i = 0; i <= p; ++i) m[(col + i) * n + col] = a[i];
    return m;
}

/// ||A x||^2 through the dense convolution matrix.
inline double convolution_objective(std::span<const double> a, std::span<const double> x) {
    const std::size_t n = x.size();
    const std::size_t p = a.size() - 1;
    const std::vector<double> m = convolution_matrix(a, n);
    double total = 0.0;
    for (std::size_t row = 0; row < n + p; ++row) {
        double e = 0.0;
        for (std::size_t col = 0; col < n; ++col) e += m[row * n + col] * x[col];
        total += e * e;
    }
    return total;
}

/// Reference missing-sample solve: builds A^T A densely from the convolution
/// matrix, restricts to the missing set, and solves the normal equations by
/// Gaussian elimination. Returns the full filled sample vector.
inline std::vector<double> fill_missing_dense(std::span<const double> a,
                                              std::span<const double> samples,
                                              const std::vector<std::size_t>& missing) {
    const std::size_t n = samples.size();
    const std::size_t p = a.size() - 1;
    const std::vector<double> conv = convolution_matrix(a, n);
    std::vector<double> gram(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t row = 0; row < n + p; ++row)
                acc += conv[row * n + i] * conv[row * n + j];
            gram[i * n + j] = acc;
        }

    std::vector<char> is_missing(n, 0);
    for (std::size_t mi : missing) is_missing[mi] = 1;

    const std::size_t k = missing.size();
    std::vector<double> sub(k * k);
    std::vector<double> rhs(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = gram[missing[i] * n + missing[j]];
        for (std::size_t col = 0; col < n; ++col)
            if (!is_missing[col]) rhs[i] -= gram[missing[i] * n + col] * samples[col];
    }
    const std::vector<double> solution = gauss_solve(std::move(sub), std::move(rhs));
    std::vector<double> filled(samples.begin(), samples.end());
    for (std::size_t i = 0; i < k; ++i) filled[missing[i]] = solution[i];
    return filled;
}

/// Largest root modulus of A(z) = a[0] + a[1] z^-1 + ... + a[p] z^-p,
/// i.e. of the polynomial a[0] z^p + ... + a[p], via eigenvalues of the
/// companion matrix (LAPACK dgeev).
inline double max_root_modulus(std::span<const double> a) {
    std::size_t degree = a.size() - 1;
    while (degree > 0 && a[degree] == 0.0) --degree;  // drop trailing zeros
    if (degree == 0) return 0.0;

    const int n = static_cast<int>(degree);
    // Column-major companion matrix: first row -a[1..]/a[0], subdiagonal ones.
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j) * n + 0] = -a[j + 1] / a[0];
    for (int j = 0; j + 1 < n; ++j) m[static_cast<std::size_t>(j) * n + j + 1] = 1.0;

    std::vector<double> wr(n), wi(n);
    int info = 0;
    int lwork = 8 * n;
    std::vector<double> work(lwork);
    dgeev_("N", "N", &n, m.data(), &n, wr.data(), wi.data(), nullptr, &n, nullptr, &n,
           work.data(), &lwork, &info);
    if (info != 0) throw std::runtime_error("dgeev failed");
    double max_mod = 0.0;
    for (int i = 0; i < n; ++i)
        max_mod = std::max(max_mod, std::hypot(wr[i], wi[i]));
    return max_mod;
}

/// Uniform [-1, 1] white noise segment from a fixed-seed engine.
inline std::vector<double> random_segment(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = dist(rng);
    return x;
}

}  // namespace oracle
