#pragma once

// Small dense helpers for the SL2(Z) checks, subspace tests and least
// squares. Internal to the library; matrices here are tiny (<= 31 x 31).

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace vade::detail {

using CMat = std::vector<std::vector<std::complex<double>>>;
using RMat = std::vector<std::vector<double>>;

inline CMat cidentity(int n) {
    CMat a(n, std::vector<std::complex<double>>(n, 0.0));
    for (int i = 0; i < n; ++i) a[i][i] = 1.0;
    return a;
}

inline CMat cmul(const CMat& a, const CMat& b) {
    const int n = (int)a.size(), m = (int)b[0].size(), inner = (int)b.size();
    CMat c(n, std::vector<std::complex<double>>(m, 0.0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < inner; ++t) {
            const auto v = a[i][t];
            if (v == std::complex<double>(0.0)) continue;
            for (int j = 0; j < m; ++j) c[i][j] += v * b[t][j];
        }
    return c;
}

inline double cmax_diff(const CMat& a, const CMat& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

inline CMat to_cplx(const RMat& a) {
    CMat c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i].assign(a[i].begin(), a[i].end());
    return c;
}

// Solves a * x = rhs (square a) by Gaussian elimination with partial
// pivoting; rhs has one column per unknown vector.
inline RMat solve_gauss(RMat a, RMat rhs) {
    const int n = (int)a.size();
    const int m = (int)rhs[0].size();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-12)
            throw std::runtime_error("solve_gauss: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        const double inv = 1.0 / a[col][col];
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = a[r][col] * inv;
            if (f == 0.0) continue;
            for (int c2 = col; c2 < n; ++c2) a[r][c2] -= f * a[col][c2];
            for (int c2 = 0; c2 < m; ++c2) rhs[r][c2] -= f * rhs[col][c2];
        }
    }
    RMat x(n, std::vector<double>(m, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) x[i][j] = rhs[i][j] / a[i][i];
    return x;
}

// Orthonormal basis of the column space (classical Gram-Schmidt with one
// reorthogonalization pass; columns with norm < 1e-10 are dropped).
inline std::vector<std::vector<double>> orthonormal_columns(const RMat& a) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    std::vector<std::vector<double>> q;
    for (int c = 0; c < cols; ++c) {
        std::vector<double> v(rows);
        for (int r = 0; r < rows; ++r) v[r] = a[r][c];
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : q) {
                double dot = 0.0;
                for (int r = 0; r < rows; ++r) dot += u[r] * v[r];
                for (int r = 0; r < rows; ++r) v[r] -= dot * u[r];
            }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-10) continue;
        for (double& x : v) x /= norm;
        q.push_back(std::move(v));
    }
    return q;
}

}  // namespace vade::detail
