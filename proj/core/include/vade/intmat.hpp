#pragma once

#include <cstdint>
#include <cstdlib>
#include <vector>

namespace vade {

using IntMat = std::vector<std::vector<int64_t>>;

inline IntMat identity_mat(int n) {
    IntMat a(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 1;
    return a;
}

inline IntMat zero_mat(int rows, int cols) {
    return IntMat(rows, std::vector<int64_t>(cols, 0));
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const int n = (int)a.size(), m = (int)b[0].size(), inner = (int)b.size();
    IntMat c = zero_mat(n, m);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < inner; ++t) {
            const int64_t v = a[i][t];
            if (v == 0) continue;
            for (int j = 0; j < m; ++j) c[i][j] += v * b[t][j];
        }
    return c;
}

inline IntMat mat_sub(const IntMat& a, const IntMat& b) {
    IntMat c = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
    return c;
}

inline IntMat mat_transpose(const IntMat& a) {
    if (a.empty()) return {};
    IntMat c = zero_mat((int)a[0].size(), (int)a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) c[j][i] = a[i][j];
    return c;
}

inline bool mat_is_zero(const IntMat& a) {
    for (const auto& row : a)
        for (int64_t v : row)
            if (v != 0) return false;
    return true;
}

inline bool mat_is_symmetric(const IntMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i][j] != a[j][i]) return false;
    return true;
}

inline bool mat_is_nonnegative(const IntMat& a) {
    for (const auto& row : a)
        for (int64_t v : row)
            if (v < 0) return false;
    return true;
}

/// Connectivity of the graph with an edge i--j whenever a[i][j] != 0, i != j.
/// Loops do not connect anything; a single vertex is connected.
inline bool adjacency_is_connected(const IntMat& a) {
    const int n = (int)a.size();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (w != v && a[v][w] != 0 && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n;
}

}  // namespace vade
