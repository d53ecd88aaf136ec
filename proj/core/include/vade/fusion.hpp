#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vade/cyclotomic.hpp"

namespace vade {

using RealMat = std::vector<std::vector<double>>;
using CplxMat = std::vector<std::vector<std::complex<double>>>;

/// Fusion multiplicities N_{ij}^m of V_i (x) V_j in the level-k sl2 Verlinde
/// ring, returned as a vector over m = 0..k. Truncated Clebsch-Gordan rule:
/// N_{ij}^m = 1 iff |i-j| <= m <= min(i+j, 2k-i-j) and m = i+j (mod 2).
/// The rule is pinned against the Verlinde formula by verlinde_check().
std::vector<int64_t> fuse(int i, int j, int level);

struct FusionCoeffs {
    int level = 0;
    /// table[i][j][m] = N_{ij}^m
    std::vector<std::vector<std::vector<int64_t>>> table;

    const std::vector<int64_t>& at(int i, int j) const { return table[i][j]; }
};

FusionCoeffs fusion_coefficients(int level);

/// Modular data of the level-k sl2 category: exact quantum dimensions,
/// twists and s-tilde matrix, together with the float-valued normalization
/// constants D > 0 and zeta (|zeta| = 1).
///
/// s_tilde[i][j] = [(i+1)(j+1)], twists[n] = theta_n, dims[n] = [n+1],
/// D = +sqrt(sum_j d_j^2), zeta = exp(2*pi*i*c/24) with c = 3k/(k+2).
/// zeta^3 equals the Gauss-sum ratio p+/D; both are exercised by tests.
struct ModularData {
    int level = 0;    // k
    int coxeter = 2;  // l = k + 2
    std::vector<Cyclotomic> dims;
    std::vector<Cyclotomic> twists;
    std::vector<std::vector<Cyclotomic>> s_tilde;
    double D = 1.0;
    std::complex<double> zeta{1.0, 0.0};

    /// Normalized s = s_tilde / D (embedded; real for sl2).
    RealMat s() const;
    /// Normalized t = diag(theta_n) / zeta.
    CplxMat t() const;
};

ModularData modular_data(int level);

/// Gauss sum p+ = sum_j d_j^2 theta_j (exact).
Cyclotomic gauss_sum(const ModularData& md);

/// True iff the Verlinde sum  sum_a s_ia s_ja s_ma / s_0a  reproduces fuse()
/// exactly: every entry within 1e-6 of an integer and the rounded value
/// matches the closed form.
bool verlinde_check(int level);

/// (D, zeta) without building the full s-tilde matrix.
std::pair<double, std::complex<double>> global_dims(int level);

std::string json_string(const ModularData& md);

}  // namespace vade
