#include "vade/modinv.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <json.hpp>

#include "linalg.hpp"

namespace vade {

namespace {

// Branching restricted to the Rep0 columns, (k+1) x |Pi0|.
IntMat rep0_branching(const RepData& r) {
    const int k = r.level();
    IntMat b0;
    b0.resize(k + 1);
    for (int i = 0; i <= k; ++i)
        for (int pi = 0; pi < r.rank(); ++pi)
            if (r.rep0[pi]) b0[i].push_back(r.branching[i][pi]);
    return b0;
}

std::vector<int> rep0_indices(const RepData& r) {
    std::vector<int> out;
    for (int pi = 0; pi < r.rank(); ++pi)
        if (r.rep0[pi]) out.push_back(pi);
    return out;
}

// Rank over Q by fraction-free elimination (entries stay small here).
int int_rank(IntMat a) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r2 = rank; r2 < rows; ++r2)
            if (a[r2][col] != 0) {
                piv = r2;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r2 = rank + 1; r2 < rows; ++r2) {
            if (a[r2][col] == 0) continue;
            const int64_t f1 = a[rank][col], f2 = a[r2][col];
            for (int c2 = col; c2 < cols; ++c2) a[r2][c2] = a[r2][c2] * f1 - a[rank][c2] * f2;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

InvariantMatrix invariant(const RepData& r) {
    const int k = r.level();
    const IntMat b0 = rep0_branching(r);
    InvariantMatrix inv;
    inv.level = k;
    inv.type = r.type();
    inv.rank = r.rank();
    inv.z = mat_mul(b0, mat_transpose(b0));
    inv.z00 = inv.z[0][0];

    const ModularData md = modular_data(k);
    const RealMat s = md.s();
    double worst_s = 0.0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            double zs = 0.0, sz = 0.0;
            for (int t = 0; t <= k; ++t) {
                zs += (double)inv.z[i][t] * s[t][j];
                sz += s[i][t] * (double)inv.z[t][j];
            }
            worst_s = std::max(worst_s, std::abs(zs - sz));
        }
    inv.commutes_s = worst_s < 1e-9;

    double worst_t = 0.0;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
            if (inv.z[i][j] == 0) continue;
            const auto diff = md.twists[i].embed() - md.twists[j].embed();
            worst_t = std::max(worst_t, (double)inv.z[i][j] * std::abs(diff));
        }
    inv.commutes_t = worst_t < 1e-9;
    return inv;
}

bool check_subspace_invariance(const RepData& r) {
    const int k = r.level();
    const IntMat b0 = rep0_branching(r);
    const ModularData md = modular_data(k);
    const RealMat s = md.s();

    detail::RMat bf(k + 1, std::vector<double>(b0[0].size()));
    for (int i = 0; i <= k; ++i)
        for (size_t c = 0; c < b0[i].size(); ++c) bf[i][c] = (double)b0[i][c];
    const auto q = detail::orthonormal_columns(bf);

    // image vectors under s and t, then the residual off the column space
    auto residual = [&](const std::vector<std::complex<double>>& v) {
        std::vector<std::complex<double>> rem = v;
        for (const auto& u : q) {
            std::complex<double> dot = 0.0;
            for (size_t i = 0; i < u.size(); ++i) dot += u[i] * rem[i];
            for (size_t i = 0; i < u.size(); ++i) rem[i] -= dot * u[i];
        }
        double worst = 0.0;
        for (const auto& x : rem) worst = std::max(worst, std::abs(x));
        return worst;
    };

    const auto t = md.t();
    for (size_t c = 0; c < b0[0].size(); ++c) {
        std::vector<std::complex<double>> sv(k + 1, 0.0), tv(k + 1, 0.0);
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j <= k; ++j) sv[i] += s[i][j] * (double)b0[j][c];
            tv[i] = t[i][i] * (double)b0[i][c];
        }
        if (residual(sv) > 1e-8 || residual(tv) > 1e-8) return false;
    }
    return true;
}

InducedModularData induced_modular_data(const RepData& r) {
    InducedModularData out;
    const int k = r.level();
    const IntMat b0 = rep0_branching(r);
    const int cols = (int)b0[0].size();

    if (int_rank(b0) < cols) {
        out.computable = false;
        out.reason =
            "branching matrix rank-deficient (coinciding Rep0 columns); "
            "s_A is not determined by Grothendieck data";
        return out;
    }

    const ModularData md = modular_data(k);
    const RealMat s = md.s();

    // solve s b0 = b0 M in the least-squares sense via the Gram matrix
    detail::RMat gram(cols, std::vector<double>(cols, 0.0));
    detail::RMat rhs(cols, std::vector<double>(cols, 0.0));
    for (int a = 0; a < cols; ++a)
        for (int c = 0; c < cols; ++c) {
            for (int i = 0; i <= k; ++i) gram[a][c] += (double)b0[i][a] * (double)b0[i][c];
            double acc = 0.0;
            for (int i = 0; i <= k; ++i) {
                double sb = 0.0;
                for (int j = 0; j <= k; ++j) sb += s[i][j] * (double)b0[j][c];
                acc += (double)b0[i][a] * sb;
            }
            rhs[a][c] = acc;
        }
    const detail::RMat m = detail::solve_gauss(gram, rhs);

    // verify the defining identity actually holds
    double worst = 0.0;
    for (int i = 0; i <= k; ++i)
        for (int c = 0; c < cols; ++c) {
            double sb = 0.0, bm = 0.0;
            for (int j = 0; j <= k; ++j) sb += s[i][j] * (double)b0[j][c];
            for (int a = 0; a < cols; ++a) bm += (double)b0[i][a] * m[a][c];
            worst = std::max(worst, std::abs(sb - bm));
        }
    if (worst > 1e-8) {
        out.computable = false;
        out.reason = "s does not preserve the Rep0 branching subspace";
        return out;
    }

    out.computable = true;
    out.s_a = detail::to_cplx(m);
    out.t_a.assign(cols, std::vector<std::complex<double>>(cols, 0.0));
    const auto indices = rep0_indices(r);
    for (int c = 0; c < cols; ++c) {
        int rep = -1;
        for (int i = 0; i <= k && rep < 0; ++i)
            if (r.branching[i][indices[c]] != 0) rep = i;
        out.t_a[c][c] = twist(rep, k).embed() / md.zeta;
    }

    const auto st = detail::cmul(out.s_a, out.t_a);
    const auto st3 = detail::cmul(detail::cmul(st, st), st);
    const auto s2 = detail::cmul(out.s_a, out.s_a);
    const auto s4 = detail::cmul(s2, s2);
    out.sl2_ok = detail::cmax_diff(st3, s2) < 1e-9 &&
                 detail::cmax_diff(s4, detail::cidentity(cols)) < 1e-9;
    return out;
}

bool rank_zeta_check(const RepData& r) {
    const int k = r.level();
    const double tol = 1e-9;
    const auto indices = rep0_indices(r);

    double d2 = 0.0;
    std::complex<double> p_plus = 0.0;
    for (int idx : indices) {
        const double d = r.dims_a[idx];
        d2 += d * d;
        int rep = -1;
        for (int i = 0; i <= k && rep < 0; ++i)
            if (r.branching[i][idx] != 0) rep = i;
        p_plus += d * d * twist(rep, k).embed();
    }
    const double d_rep0 = std::sqrt(d2);

    // D(Rep0 A) should also equal |p+_A| (Gauss-sum route)
    if (std::abs(d_rep0 - std::abs(p_plus)) > tol) return false;

    const ModularData md = modular_data(k);
    const double dim_a = r.algebra.dim_a.embed().real();
    if (std::abs(d_rep0 * dim_a - md.D) > tol) return false;

    // zeta equality via the cube: p+_A / D_A = zeta^3 = p+ / D
    const std::complex<double> zeta3 = std::pow(md.zeta, 3);
    if (std::abs(p_plus / d_rep0 - zeta3) > tol) return false;
    return true;
}

std::string character_polynomial(const RepData& r) {
    const auto indices = rep0_indices(r);
    const int k = r.level();
    std::vector<std::vector<int64_t>> cols;
    std::vector<int> counts;
    for (int idx : indices) {
        std::vector<int64_t> col(k + 1);
        for (int i = 0; i <= k; ++i) col[i] = r.branching[i][idx];
        bool merged = false;
        for (size_t c = 0; c < cols.size() && !merged; ++c)
            if (cols[c] == col) {
                ++counts[c];
                merged = true;
            }
        if (!merged) {
            cols.push_back(std::move(col));
            counts.push_back(1);
        }
    }
    std::string out;
    for (size_t c = 0; c < cols.size(); ++c) {
        if (!out.empty()) out += "+";
        if (counts[c] > 1) out += std::to_string(counts[c]);
        out += "|";
        bool first = true;
        for (int i = 0; i <= k; ++i) {
            if (cols[c][i] == 0) continue;
            if (!first) out += "+";
            if (cols[c][i] > 1) out += std::to_string(cols[c][i]);
            out += "x" + std::to_string(i);
            first = false;
        }
        out += "|^2";
    }
    return out;
}

std::string tsv_string(const InvariantMatrix& inv) {
    std::string out;
    for (const auto& row : inv.z) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) out += "\t";
            out += std::to_string(row[j]);
        }
        out += "\n";
    }
    return out;
}

std::string json_string(const InvariantMatrix& inv) {
    nlohmann::json j;
    j["k"] = inv.level;
    j["diagram"] = diagram_name(inv.type, inv.rank);
    j["Z"] = inv.z;
    j["commutes_s"] = inv.commutes_s;
    j["commutes_t"] = inv.commutes_t;
    j["Z00"] = inv.z00;
    return j.dump();
}

}  // namespace vade
