#include "vade/repcat.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "vade/fusion.hpp"

namespace vade {

namespace {

std::vector<std::string> simple_labels(DiagramType type, int level, int rank) {
    std::vector<std::string> names;
    names.reserve(rank);
    if (type == DiagramType::A) {
        for (int i = 0; i <= level; ++i) names.push_back("V_" + std::to_string(i));
    } else if (type == DiagramType::D) {
        for (int i = 0; i + 2 < rank; ++i) names.push_back("X_" + std::to_string(i));
        names.push_back("X+");
        names.push_back("X-");
    } else {
        for (int i = 0; i < rank; ++i) names.push_back("X_" + std::to_string(i));
    }
    return names;
}

}  // namespace

RepData rep_data(const AlgebraCandidate& c) {
    if (!c.accepted())
        throw std::invalid_argument("rep_data: algebra candidate was rejected (" +
                                    c.excluded_reason.value_or("") + ")");
    RepData r;
    r.algebra = c;
    const int k = c.level;
    const int rank = c.source.rank;
    const int64_t l = k + 2;

    const auto seq = chebyshev_sequence(c.source.n1, k);
    r.branching = zero_mat(k + 1, rank);
    for (int i = 0; i <= k; ++i)
        for (int pi = 0; pi < rank; ++pi) r.branching[i][pi] = seq[i][c.unit_vertex][pi];
    r.gen_fusion = c.source.n1;
    r.simple_names = simple_labels(c.source.type, k, rank);

    r.rep0.assign(rank, false);
    for (int pi = 0; pi < rank; ++pi) {
        bool constant = true;
        int first = -1;
        for (int i = 0; i <= k && constant; ++i) {
            if (r.branching[i][pi] == 0) continue;
            if (first < 0)
                first = i;
            else
                constant = twist(i, k) == twist(first, k);
        }
        r.rep0[pi] = constant && first >= 0;
    }

    const double dim_a = c.dim_a.embed().real();
    r.dims_a.resize(rank);
    for (int pi = 0; pi < rank; ++pi) {
        Cyclotomic d = Cyclotomic::zero(4 * l);
        for (int i = 0; i <= k; ++i)
            if (r.branching[i][pi] != 0) d += qint(i + 1, l) * r.branching[i][pi];
        r.dims_a[pi] = d.embed().real() / dim_a;
    }
    return r;
}

std::vector<bool> rep0_membership(const RepData& r) { return r.rep0; }

int DEvenFusion::dual_of(int a) const {
    int found = -1;
    for (size_t c = 0; c < table.size(); ++c)
        if (table[a][c][0] != 0) {
            if (found >= 0) throw std::logic_error("dual_of: duplicate dual");
            found = (int)c;
        }
    if (found < 0) throw std::logic_error("dual_of: no dual found");
    return found;
}

DEvenFusion deven_fusion(int level) {
    if (level < 4 || level % 4 != 0)
        throw std::invalid_argument("deven_fusion: level must be a positive multiple of 4");
    DEvenFusion f;
    f.level = level;
    f.m = level / 4;
    const int m = f.m;
    const int n = 2 * m + 2;  // basis size
    const int P = f.plus_index(), M = f.minus_index();
    f.labels = simple_labels(DiagramType::D, level, n);

    const IntMat n1 = adet_adjacency(DiagramType::D, n);
    const auto seq = chebyshev_sequence(n1, 2 * m - 1);

    f.table.assign(n, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(n, 0)));

    // X_a = F(V_a) for a <= 2m-1: products are rows of the action matrices
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) f.table[a][b][c] = seq[a][b][c];
    for (int b = 0; b < 2 * m; ++b)
        for (int a : {P, M})
            for (int c = 0; c < n; ++c) f.table[a][b][c] = seq[b][a][c];

    // X+- products: the k mod 8 dichotomy
    auto add_range = [&](std::vector<int64_t>& row, int from, int to) {
        for (int i = from; i <= to; i += 4) row[i] += 1;
    };
    if (level % 8 == 0) {
        // X+- (x) X+- = X_0 + X_4 + ... + X_{2m-4} + X+-
        add_range(f.table[P][P], 0, 2 * m - 4);
        f.table[P][P][P] += 1;
        add_range(f.table[M][M], 0, 2 * m - 4);
        f.table[M][M][M] += 1;
        // X+- (x) X-+ = X_2 + X_6 + ... + X_{2m-2}
        add_range(f.table[P][M], 2, 2 * m - 2);
        add_range(f.table[M][P], 2, 2 * m - 2);
    } else {
        // X+- (x) X+- = X_2 + X_6 + ... + X_{2m-4} + X-+
        add_range(f.table[P][P], 2, 2 * m - 4);
        f.table[P][P][M] += 1;
        add_range(f.table[M][M], 2, 2 * m - 4);
        f.table[M][M][P] += 1;
        // X+- (x) X-+ = X_0 + X_4 + ... + X_{2m-2}
        add_range(f.table[P][M], 0, 2 * m - 2);
        add_range(f.table[M][P], 0, 2 * m - 2);
    }
    return f;
}

bool dim_check(const RepData& r) {
    const int k = r.level();
    const int rank = r.rank();
    const int64_t l = k + 2;
    const double tol = 1e-9;

    // dim_A(F(V_i)) = [i+1]
    for (int i = 0; i <= k; ++i) {
        double induced = 0.0;
        for (int pi = 0; pi < rank; ++pi)
            induced += (double)r.branching[i][pi] * r.dims_a[pi];
        if (std::abs(induced - qint(i + 1, l).embed().real()) > tol) return false;
    }

    // multiplicativity over the full fusion table
    if (r.type() == DiagramType::A) {
        const FusionCoeffs fc = fusion_coefficients(k);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                const auto& nij = fc.at(i, j);
                double rhs = 0.0;
                for (int t = 0; t <= k; ++t) rhs += (double)nij[t] * r.dims_a[t];
                if (std::abs(r.dims_a[i] * r.dims_a[j] - rhs) > tol) return false;
            }
        return true;
    }
    if (r.type() == DiagramType::D) {
        const DEvenFusion f = deven_fusion(k);
        for (int a = 0; a < rank; ++a)
            for (int b = 0; b < rank; ++b) {
                double rhs = 0.0;
                for (int c = 0; c < rank; ++c) rhs += (double)f.table[a][b][c] * r.dims_a[c];
                if (std::abs(r.dims_a[a] * r.dims_a[b] - rhs) > tol) return false;
            }
        return true;
    }
    throw std::logic_error("dim_check: full fusion table only available for types A and D");
}

namespace {

std::string product_string(const std::vector<int64_t>& mult,
                           const std::vector<std::string>& labels) {
    std::string out;
    for (size_t c = 0; c < mult.size(); ++c) {
        if (mult[c] == 0) continue;
        if (!out.empty()) out += "+";
        if (mult[c] > 1) out += std::to_string(mult[c]);
        out += labels[c];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string tsv_string(const DEvenFusion& f) {
    std::string out;
    for (size_t a = 0; a < f.table.size(); ++a)
        for (size_t b = 0; b < f.table.size(); ++b)
            out += f.labels[a] + "\t" + f.labels[b] + "\t" +
                   product_string(f.table[a][b], f.labels) + "\n";
    return out;
}

std::string json_string(const RepData& r) {
    nlohmann::json j;
    j["k"] = r.level();
    j["diagram"] = r.algebra.source.name();
    j["unit_vertex"] = r.unit_vertex();
    j["simples"] = r.simple_names;
    j["branching"] = r.branching;
    j["gen_fusion"] = r.gen_fusion;
    std::vector<int> mask;
    for (bool b : r.rep0) mask.push_back(b ? 1 : 0);
    j["rep0"] = mask;
    j["dims_A"] = r.dims_a;
    return j.dump();
}

}  // namespace vade
