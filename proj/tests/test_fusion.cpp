#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "vade/fusion.hpp"
#include "vade/nimrep.hpp"

using namespace vade;

namespace {

constexpr double kTol = 1e-9;

std::vector<int64_t> basis_vec(int level, std::initializer_list<int> entries) {
    std::vector<int64_t> v(level + 1, 0);
    for (int e : entries) v[e] = 1;
    return v;
}

}  // namespace

TEST_SUITE("fusion") {

TEST_CASE("truncated Clebsch-Gordan rule") {
    for (int k : {0, 1, 3, 7})
        for (int i = 0; i <= k; ++i) CHECK(fuse(i, 0, k) == basis_vec(k, {i}));
    for (int k : {1, 2, 6, 11}) CHECK(fuse(k, k, k) == basis_vec(k, {0}));  // delta (x) delta = 1
    CHECK(fuse(1, 1, 2) == basis_vec(2, {0, 2}));
    CHECK(fuse(1, 1, 1) == basis_vec(1, {0}));
    CHECK_THROWS_AS(fuse(3, 0, 2), std::out_of_range);
}

TEST_CASE("associativity, exact, k <= 12") {
    for (int k = 0; k <= 12; ++k) {
        const FusionCoeffs fc = fusion_coefficients(k);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int s2 = 0; s2 <= k; ++s2)
                    for (int t2 = 0; t2 <= k; ++t2) {
                        int64_t lhs = 0, rhs = 0;
                        for (int m = 0; m <= k; ++m) {
                            lhs += fc.at(i, j)[m] * fc.at(m, s2)[t2];
                            rhs += fc.at(j, s2)[m] * fc.at(i, m)[t2];
                        }
                        REQUIRE(lhs == rhs);
                    }
    }
}

TEST_CASE("full symmetry and unit row of the coefficients") {
    const int k = 9;
    const FusionCoeffs fc = fusion_coefficients(k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j)
            for (int m = 0; m <= k; ++m) {
                CHECK(fc.at(i, j)[m] == fc.at(j, i)[m]);
                CHECK(fc.at(i, j)[m] == fc.at(i, m)[j]);  // self-dual labels
            }
}

TEST_CASE("modular data at k = 1") {
    const ModularData md = modular_data(1);
    // s~ = [[1, [2]], [[2], [4]]] = [[1, 1], [1, -1]] at l = 3
    CHECK(md.s_tilde[0][0] == Cyclotomic::one(12));
    CHECK(md.s_tilde[0][1] == Cyclotomic::one(12));
    CHECK(md.s_tilde[1][0] == Cyclotomic::one(12));
    CHECK(md.s_tilde[1][1] == Cyclotomic::integer(12, -1));
    CHECK(md.D == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("s-tilde top row is the dimension vector") {
    for (int k : {0, 1, 4, 10}) {
        const ModularData md = modular_data(k);
        for (int j = 0; j <= k; ++j) CHECK(md.s_tilde[0][j] == md.dims[j]);
    }
}

TEST_CASE("dims are real and >= 1 under the embedding") {
    for (int k : {0, 3, 10, 28}) {
        const ModularData md = modular_data(k);
        for (const auto& d : md.dims) {
            CHECK(std::abs(d.embed().imag()) < kTol);
            CHECK(d.embed().real() >= 1.0 - kTol);
        }
    }
}

TEST_CASE("SL2(Z) relations at k = 10") {
    const ModularData md = modular_data(10);
    const auto s = md.s();
    const auto t = md.t();
    const int n = 11;
    // (st)^3 = s^2 and s^4 = id
    std::vector<std::vector<std::complex<double>>> st(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) st[i][j] = s[i][j] * t[j][j];
    auto mul = [n](const auto& a, const auto& b) {
        std::vector<std::vector<std::complex<double>>> c(n,
                                                         std::vector<std::complex<double>>(n));
        for (int i = 0; i < n; ++i)
            for (int t2 = 0; t2 < n; ++t2)
                for (int j = 0; j < n; ++j) c[i][j] += a[i][t2] * b[t2][j];
        return c;
    };
    const auto st3 = mul(mul(st, st), st);
    std::vector<std::vector<std::complex<double>>> s2(n, std::vector<std::complex<double>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double acc = 0;
            for (int t2 = 0; t2 < n; ++t2) acc += s[i][t2] * s[t2][j];
            s2[i][j] = acc;
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(std::abs(st3[i][j] - s2[i][j]) < kTol);
    const auto s4 = mul(s2, s2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(std::abs(s4[i][j] - (i == j ? 1.0 : 0.0)) < kTol);
}

TEST_CASE("verlinde consistency") {
    CHECK(verlinde_check(0));
    CHECK(verlinde_check(4));
    CHECK(verlinde_check(28));
}

TEST_CASE("global dims") {
    {
        const auto [d, zeta] = global_dims(0);
        CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(zeta - std::complex<double>(1, 0)) < kTol);
    }
    {
        const auto [d, zeta] = global_dims(1);
        CHECK(d == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(std::abs(std::abs(zeta) - 1.0) < kTol);
    }
    {
        // trigonometric oracle at k = 10
        double acc = 0.0;
        for (int j = 0; j <= 10; ++j) {
            const double d = std::sin((j + 1) * std::numbers::pi / 12.0) /
                             std::sin(std::numbers::pi / 12.0);
            acc += d * d;
        }
        CHECK(global_dims(10).first == doctest::Approx(std::sqrt(acc)).epsilon(1e-12));
    }
}

TEST_CASE("zeta^3 equals the Gauss-sum ratio p+/D") {
    for (int k = 0; k <= 28; ++k) {
        const ModularData md = modular_data(k);
        const auto p = gauss_sum(md).embed();
        CHECK(std::abs(std::pow(md.zeta, 3) - p / md.D) < kTol);
        // D^2 = p+ p- (the Gauss sums are conjugate), i.e. |p+| = D
        CHECK(std::abs(p) == doctest::Approx(md.D).epsilon(1e-12));
    }
}

TEST_CASE("V_1 generates: minimal polynomial of its fusion matrix has degree k+1") {
    for (int k : {1, 4, 9}) {
        // matrix of fusion by V_1, (N_1)_{mj} = N_{1j}^m, equals the path graph
        IntMat m1 = zero_mat(k + 1, k + 1);
        for (int j = 0; j <= k; ++j) {
            const auto col = fuse(1, j, k);
            for (int m = 0; m <= k; ++m) m1[m][j] = col[m];
        }
        CHECK(m1 == adet_adjacency(DiagramType::A, k + 1));
        const auto seq = chebyshev_sequence(m1, k + 1);
        CHECK(mat_is_zero(seq[k + 1]));
        // S_i(M) e_0 = e_i, so S_0 .. S_k are linearly independent and no
        // polynomial of degree <= k annihilates M
        for (int i = 0; i <= k; ++i)
            for (int m = 0; m <= k; ++m) CHECK(seq[i][m][0] == (m == i ? 1 : 0));
    }
}

TEST_CASE("json export schema") {
    const auto j = nlohmann::json::parse(json_string(modular_data(2)));
    CHECK(j["k"] == 2);
    CHECK(j["dims"].size() == 3);
    CHECK(j["twists"][1]["num"] == 3);
    CHECK(j["twists"][1]["den"] == 16);
    CHECK(j["s_tilde"].size() == 3);
    CHECK(j["s_tilde"][0].size() == 3);
    CHECK(std::abs(j["dims"][1].get<double>() - std::sqrt(2.0)) < kTol);
}

}  // TEST_SUITE
