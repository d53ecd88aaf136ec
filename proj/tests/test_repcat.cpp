#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "vade/fusion.hpp"
#include "vade/repcat.hpp"

using namespace vade;

namespace {

RepData rep_of(DiagramType type, int rank, int level) {
    return rep_data(analyze(make_module(type, rank, level)));
}

std::vector<int64_t> column(const RepData& r, int pi) {
    std::vector<int64_t> col(r.level() + 1);
    for (int i = 0; i <= r.level(); ++i) col[i] = r.branching[i][pi];
    return col;
}

std::vector<int64_t> basis_vec(int size, std::initializer_list<int> entries) {
    std::vector<int64_t> v(size, 0);
    for (int e : entries) v[e] += 1;
    return v;
}

}  // namespace

TEST_SUITE("repcat") {

TEST_CASE("A-type: Rep A is the category itself") {
    const auto r = rep_of(DiagramType::A, 6, 5);
    CHECK(r.branching == identity_mat(6));
    CHECK(r.simple_names.front() == "V_0");
    CHECK(r.simple_names.back() == "V_5");
    for (int pi = 0; pi < 6; ++pi) {
        CHECK(r.rep0[pi]);
        CHECK(r.dims_a[pi] == doctest::Approx(qint(pi + 1, 7).embed().real()).epsilon(1e-12));
    }
    CHECK(rep0_membership(r) == r.rep0);
}

TEST_CASE("D-type simples: X_i = V_i + V_{k-i}, X+- = V_{2m}") {
    const auto r = rep_of(DiagramType::D, 4, 4);
    CHECK(column(r, 0) == basis_vec(5, {0, 4}));
    CHECK(column(r, 1) == basis_vec(5, {1, 3}));
    CHECK(column(r, 2) == basis_vec(5, {2}));
    CHECK(column(r, 3) == basis_vec(5, {2}));
    CHECK(r.simple_names == std::vector<std::string>{"X_0", "X_1", "X+", "X-"});
    CHECK(r.gen_fusion == r.algebra.source.n1);

    // Pi0 = {X_0, X+, X-}; dims (1, sqrt3, 1, 1) at l = 6
    CHECK(r.rep0 == std::vector<bool>{true, false, true, true});
    CHECK(r.dims_a[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.dims_a[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    const auto r8 = rep_of(DiagramType::D, 6, 8);
    CHECK(r8.rep0 == std::vector<bool>{true, false, true, false, true, true});
    for (int i = 1; i <= 3; ++i) CHECK(column(r8, i) == basis_vec(9, {i, 8 - i}));
}

TEST_CASE("E6 and E8 Rep0 branchings") {
    const auto e6 = rep_of(DiagramType::E6, 6, 10);
    CHECK(e6.rep0 == std::vector<bool>{true, false, false, true, false, true});
    CHECK(column(e6, 0) == basis_vec(11, {0, 6}));
    CHECK(column(e6, 3) == basis_vec(11, {3, 7}));
    CHECK(column(e6, 5) == basis_vec(11, {4, 10}));

    const auto e8 = rep_of(DiagramType::E8, 8, 28);
    int count = 0;
    for (bool b : e8.rep0) count += b;
    CHECK(count == 2);
    CHECK(e8.rep0[0]);
    CHECK(column(e8, 0) == basis_vec(29, {0, 10, 18, 28}));
    for (int pi = 1; pi < 8; ++pi)
        if (e8.rep0[pi]) CHECK(column(e8, pi) == basis_vec(29, {6, 12, 16, 22}));
}

TEST_CASE("Rep0 counts: A -> k+1, D -> m+2, E6 -> 3, E8 -> 2") {
    auto count = [](const RepData& r) {
        int c = 0;
        for (bool b : r.rep0) c += b;
        return c;
    };
    CHECK(count(rep_of(DiagramType::A, 8, 7)) == 8);
    CHECK(count(rep_of(DiagramType::D, 4, 4)) == 3);
    CHECK(count(rep_of(DiagramType::D, 8, 12)) == 5);
    CHECK(count(rep_of(DiagramType::E6, 6, 10)) == 3);
    CHECK(count(rep_of(DiagramType::E8, 8, 28)) == 2);
}

TEST_CASE("Frobenius reciprocity: induction is the transpose of restriction") {
    // <F(V_i), X_pi> = (S_i)_{unit, pi} = <V_i, G(X_pi)> = b[i][pi], and the
    // module property transports fuse through the branching
    const auto e6 = rep_of(DiagramType::E6, 6, 10);
    const auto seq = chebyshev_sequence(e6.gen_fusion, 10);
    for (int i = 0; i <= 10; ++i)
        for (int pi = 0; pi < 6; ++pi)
            CHECK(seq[i][e6.unit_vertex()][pi] == e6.branching[i][pi]);
    for (int i = 0; i <= 10; ++i)
        for (int j = 0; j <= 10; ++j) {
            const auto nij = fuse(i, j, 10);
            IntMat want = zero_mat(6, 6);
            for (int m = 0; m <= 10; ++m)
                if (nij[m])
                    for (int a = 0; a < 6; ++a)
                        for (int b = 0; b < 6; ++b) want[a][b] += nij[m] * seq[m][a][b];
            REQUIRE(mat_mul(seq[i], seq[j]) == want);
        }
}

TEST_CASE("D-even fusion rings") {
    {
        const auto f = deven_fusion(4);  // m = 1, k = 4 mod 8
        const int P = f.plus_index(), M = f.minus_index();
        CHECK(f.table[P][P] == basis_vec(4, {M}));  // X+ (x) X+ = X-
        CHECK(f.table[P][M] == basis_vec(4, {0}));  // X+ (x) X- = X_0
        CHECK(f.table[1][1] == basis_vec(4, {0, P, M}));
        CHECK(f.dual_of(P) == M);
        CHECK(f.dual_of(M) == P);
    }
    {
        const auto f = deven_fusion(8);  // m = 2, 8 | k
        const int P = f.plus_index(), M = f.minus_index();
        CHECK(f.table[P][P] == basis_vec(6, {0, P}));  // X+ (x) X+ = X_0 + X+
        CHECK(f.table[P][M] == basis_vec(6, {2}));
        CHECK(f.table[1][3] == basis_vec(6, {2, P, M}));  // X_1 (x) X_{2m-1}
        CHECK(f.dual_of(P) == P);
    }
    {
        const auto f = deven_fusion(12);  // m = 3, k = 4 mod 8
        const int P = f.plus_index(), M = f.minus_index();
        CHECK(f.table[P][P] == basis_vec(8, {2, M}));
        CHECK(f.table[P][M] == basis_vec(8, {0, 4}));
    }
    {
        const auto f = deven_fusion(16);  // m = 4, 8 | k
        const int P = f.plus_index(), M = f.minus_index();
        CHECK(f.table[P][P] == basis_vec(10, {0, 4, P}));
        CHECK(f.table[P][M] == basis_vec(10, {2, 6}));
        CHECK(f.table[M][M] == basis_vec(10, {0, 4, M}));
    }
    CHECK_THROWS_AS(deven_fusion(6), std::invalid_argument);
    CHECK_THROWS_AS(deven_fusion(0), std::invalid_argument);
}

TEST_CASE("dimension checks") {
    CHECK(dim_check(rep_of(DiagramType::A, 6, 5)));
    CHECK(dim_check(rep_of(DiagramType::D, 4, 4)));
    CHECK(dim_check(rep_of(DiagramType::D, 6, 8)));

    // golden-ratio equation at k = 8: dim(X+)^2 = 1 + dim(X+)
    const auto r8 = rep_of(DiagramType::D, 6, 8);
    const double x = r8.dims_a[r8.rank() - 2];
    CHECK(x * x == doctest::Approx(1.0 + x).epsilon(1e-9));

    CHECK_THROWS_AS(dim_check(rep_of(DiagramType::E6, 6, 10)), std::logic_error);
}

TEST_CASE("exports") {
    const auto tsv = tsv_string(deven_fusion(4));
    CHECK(tsv.find("X+\tX+\tX-") != std::string::npos);
    CHECK(tsv.find("X+\tX-\tX_0") != std::string::npos);

    const auto r = rep_of(DiagramType::E6, 6, 10);
    const auto j = nlohmann::json::parse(json_string(r));
    CHECK(j["k"] == 10);
    CHECK(j["diagram"] == "E6");
    CHECK(j["rep0"] == nlohmann::json({1, 0, 0, 1, 0, 1}));
    CHECK(j["branching"].size() == 11);
    CHECK(j["simples"].size() == 6);
}

}  // TEST_SUITE
