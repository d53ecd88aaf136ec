#include <doctest.h>

#include <cmath>
#include <complex>

#include <json.hpp>

#include "vade/modinv.hpp"

using namespace vade;

namespace {

RepData rep_of(DiagramType type, int rank, int level) {
    return rep_data(analyze(make_module(type, rank, level)));
}

IntMat block_matrix(int size, std::vector<std::vector<int>> blocks) {
    IntMat z = zero_mat(size, size);
    for (const auto& blk : blocks)
        for (int i : blk)
            for (int j : blk) z[i][j] += 1;
    return z;
}

}  // namespace

TEST_SUITE("modinv") {

TEST_CASE("A-type invariant is the identity") {
    for (int k : {0, 3, 8}) {
        const auto inv = invariant(rep_of(DiagramType::A, k + 1, k));
        CHECK(inv.z == identity_mat(k + 1));
        CHECK(inv.commutes_s);
        CHECK(inv.commutes_t);
        CHECK(inv.z00 == 1);
    }
    CHECK(character_polynomial(rep_of(DiagramType::A, 3, 2)) == "|x0|^2+|x1|^2+|x2|^2");
}

TEST_CASE("D and E6 invariants match their block forms") {
    {
        const auto r = rep_of(DiagramType::D, 4, 4);
        const auto inv = invariant(r);
        CHECK(inv.z == block_matrix(5, {{0, 4}, {2}, {2}}));
        CHECK(character_polynomial(r) == "|x0+x4|^2+2|x2|^2");
        CHECK(inv.commutes_s);
        CHECK(inv.commutes_t);
    }
    {
        const auto r = rep_of(DiagramType::E6, 6, 10);
        const auto inv = invariant(r);
        CHECK(inv.z == block_matrix(11, {{0, 6}, {3, 7}, {4, 10}}));
        CHECK(character_polynomial(r) == "|x0+x6|^2+|x3+x7|^2+|x4+x10|^2");
        CHECK(inv.commutes_s);
        CHECK(inv.commutes_t);
    }
}

TEST_CASE("D-type diagonal pattern and trace") {
    const auto r = rep_of(DiagramType::D, 6, 8);
    const auto inv = invariant(r);
    CHECK(inv.z == block_matrix(9, {{0, 8}, {2, 6}, {4}, {4}}));
    // trace Z = number of non-zero branching entries over Pi0
    int64_t trace = 0;
    for (int i = 0; i <= 8; ++i) trace += inv.z[i][i];
    int64_t support = 0;
    for (int i = 0; i <= 8; ++i)
        for (int pi = 0; pi < r.rank(); ++pi)
            if (r.rep0[pi] && r.branching[i][pi] != 0) ++support;
    CHECK(trace == support);
}

TEST_CASE("subspace invariance under s and t") {
    CHECK(check_subspace_invariance(rep_of(DiagramType::A, 7, 6)));
    CHECK(check_subspace_invariance(rep_of(DiagramType::D, 4, 4)));
    CHECK(check_subspace_invariance(rep_of(DiagramType::E6, 6, 10)));
    CHECK(check_subspace_invariance(rep_of(DiagramType::E8, 8, 28)));
}

TEST_CASE("induced modular data") {
    {
        // A-type: s_A and t_A are the data of the category itself
        const int k = 4;
        const auto ind = induced_modular_data(rep_of(DiagramType::A, k + 1, k));
        REQUIRE(ind.computable);
        CHECK(ind.sl2_ok);
        const auto md = modular_data(k);
        const auto s = md.s();
        const auto t = md.t();
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                CHECK(std::abs(ind.s_a[i][j] - s[i][j]) < 1e-9);
                CHECK(std::abs(ind.t_a[i][j] - t[i][j]) < 1e-9);
            }
    }
    {
        const auto r = rep_of(DiagramType::E6, 6, 10);
        const auto ind = induced_modular_data(r);
        REQUIRE(ind.computable);
        CHECK(ind.sl2_ok);
        REQUIRE(ind.s_a.size() == 3);
        // first row proportional to the A-dimensions of the Rep0 simples
        std::vector<double> dims0;
        for (int pi = 0; pi < 6; ++pi)
            if (r.rep0[pi]) dims0.push_back(r.dims_a[pi]);
        const double ratio = ind.s_a[0][0].real() / dims0[0];
        for (size_t c = 0; c < dims0.size(); ++c)
            CHECK(std::abs(ind.s_a[0][c] - ratio * dims0[c]) < 1e-9);
    }
    {
        const auto ind = induced_modular_data(rep_of(DiagramType::E8, 8, 28));
        REQUIRE(ind.computable);
        CHECK(ind.sl2_ok);
        CHECK(ind.s_a.size() == 2);
    }
    {
        // D-even: the X+- columns coincide, so s_A is genuinely undetermined
        const auto ind = induced_modular_data(rep_of(DiagramType::D, 4, 4));
        CHECK_FALSE(ind.computable);
        CHECK(ind.reason.find("rank-deficient") != std::string::npos);
    }
}

TEST_CASE("rank and zeta relations") {
    CHECK(rank_zeta_check(rep_of(DiagramType::A, 1, 0)));
    CHECK(rank_zeta_check(rep_of(DiagramType::A, 12, 11)));
    CHECK(rank_zeta_check(rep_of(DiagramType::D, 6, 8)));
    CHECK(rank_zeta_check(rep_of(DiagramType::E8, 8, 28)));

    // E6 at k = 10: D(Rep0 A) * (1 + [7]) = D(C), with 1 + [7] ~ 4.7320508
    const auto r = rep_of(DiagramType::E6, 6, 10);
    CHECK(rank_zeta_check(r));
    const double dim_a = r.algebra.dim_a.embed().real();
    CHECK(dim_a == doctest::Approx(4.7320508).epsilon(1e-7));
    double d2 = 0.0;
    for (int pi = 0; pi < 6; ++pi)
        if (r.rep0[pi]) d2 += r.dims_a[pi] * r.dims_a[pi];
    CHECK(std::sqrt(d2) * dim_a == doctest::Approx(modular_data(10).D).epsilon(1e-12));
}

TEST_CASE("exports") {
    const auto r = rep_of(DiagramType::D, 4, 4);
    const auto inv = invariant(r);
    CHECK(tsv_string(inv) == "1\t0\t0\t0\t1\n0\t0\t0\t0\t0\n0\t0\t2\t0\t0\n0\t0\t0\t0\t0\n1\t0\t0\t0\t1\n");
    const auto j = nlohmann::json::parse(json_string(inv));
    CHECK(j["k"] == 4);
    CHECK(j["diagram"] == "D_4");
    CHECK(j["Z00"] == 1);
    CHECK(j["commutes_s"] == true);
    CHECK(j["Z"][2][2] == 2);
}

}  // TEST_SUITE
