#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "vade/algebra.hpp"

using namespace vade;

namespace {

std::vector<int64_t> a_sum(int level, std::initializer_list<int> entries) {
    std::vector<int64_t> v(level + 1, 0);
    for (int e : entries) v[e] = 1;
    return v;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("unit vertices sit at the ends of the longest legs") {
    CHECK(unit_vertices(make_module(DiagramType::A, 6, 5)) == std::vector<int>{0, 5});
    CHECK(unit_vertices(make_module(DiagramType::A, 1, 0)) == std::vector<int>{0});
    CHECK(unit_vertices(make_module(DiagramType::D, 4, 4)) == std::vector<int>{0, 2, 3});
    CHECK(unit_vertices(make_module(DiagramType::D, 6, 8)) == std::vector<int>{0});
    CHECK(unit_vertices(make_module(DiagramType::E6, 6, 10)) == std::vector<int>{0, 5});
    CHECK(unit_vertices(make_module(DiagramType::E7, 7, 16)) == std::vector<int>{0});
    CHECK(unit_vertices(make_module(DiagramType::E8, 8, 28)) == std::vector<int>{0});
    CHECK(unit_vertices(make_module(DiagramType::T, 2, 3)) == std::vector<int>{0});
    CHECK(unit_vertices(make_module(DiagramType::T, 1, 1)) == std::vector<int>{0});
}

TEST_CASE("branching of A reproduces the algebra table") {
    CHECK(branching_of_a(make_module(DiagramType::A, 8, 7), 0) == a_sum(7, {0}));
    CHECK(branching_of_a(make_module(DiagramType::D, 5, 6), 0) == a_sum(6, {0, 6}));
    CHECK(branching_of_a(make_module(DiagramType::T, 3, 5), 0) == a_sum(5, {0, 5}));
    CHECK(branching_of_a(make_module(DiagramType::E6, 6, 10), 0) == a_sum(10, {0, 6}));
    CHECK(branching_of_a(make_module(DiagramType::E7, 7, 16), 0) == a_sum(16, {0, 8, 16}));
    CHECK(branching_of_a(make_module(DiagramType::E8, 8, 28), 0) ==
          a_sum(28, {0, 10, 18, 28}));
    CHECK_THROWS_AS(branching_of_a(make_module(DiagramType::E6, 6, 10), 3),
                    std::invalid_argument);
}

TEST_CASE("branching is independent of the unit vertex choice") {
    for (const auto& m : {make_module(DiagramType::A, 11, 10), make_module(DiagramType::D, 4, 4),
                          make_module(DiagramType::E6, 6, 10)}) {
        const auto units = unit_vertices(m);
        for (int u : units) CHECK(branching_of_a(m, u) == branching_of_a(m, units.front()));
    }
}

TEST_CASE("twist obstruction") {
    CHECK(analyze(make_module(DiagramType::A, 5, 4)).twist_ok);
    CHECK(analyze(make_module(DiagramType::E6, 6, 10)).twist_ok);   // theta_6 = 1 at k=10
    CHECK_FALSE(analyze(make_module(DiagramType::D, 5, 6)).twist_ok);  // theta_6 = -1 at k=6
    CHECK(analyze(make_module(DiagramType::E8, 8, 28)).twist_ok);
}

TEST_CASE("commutativity sign") {
    // (-1)^k theta_k^{-1} = i^k
    CHECK(commutativity_sign(0, 0, 5).is_one());
    CHECK(commutativity_sign(4, 0, 4).is_one());
    CHECK(commutativity_sign(8, 0, 8).is_one());
    CHECK(commutativity_sign(6, 0, 6) == Cyclotomic::integer(32, -1));  // i^6
    for (int k = 0; k <= 28; ++k)
        CHECK(commutativity_sign(k, 0, k).is_one() == (k % 4 == 0));

    // the E7 obstruction: theta_8^{-1} q^{72} at l = 18 is e^{-2 pi i/9}
    const Cyclotomic e7 = commutativity_sign(8, 16, 16);
    CHECK(e7 == Cyclotomic::root(72, 64));
    CHECK_FALSE(e7.is_one());
    CHECK(std::abs(e7.embed() - std::polar(1.0, -2.0 * std::numbers::pi / 9.0)) < 1e-9);

    CHECK_THROWS_AS(commutativity_sign(1, 3, 5), std::invalid_argument);  // odd 2b
    CHECK_THROWS_AS(commutativity_sign(3, 0, 2), std::invalid_argument);
}

TEST_CASE("analyze verdicts") {
    const auto d4 = analyze(make_module(DiagramType::D, 4, 4));
    CHECK(d4.accepted());
    CHECK(d4.multiplicities == a_sum(4, {0, 4}));
    CHECK(d4.commutativity_ok == true);
    CHECK(d4.unit_vertex == 0);

    const auto d7 = analyze(make_module(DiagramType::D, 7, 10));
    CHECK_FALSE(d7.accepted());
    CHECK(*d7.excluded_reason == kRejectDOdd);
    CHECK(d7.commutativity_ok == false);

    const auto t2 = analyze(make_module(DiagramType::T, 2, 3));
    CHECK_FALSE(t2.accepted());
    CHECK(*t2.excluded_reason == kRejectT);

    const auto e7 = analyze(make_module(DiagramType::E7, 7, 16));
    CHECK_FALSE(e7.accepted());
    CHECK(*e7.excluded_reason == kRejectE7);

    const auto e6 = analyze(make_module(DiagramType::E6, 6, 10));
    CHECK(e6.accepted());
    CHECK(e6.note == kAcceptConformalEmbedding);
    CHECK(e6.multiplicities[0] == 1);
    // dim A = 1 + [7] at l = 12
    CHECK(e6.dim_a == Cyclotomic::one(48) + qint(7, 12));
    CHECK(e6.dim_a.embed().real() == doctest::Approx(4.7320508076).epsilon(1e-9));
}

TEST_CASE("json verdict record") {
    const auto j = nlohmann::json::parse(json_string(analyze(make_module(DiagramType::D, 7, 10))));
    CHECK(j["k"] == 10);
    CHECK(j["diagram"] == "D_7");
    CHECK(j["accepted"] == false);
    CHECK(j["reason"] == kRejectDOdd);
    CHECK(j["A"] == nlohmann::json(a_sum(10, {0, 10})));
}

}  // TEST_SUITE
