#include <catch2/catch_amalgamated.hpp>

#include "ozeta/local.hpp"
#include "ozeta/oracle/builders.hpp"
#include "ozeta/oracle/census.hpp"
#include "ozeta/oracle/p2.hpp"
#include "ozeta/oracle/segal_oracle.hpp"

using namespace ozeta;
using namespace ozeta::oracle;

TEST_CASE("power series ring truncation is a valid algebra") {
    auto alg = build_power_series_2d(2, 4);
    CHECK(alg.dim() == 10);
    CHECK(alg.simples().size() == 1);
    CHECK(alg.simples()[0].mod.dim == 1);
    // x * y = y * x
    CHECK(alg.multiply(alg.named("x"), alg.named("y")) ==
          alg.multiply(alg.named("y"), alg.named("x")));
}

TEST_CASE("ideal census of F_q[[x,y]]") {
    auto census2 = count_ideals_2d(2, 4);
    CHECK(census2.count(0) == 1);
    CHECK(census2.count(1) == 1);  // the maximal ideal
    CHECK(census2.count(2) == 3);
    CHECK(census2.count(3) == 7);
    CHECK(census2.count(4) == 19);

    auto census3 = count_ideals_2d(3, 3);
    CHECK(census3.count(2) == 4);
    CHECK(census3.count(3) == 13);  // 1 + q + q^2

    auto census4 = count_ideals_2d(4, 2);
    CHECK(census4.count(2) == 5);  // 1 + q
}

TEST_CASE("census matches the closed-form slice zeta") {
    for (unsigned q : {2u, 3u}) {
        auto census = count_ideals_2d(q, 4);
        auto zeta = local::slice_zeta({q, 1, 1}, 4);
        for (unsigned n = 0; n <= 4; ++n) {
            INFO("q=" << q << " colength=" << n);
            CHECK(Rat(census.count(n)) == zeta.coeff(n));
        }
    }
}

TEST_CASE("BFS census matches the raw subspace scan") {
    for (unsigned q : {2u, 3u}) {
        auto alg = build_power_series_2d(q, 3);
        auto census = count_ideals_algebra(alg, 3);
        for (unsigned c = 1; c <= 3; ++c) {
            INFO("q=" << q << " colength=" << c);
            CHECK(census.count(c) == raw_scan_stable_count(alg, c));
        }
    }
}

TEST_CASE("census respects the faithful window") {
    auto alg = build_power_series_2d(2, 3);
    CHECK_THROWS_AS(count_ideals_algebra(alg, 4), std::invalid_argument);
}

TEST_CASE("class-refined counts sum to totals") {
    auto alg = build_power_series_2d(2, 3);
    auto census = count_ideals_algebra(alg, 3);
    for (unsigned c = 0; c <= 3; ++c) {
        Int total = 0;
        for (const auto& [key, cnt] : census.by_class)
            if (key.first == c) total += cnt;
        CHECK(total == census.count(c));
    }
    // single simple: class of a colength-2 quotient is t^2
    for (const auto& [key, cnt] : census.by_class)
        if (key.first == 2) CHECK(key.second == FactorClass{2});
}

TEST_CASE("determinism: repeated censuses are identical") {
    auto a = count_ideals_2d(2, 3);
    auto b = count_ideals_2d(2, 3);
    CHECK(a.by_colength == b.by_colength);
    CHECK(a.by_class == b.by_class);
}

TEST_CASE("P^2 subscheme census") {
    CHECK(subscheme_census_p2(2, 1) == 7);
    CHECK(subscheme_census_p2(3, 1) == 13);
    // 21 pairs + 7 degree-2 points + 21 tangent directions
    CHECK(subscheme_census_p2(2, 2) == 49);
    // the same classification at q=3 must match 1 + 2q + 3q^2 + 2q^3 + q^4
    CHECK(subscheme_census_p2(3, 2) == 1 + 2 * 3 + 3 * 9 + 2 * 27 + 81);
    CHECK_THROWS_AS(subscheme_census_p2(2, 3), std::invalid_argument);
}

TEST_CASE("index-p ideal count of Z[x]") {
    for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(count_index_p_ideals_zx(p) == Int(p));
    CHECK_THROWS_AS(count_index_p_ideals_zx(4), std::invalid_argument);
}
