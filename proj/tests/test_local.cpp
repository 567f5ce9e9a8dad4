#include <catch2/catch_amalgamated.hpp>

#include "ozeta/local.hpp"

using namespace ozeta;
using namespace ozeta::local;

namespace {

void expect_coeffs(const QSeries& s, const std::vector<long long>& want) {
    REQUIRE(s.order() + 1 >= want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        INFO("degree " << k);
        CHECK(s.coeff(static_cast<unsigned>(k)) == Rat(want[k]));
    }
}

}  // namespace

TEST_CASE("hey zeta") {
    // a DVR has exactly one ideal per colength
    expect_coeffs(hey_zeta({7, 1, 1}, 5), {1, 1, 1, 1, 1, 1});
    // M_2 over a DVR at q=2: colength-n sublattice counts at t^{2n}
    expect_coeffs(hey_zeta({2, 2, 1}, 6), {1, 0, 3, 0, 7, 0, 15});
    // product of two DVRs: pairs (i, j) with i + j = n
    expect_coeffs(hey_zeta({2, 1, 2}, 3), {1, 2, 3, 4});
}

TEST_CASE("slice zeta") {
    expect_coeffs(slice_zeta({2, 1, 1}, 3), {1, 1, 3, 7});
    CHECK(slice_zeta({3, 1, 1}, 3).coeff(3) == Rat(13));  // q^2 + q + 1
    // matrix shape r = d used by the Azumaya local factor
    expect_coeffs(slice_zeta({2, 2, 1}, 8), {1, 0, 3, 0, 19, 0, 99, 0, 563});
}

TEST_CASE("slice zeta support and positivity") {
    for (unsigned r = 1; r <= 3; ++r) {
        auto s = slice_zeta({2, r, 1}, 9);
        for (unsigned n = 0; n <= 9; ++n) {
            INFO("r=" << r << " n=" << n);
            if (n % r != 0)
                CHECK(s.coeff(n) == 0);
            else {
                CHECK(is_integer(s.coeff(n)));
                CHECK(s.coeff(n) >= 0);
            }
        }
    }
    auto h = hey_zeta({3, 2, 1}, 8);
    for (unsigned n = 0; n <= 8; ++n)
        if (n % 2) CHECK(h.coeff(n) == 0);
}

TEST_CASE("slice zeta as iterated Hey substitution") {
    // Z_A(t) = prod_{n>=0} Z_Abar(q^{rn} t^{r(n+1)}) with Z_Abar Hey's formula
    for (auto [r, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (long q : {2, 3}) {
            const unsigned N = 8;
            RationalFunction hey = RationalFunction::one();
            for (unsigned j = 0; j < r; ++j)
                hey *= RationalFunction(Polynomial::constant(1),
                                        one_minus_power(Rat(pow_int(q, j)), 1))
                           .pow(static_cast<long>(m));
            auto prod = QSeries::one(N);
            for (unsigned n = 0; r * (n + 1) <= N; ++n)
                prod *= substitute_qab(hey, q, static_cast<long>(r * n), r * (n + 1)).expand(N);
            INFO("q=" << q << " r=" << r << " m=" << m);
            CHECK(prod == slice_zeta({q, r, m}, N));
        }
    }
}

TEST_CASE("local factor") {
    CHECK(local_factor(1, {2, 1, 1}, 6) == slice_zeta({2, 1, 1}, 6));

    auto f2 = local_factor(2, {2, 1, 1}, 5);
    expect_coeffs(f2, {1, 0, 1, 0, 5, 0});  // slice over F_4, reindexed in t^2

    auto f3 = local_factor(3, {2, 1, 1}, 4);
    expect_coeffs(f3, {1, 0, 0, 1, 0});  // unique maximal ideal at t^3
}
