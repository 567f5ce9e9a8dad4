#include <catch2/catch_amalgamated.hpp>

#include "ozeta/local.hpp"
#include "ozeta/oracle/sublattices.hpp"

using namespace ozeta;
using namespace ozeta::oracle;

TEST_CASE("sublattices of a rank-1 lattice: one per colength") {
    auto counts = count_sublattices(2, 1, 5);
    for (unsigned n = 0; n <= 5; ++n) CHECK(counts.at(n) == 1);
}

TEST_CASE("codimension-1 sublattices of O^2 are the q+1 hyperplane pullbacks") {
    CHECK(count_sublattices(2, 2, 1).at(2) == 3);
    CHECK(count_sublattices(3, 2, 1).at(2) == 4);
}

TEST_CASE("codimension-2 count over F_3 is 1 + q + q^2") {
    CHECK(count_sublattices(3, 2, 2).at(4) == 13);
}

TEST_CASE("HNF enumeration matches the raw subspace scan") {
    for (unsigned q : {2u, 3u}) {
        auto counts = count_sublattices(q, 2, 2);
        for (unsigned codim : {1u, 2u}) {
            INFO("q=" << q << " codim=" << codim);
            CHECK(counts.at(2 * codim) == raw_count_sublattices(q, 2, codim, 2));
        }
    }
}

TEST_CASE("sublattice counts match Hey's formula") {
    for (unsigned q : {2u, 3u})
        for (unsigned r : {1u, 2u}) {
            auto counts = count_sublattices(q, r, 3);
            auto hey = local::hey_zeta({q, r, 1}, 3 * r);
            for (unsigned n = 0; n <= 3; ++n) {
                INFO("q=" << q << " r=" << r << " colength=" << n * r);
                CHECK(Rat(counts.at(n * r)) == hey.coeff(n * r));
            }
        }
}

TEST_CASE("bounds are enforced") {
    CHECK_THROWS_AS(count_sublattices(2, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_sublattices(2, 2, 7), std::invalid_argument);
}
