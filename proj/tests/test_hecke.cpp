#include <catch2/catch_amalgamated.hpp>

#include "ozeta/hecke.hpp"
#include "ozeta/local.hpp"

using namespace ozeta;
using namespace ozeta::hecke;

TEST_CASE("xi on monomials") {
    auto chi_q = ChiSpec::constant(2, 1);
    auto [s1, m1] = xi(LMonomial::generator(0, 0), chi_q);
    CHECK(s1 == Rat(2));
    CHECK(m1 == LMonomial::generator(0, 0) * LMonomial::generator(1, 0));

    auto [s0, m0] = xi(LMonomial{}, chi_q);
    CHECK(s0 == Rat(1));
    CHECK(m0 == LMonomial{});

    // chi == q^2: Xi^2(t_1) = q^4 t_1 z(t_1) z^2(t_1)
    auto chi_q2 = ChiSpec::constant(4, 1);
    auto [sa, ma] = xi(LMonomial::generator(0, 0), chi_q2);
    auto [sb, mb] = xi(ma, chi_q2);
    CHECK(sa * sb == Rat(16));
    CHECK(mb == LMonomial::generator(0, 0) * LMonomial::generator(1, 0) *
                    LMonomial::generator(2, 0));
}

TEST_CASE("closed form Xi^n(t_i) = q^{rn} t_i z(t_i)...z^n(t_i)") {
    for (unsigned r : {1u, 2u}) {
        Int qr = pow_int(2, r);
        auto chi = ChiSpec::constant(qr, 1);
        Rat scalar = 1;
        LMonomial m = LMonomial::generator(0, 0);
        for (unsigned n = 1; n <= 5; ++n) {
            auto [s, mm] = xi(m, chi);
            scalar *= s;
            m = mm;
            LMonomial want;
            for (unsigned i = 0; i <= n; ++i) want = want * LMonomial::generator(i, 0);
            INFO("r=" << r << " n=" << n);
            CHECK(m == want);
            CHECK(scalar == Rat(pow_int(qr, n)));
        }
    }
}

TEST_CASE("xi is a ring endomorphism") {
    auto chi = ChiSpec::constant(3, 2, {1, 0});
    LSeries a(5), b(5);
    a.add_term(LMonomial{}, 1);
    a.add_term(LMonomial::generator(0, 0), 2);
    a.add_term(LMonomial::generator(1, 1) * LMonomial::generator(0, 0), Rat(1, 3));
    b.add_term(LMonomial{}, 1);
    b.add_term(LMonomial::generator(2, 1), -5);
    b.add_term(LMonomial::generator(0, 1).pow(2), Rat(7, 2));
    CHECK(xi(a * b, chi) == xi(a, chi) * xi(b, chi));
}

TEST_CASE("rho applies sigma powers") {
    auto chi_id = ChiSpec::constant(2, 1);
    CHECK(rho(LMonomial::generator(2, 0), chi_id) == LMonomial::generator(0, 0));

    auto chi_swap = ChiSpec::constant(2, 2, {1, 0});
    CHECK(rho(LMonomial::generator(1, 0), chi_swap) == LMonomial::generator(0, 1));
    CHECK(rho(LMonomial::generator(2, 0), chi_swap) == LMonomial::generator(0, 0));
}

TEST_CASE("rho_prime composed with rho on the closed form") {
    // rho'(rho(Xi^n(t_i))) = q^{rn} t^{r(n+1)} for chi == q^r
    for (unsigned r : {1u, 2u}) {
        auto chi = ChiSpec::constant(pow_int(3, r), 1);
        Rat scalar = 1;
        LMonomial m = LMonomial::generator(0, 0);
        for (unsigned n = 1; n <= 4; ++n) {
            auto [s, mm] = xi(m, chi);
            scalar *= s;
            m = mm;
            LSeries single(8);
            single.add_term(rho(m, chi), scalar);
            auto t_series = rho_prime(single, r);
            INFO("r=" << r << " n=" << n);
            CHECK(t_series.coeff(r * (n + 1)) == Rat(pow_int(3, r * n)));
        }
    }
}

TEST_CASE("rho_prime rejects series outside the degree-zero submonoid") {
    LSeries s(3);
    s.add_term(LMonomial::generator(1, 0), 1);
    CHECK_THROWS_AS(rho_prime(s, 1), std::invalid_argument);
}

TEST_CASE("partial products stabilize") {
    auto chi = ChiSpec::constant(2, 1);
    auto zbar = hey_lseries(2, 1, 1, 6);
    CHECK(partial_product(zbar, chi, 0, 6) == LSeries::one(6));
    for (unsigned n = 1; n <= 5; ++n) {
        auto a = partial_product(zbar, chi, n, 6);
        auto b = partial_product(zbar, chi, n + 1, 6);
        // partial_product(n+1) - partial_product(n) is supported in degree > n
        for (const auto& [m, v] : b.terms())
            if (m.total_degree() <= n) CHECK(v == a.coeff(m));
        for (const auto& [m, v] : a.terms())
            if (m.total_degree() <= n) CHECK(v == b.coeff(m));
    }
}

TEST_CASE("slice theorem symbolically reproduces the local formula") {
    for (auto [r, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        for (long q : {2, 3}) {
            const unsigned target = 8;
            unsigned D = target / r;
            auto chi = ChiSpec::constant(pow_int(q, r), m);
            auto zbar = hey_lseries(q, r, m, D);
            auto zeta = rho_prime(multi_param_zeta(chi, zbar, D), r);
            auto direct = local::slice_zeta({q, r, m}, target);
            INFO("q=" << q << " r=" << r << " m=" << m);
            for (unsigned k = 0; k <= target; ++k) CHECK(zeta.coeff(k) == direct.coeff(k));
        }
    }
}

TEST_CASE("multi parameter zeta is sigma-equivariant") {
    // g = 2, sigma = (1 2), Zbar = 1/((1-t_1)(1-t_2)), chi == q
    auto chi = ChiSpec::constant(2, 2, {1, 0});
    auto zbar = hey_lseries(2, 1, 2, 6);
    auto z = multi_param_zeta(chi, zbar, 6);
    for (const auto& [m, v] : z.terms()) {
        // swap t_1 <-> t_2
        LMonomial swapped;
        for (const auto& [g, e] : m.exponents()) {
            LMonomial gen = LMonomial::generator(g.i, 1 - g.j);
            swapped = swapped * gen.pow(e);
        }
        CHECK(z.coeff(swapped) == v);
    }
    // g = 1 with trivial sigma reduces to the one-variable case
    auto chi1 = ChiSpec::constant(2, 1);
    auto z1 = multi_param_zeta(chi1, hey_lseries(2, 1, 1, 6), 6);
    auto t_form = rho_prime(z1, 1);
    auto direct = local::slice_zeta({2, 1, 1}, 6);
    for (unsigned k = 0; k <= 6; ++k) CHECK(t_form.coeff(k) == direct.coeff(k));
}
