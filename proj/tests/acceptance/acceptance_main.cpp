// Acceptance suite: every check is an exact identity or an exact
// oracle-equivalence at desk scale; one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ozeta/global.hpp"
#include "ozeta/hecke.hpp"
#include "ozeta/local.hpp"
#include "ozeta/oracle.hpp"
#include "ozeta/weil.hpp"

using namespace ozeta;

namespace {

struct Criterion {
    std::string name;
    std::function<std::string()> run;  // empty result = pass, else failure detail
};

std::string series_mismatch(const QSeries& got, const QSeries& want, unsigned upto,
                            const std::string& what) {
    for (unsigned k = 0; k <= upto; ++k) {
        if (got.coeff(k) != want.coeff(k)) {
            std::ostringstream os;
            os << what << ": degree " << k << ": " << got.coeff(k) << " != " << want.coeff(k);
            return os.str();
        }
    }
    return {};
}

// 1. Hey oracle equivalence
std::string criterion_hey() {
    for (unsigned q : {2u, 3u})
        for (unsigned r : {1u, 2u}) {
            unsigned max_codim = 6 / r;
            auto counts = oracle::count_sublattices(q, r, max_codim);
            auto hey = local::hey_zeta({q, r, 1}, 6);
            for (unsigned n = 0; n <= max_codim; ++n) {
                if (n * r > 6) continue;
                if (Rat(counts.at(n * r)) != hey.coeff(n * r)) {
                    std::ostringstream os;
                    os << "q=" << q << " r=" << r << " colength " << n * r << ": oracle "
                       << counts.at(n * r) << " != hey " << hey.coeff(n * r);
                    return os.str();
                }
            }
        }
    return {};
}

// 2. 2-d local oracle equivalence
std::string criterion_slice2d() {
    for (unsigned q : {2u, 3u}) {
        auto census = oracle::count_ideals_2d(q, 4);
        auto zeta = local::slice_zeta({q, 1, 1}, 4);
        for (unsigned n = 0; n <= 4; ++n) {
            if (Rat(census.count(n)) != zeta.coeff(n)) {
                std::ostringstream os;
                os << "q=" << q << " colength " << n << ": oracle " << census.count(n)
                   << " != slice " << zeta.coeff(n);
                return os.str();
            }
        }
    }
    return {};
}

// 3. Symbol-algebra slice
std::string criterion_symbol() {
    auto alg = oracle::build_symbol(3, 2, -1, oracle::SymbolParam::param_u,
                                    oracle::SymbolParam::param_v, 6);
    auto slice_report = oracle::check_slice(alg, 2);
    if (!slice_report.pass()) return "check_slice failed on the quaternion symbol over F_3";
    auto census = oracle::count_ideals_algebra(alg, 2);
    auto zeta = local::slice_zeta({3, 1, 1}, 2);
    for (unsigned n = 1; n <= 2; ++n) {
        if (Rat(census.count(n)) != zeta.coeff(n)) {
            std::ostringstream os;
            os << "colength " << n << ": census " << census.count(n) << " != slice "
               << zeta.coeff(n);
            return os.str();
        }
    }
    return {};
}

// 4. Hecke tower
std::string criterion_tower() {
    auto alg = oracle::build_power_series_2d(2, 9);
    for (unsigned n = 1; n <= 3; ++n) {
        auto report = oracle::verify_tower(alg, n, 3);
        if (!report.pass) return "n=" + std::to_string(n) + ": " + report.failures.front();
    }
    return {};
}

// 5. Symbolic slice theorem
std::string criterion_symbolic() {
    for (auto [r, m] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}})
        for (long q : {2, 3}) {
            unsigned D = 8 / r;
            auto chi = hecke::ChiSpec::constant(pow_int(q, r), m);
            auto zbar = hecke::hey_lseries(q, r, m, D);
            auto zeta = hecke::rho_prime(hecke::multi_param_zeta(chi, zbar, D), r);
            auto direct = local::slice_zeta({q, r, m}, 8);
            auto diff = series_mismatch(zeta, direct, 8,
                                        "q=" + std::to_string(q) + " r=" + std::to_string(r) +
                                            " m=" + std::to_string(m));
            if (!diff.empty()) return diff;
            // closed form for Xi^n
            Rat scalar = 1;
            hecke::LMonomial mm = hecke::LMonomial::generator(0, 0);
            for (unsigned n = 1; n <= 5; ++n) {
                auto [s, next] = hecke::xi(mm, chi);
                scalar *= s;
                mm = next;
                hecke::LMonomial want;
                for (unsigned i = 0; i <= n; ++i) want = want * hecke::LMonomial::generator(i, 0);
                if (!(mm == want) || scalar != Rat(pow_int(q, static_cast<long>(r) * n)))
                    return "closed form fails at n=" + std::to_string(n);
            }
        }
    return {};
}

// 6. Global Euler-product cross-check
std::string criterion_euler_product() {
    global::OrderSpec plain{2, 1, weil::ldata_p2(2), {}, std::nullopt, std::nullopt, "P2", false};
    auto euler = global::euler_product_zeta(plain, 6);
    auto closed = global::azumaya_zeta(weil::ldata_p2(2), 1, 6);
    auto diff = series_mismatch(euler, closed, 6, "euler product vs azumaya");
    if (!diff.empty()) return diff;
    auto census = weil::ldata_p2(2).closed_point_census(3);
    if (census[0] != 7 || census[1] != 7 || census[2] != 22)
        return "P2/F_2 censuses differ from 7, 7, 22";
    if (closed.coeff(2) != Rat(49)) return "t^2 coefficient is not 49";
    if (Rat(oracle::subscheme_census_p2(2, 2)) != closed.coeff(2))
        return "subscheme census does not match the t^2 coefficient";
    return {};
}

// 7. Brauer-Severi identity
std::string criterion_brauer_severi() {
    for (unsigned d : {2u, 3u}) {
        auto az = global::azumaya_zeta(weil::ldata_p2(2), d, 8);
        auto bs = global::brauer_severi_zeta(weil::ldata_p2(2), d, 8);
        auto diff = series_mismatch(bs, az, 8, "d=" + std::to_string(d));
        if (!diff.empty()) return diff;
    }
    return {};
}

// 8. Poincare consistency
std::string criterion_poincare() {
    // both forms agree (asserted inside poincare_zeta) for the named specs
    global::OrderSpec d1{2, 1, weil::ldata_p2(2), {}, std::nullopt, std::nullopt, "", false};
    global::OrderSpec d2{3, 2, weil::ldata_p2(3), {}, std::nullopt, std::nullopt, "", false};
    auto p1 = global::poincare_zeta(d1, 6);
    global::poincare_zeta(d2, 6);
    auto spec = global::nc_plane_preset(global::NcPlaneKind::three_lines, 2, 2, 3);
    global::poincare_zeta(spec, 6);

    // d=1 coefficient of t^2 is 1 + 2z^2 + 3z^4 + 2z^6 + z^8, interpolated
    // from the oracle censuses |Hilb^2(P^2)(F_2)| = 49, |Hilb^2(P^2)(F_3)| = 169
    Polynomial want = Polynomial::from_ints({1, 0, 2, 0, 3, 0, 2, 0, 1});
    if (!(p1.coeff(2) == want)) return "t^2 Poincare coefficient differs";
    for (long q : {2L, 3L}) {
        Rat at_q = 0;  // evaluate at z^2 = q via the even part
        Rat qk = 1;
        for (int i = 0; i <= want.degree(); i += 2) {
            at_q += want.coeff(static_cast<std::size_t>(i)) * qk;
            qk *= q;
        }
        if (Rat(oracle::subscheme_census_p2(static_cast<unsigned>(q), 2)) != at_q) {
            std::ostringstream os;
            os << "census at q=" << q << " is " << oracle::subscheme_census_p2(unsigned(q), 2)
               << ", polynomial gives " << at_q;
            return os.str();
        }
    }

    // euler specialization for d=1: prod (1 - t^j)^{-3} = 1, 3, 9, 22, ...
    auto euler = global::euler_specialize(p1);
    QSeries want_euler(6);
    {
        auto colored = infinite_product<Rat>(6, 1, [&](unsigned n) {
            return RationalFunction(Polynomial::constant(1), one_minus_power(1, n))
                .pow(3)
                .expand(6);
        });
        want_euler = colored;
    }
    auto diff = series_mismatch(euler, want_euler, 6, "euler specialization");
    if (!diff.empty()) return diff;
    if (euler.coeff(0) != 1 || euler.coeff(1) != 3 || euler.coeff(2) != 9 ||
        euler.coeff(3) != 22)
        return "euler specialization is not 1, 3, 9, 22";
    return {};
}

// 9. NC-plane presets
std::string criterion_presets() {
    for (auto kind : {global::NcPlaneKind::three_lines, global::NcPlaneKind::conic_line,
                      global::NcPlaneKind::nodal_cubic}) {
        auto spec = global::nc_plane_preset(kind, 2, 2, 3);
        auto lhs = global::matrix_algebra_ratio(spec, 6);
        auto rhs = global::intro_theorem_ratio(spec, 6);
        auto diff = series_mismatch(lhs, rhs, 6, spec.name + " ratio");
        if (!diff.empty()) return diff;
    }
    auto skl = global::nc_plane_preset(global::NcPlaneKind::sklyanin, 2, 2, 3, 1);
    auto diff = series_mismatch(global::matrix_algebra_ratio(skl, 6),
                                global::intro_theorem_ratio(skl, 6), 6, "sklyanin ratio");
    if (!diff.empty()) return diff;
    global::OrderSpec mat{3, 2, weil::ldata_p2(3), {}, std::nullopt, std::nullopt, "", false};
    auto es = global::euler_specialize(global::poincare_zeta(skl, 6));
    auto em = global::euler_specialize(global::poincare_zeta(mat, 6));
    return series_mismatch(es, em, 6, "sklyanin euler vs matrix algebra");
}

// 10. Segal Dirichlet
std::string criterion_segal() {
    auto s = global::segal_dirichlet(8);
    if (s.a(1) != 1) return "a_1 != 1";
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        if (s.a(p) != Rat(p)) {
            std::ostringstream os;
            os << "a_" << p << " = " << s.a(p) << " != " << p;
            return os.str();
        }
        if (Rat(oracle::count_index_p_ideals_zx(p)) != s.a(p)) {
            std::ostringstream os;
            os << "brute-force count at p=" << p << " disagrees with a_p";
            return os.str();
        }
    }
    return {};
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"1 Hey oracle equivalence (q in {2,3}, r in {1,2}, colength <= 6)", criterion_hey},
        {"2 two-dimensional local oracle equivalence (colength <= 4)", criterion_slice2d},
        {"3 quaternion symbol over F_3: slice check and census", criterion_symbol},
        {"4 Hecke tower identities for F_2[[x,y]], z = y, colength <= 3", criterion_tower},
        {"5 symbolic slice theorem to degree 8 and Xi closed form", criterion_symbolic},
        {"6 global Euler-product cross-check on P^2 (d=1, q=2)", criterion_euler_product},
        {"7 Brauer-Severi identity to t^8 (d in {2,3})", criterion_brauer_severi},
        {"8 Poincare consistency and Euler specialization", criterion_poincare},
        {"9 nc-plane preset ratios and Sklyanin Euler collapse", criterion_presets},
        {"10 Segal Dirichlet coefficients vs brute force", criterion_segal},
    };
    int failures = 0;
    for (auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.run();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (detail.empty()) {
            std::cout << "[PASS] " << c.name << " (" << ms << " ms)\n";
        } else {
            std::cout << "[FAIL] " << c.name << " (" << ms << " ms): " << detail << "\n";
            ++failures;
        }
    }
    if (failures == 0)
        std::cout << "acceptance: all " << criteria.size() << " criteria hold\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
