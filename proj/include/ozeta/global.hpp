#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ozeta/dirichlet.hpp"
#include "ozeta/local.hpp"
#include "ozeta/series.hpp"
#include "ozeta/threads.hpp"
#include "ozeta/weil.hpp"

namespace ozeta::global {

using weil::LData;
using weil::WeilPoincarePolynomial;

/// One ramification stratum: the L-data of the part of the ramification
/// cover lying over it, and the ramification index along it. The formulas
/// consume cover data only.
struct RamificationStratum {
    LData cover;
    unsigned e = 2;
};

/// Maximal order on a surface described by its strata: base field size q,
/// degree d, the Azumaya locus U, and the ramification strata. Per-stratum
/// ramification indices are permitted (specs violating the uniform-index
/// assumption are flagged, not rejected). Presets record the base surface
/// and the full ramification curve for ratio reporting.
struct OrderSpec {
    Int q;
    unsigned d = 1;
    LData azumaya_locus;
    std::vector<RamificationStratum> strata;
    std::optional<LData> base_surface;
    std::optional<LData> ratio_curve;
    std::string name;
    bool primitive_droot_available = false;  // recorded metadata, never enforced

    void validate() const {
        if (d < 1) throw std::invalid_argument("OrderSpec: d must be >= 1");
        if (gcd_int(q, Int(d)) != 1)
            throw std::invalid_argument("OrderSpec: q must be coprime to d");
        for (const auto& s : strata) {
            if (s.e < 2) throw std::invalid_argument("OrderSpec: ramification index must be >= 2");
            if (d % s.e != 0)
                throw std::invalid_argument("OrderSpec: ramification index must divide d");
            if (s.cover.q() != q) throw std::invalid_argument("OrderSpec: stratum field mismatch");
        }
        if (azumaya_locus.q() != q)
            throw std::invalid_argument("OrderSpec: Azumaya locus field mismatch");
    }

    bool satisfies_terminal_assumption() const {
        for (std::size_t i = 1; i < strata.size(); ++i)
            if (strata[i].e != strata[0].e) return false;
        return true;
    }
};

/// prod_{n>=1} prod_{j=1}^{d} Z_X(q^{nd-j} t^{nd}) for the Azumaya part.
inline QSeries azumaya_zeta(const LData& x, unsigned d, unsigned N) {
    if (d < 1) throw std::invalid_argument("azumaya_zeta: d must be >= 1");
    RationalFunction z = x.serre_zeta();
    return infinite_product<Rat>(N, d, [&](unsigned n) {
        RationalFunction f = RationalFunction::one();
        for (unsigned j = 1; j <= d; ++j)
            f *= substitute_qab(z, x.q(), static_cast<long>(n * d) - static_cast<long>(j), n * d);
        return f.expand(N);
    });
}

/// The same zeta function assembled through the Brauer-Severi scheme:
/// Z_B(u) = prod_{j=1}^{d} Z_X(q^{d-j} u) (fibrewise P^{d-1}), then
/// prod_{n>=1} Z_B(q^{d(n-1)} t^{nd}).
inline QSeries brauer_severi_zeta(const LData& x, unsigned d, unsigned N) {
    if (d < 1) throw std::invalid_argument("brauer_severi_zeta: d must be >= 1");
    RationalFunction zx = x.serre_zeta();
    RationalFunction zb = RationalFunction::one();
    for (unsigned j = 1; j <= d; ++j)
        zb *= substitute_qab(zx, x.q(), static_cast<long>(d - j), 1);
    return infinite_product<Rat>(N, d, [&](unsigned n) {
        return substitute_qab(zb, x.q(), static_cast<long>(d * (n - 1)), n * d).expand(N);
    });
}

/// prod_{n>=1} prod_{j=1}^{r} Z_cover(q^{nr-j} t^{nr}) with r = d/e.
inline QSeries strata_zeta(const RamificationStratum& s, unsigned d, unsigned N) {
    if (s.e < 2 || d % s.e != 0)
        throw std::invalid_argument("strata_zeta: ramification index must be >= 2 and divide d");
    unsigned r = d / s.e;
    RationalFunction z = s.cover.serre_zeta();
    return infinite_product<Rat>(N, r, [&](unsigned n) {
        RationalFunction f = RationalFunction::one();
        for (unsigned j = 1; j <= r; ++j)
            f *= substitute_qab(z, s.cover.q(), static_cast<long>(n * r) - static_cast<long>(j),
                                n * r);
        return f.expand(N);
    });
}

/// Global zeta function: Azumaya factor over U times one factor per stratum.
inline QSeries order_zeta(const OrderSpec& spec, unsigned N) {
    spec.validate();
    std::vector<QSeries> parts = parallel_map<RamificationStratum, QSeries>(
        spec.strata,
        [&](const RamificationStratum& s) { return strata_zeta(s, spec.d, N); });
    QSeries out = azumaya_zeta(spec.azumaya_locus, spec.d, N);
    for (const auto& p : parts) out *= p;
    return out;
}

inline QSeries pow_series(const QSeries& s, Int e) {
    if (e < 0) throw std::invalid_argument("pow_series: negative exponent");
    QSeries r = QSeries::one(s.order()), base = s;
    while (e > 0) {
        if ((e & 1) != 0) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// The same global zeta function assembled as an Euler product over closed
/// points: local slice factors of shape (q^k, r = d, m = 1) at the a_k(U)
/// points of each degree k off the ramification, and shape (q^k, r = d/e,
/// m = 1) at the closed points of each ramification cover (the product over
/// cover points realizes the stratum formula).
inline QSeries euler_product_zeta(const OrderSpec& spec, unsigned N) {
    spec.validate();
    QSeries out = QSeries::one(N);
    auto census_u = spec.azumaya_locus.closed_point_census(N);
    for (unsigned k = 1; k * spec.d <= N; ++k) {
        if (census_u[k - 1] == 0) continue;
        out *= pow_series(local::local_factor(k, {spec.q, spec.d, 1}, N), census_u[k - 1]);
    }
    for (const auto& s : spec.strata) {
        unsigned r = spec.d / s.e;
        auto census = s.cover.closed_point_census(N);
        for (unsigned k = 1; k * r <= N; ++k) {
            if (census[k - 1] == 0) continue;
            out *= pow_series(local::local_factor(k, {spec.q, r, 1}, N), census[k - 1]);
        }
    }
    return out;
}

/// Dirichlet series of the affine line over the integers: the local factor
/// at p is prod_{n>=1} (1 - p^n u^n)^{-1} in u = p^{-s}.
inline DirichletSeries segal_dirichlet(unsigned N) {
    return dirichlet_from_euler(N, [](unsigned p, unsigned max_exp) {
        return infinite_product<Rat>(max_exp, 1, [&](unsigned n) {
            return RationalFunction(Polynomial::constant(1),
                                    one_minus_power(pow_rat(Rat(p), static_cast<long>(n)), n))
                .expand(max_exp);
        });
    });
}

// --- Poincare zeta functions -------------------------------------------------

/// exp-form factor for one stratum (step = d on the Azumaya locus, r on a
/// ramification stratum):
///   Z(-z, t) = exp( sum_k P(-z^k)/k * t^{k step} (z^{2 step k}-1) /
///                   ((1-(z^2 t)^{k step})(z^{2k}-1)) ),
/// returned with z -> -z applied, i.e. as Z(z, t).
inline ZPolySeries poincare_exp_factor(const WeilPoincarePolynomial& p, unsigned step,
                                       unsigned N) {
    ZPolySeries logsum(N);
    for (unsigned k = 1; k * step <= N; ++k) {
        Polynomial pk = p.at_minus_z_pow(k) * Rat(1, static_cast<int>(k));
        // (z^{2 step k} - 1)/(z^{2k} - 1) = sum_{l=0}^{step-1} z^{2kl}
        Polynomial geo;
        for (unsigned l = 0; l < step; ++l)
            geo += Polynomial::monomial(1, 2ull * k * l);
        Polynomial zpart = pk * geo;
        for (unsigned j = 0; k * step * (j + 1) <= N; ++j) {
            unsigned tdeg = k * step * (j + 1);
            Polynomial term = zpart * Polynomial::monomial(1, 2ull * k * step * j);
            logsum.set_coeff(tdeg, logsum.coeff(tdeg) + term);
        }
    }
    ZPolySeries exp_form = logsum.exp();
    // substitute z -> -z
    ZPolySeries out(N);
    for (unsigned n = 0; n <= N; ++n) {
        const Polynomial& c = exp_form.coeff(n);
        std::vector<Rat> flipped(c.coeffs());
        for (std::size_t i = 1; i < flipped.size(); i += 2) flipped[i] = -flipped[i];
        out.set_coeff(n, Polynomial(std::move(flipped)));
    }
    return out;
}

/// Weil-Betti product form for one stratum:
///   prod_{i=0}^{4} prod_{j>=0} prod_{l=0}^{step-1}
///     (1 - (-z)^{2 j step + 2l + i} t^{step (j+1)})^{-(-1)^i b_i}.
inline ZPolySeries poincare_product_factor(const WeilPoincarePolynomial& p, unsigned step,
                                           unsigned N) {
    return infinite_product<Polynomial>(N, step, [&](unsigned n) {
        unsigned j = n - 1;
        ZPolySeries f = ZPolySeries::one(N);
        for (int i = 0; i < 5; ++i) {
            long long b = p.b[static_cast<std::size_t>(i)];
            if (b == 0) continue;
            for (unsigned l = 0; l < step; ++l) {
                unsigned long long zexp = 2ull * j * step + 2 * l + static_cast<unsigned>(i);
                Rat sign = (zexp % 2 == 0) ? 1 : -1;  // (-z)^zexp = sign * z^zexp
                ZPolySeries base = ZPolySeries::one(N);
                if (step * (j + 1) <= N)
                    base.set_coeff(step * (j + 1), Polynomial::monomial(-sign, zexp));
                long expo = -((i % 2 == 0) ? 1 : -1) * b;
                f *= base.pow(expo);
            }
        }
        return f;
    });
}

/// Poincare zeta function of the order: both the exp form and the
/// Weil-Betti product form are computed and must agree exactly; the common
/// value is returned. Requires Weil-Poincare polynomials for the Azumaya
/// locus and every cover.
inline ZPolySeries poincare_zeta(const OrderSpec& spec, unsigned N) {
    spec.validate();
    auto pu = spec.azumaya_locus.weil_poincare();
    ZPolySeries exp_form = poincare_exp_factor(pu, spec.d, N);
    ZPolySeries prod_form = poincare_product_factor(pu, spec.d, N);
    for (const auto& s : spec.strata) {
        unsigned r = spec.d / s.e;
        auto pc = s.cover.weil_poincare();
        exp_form *= poincare_exp_factor(pc, r, N);
        prod_form *= poincare_product_factor(pc, r, N);
    }
    if (!(exp_form == prod_form))
        throw std::logic_error("poincare_zeta: exp form and product form disagree");
    return exp_form;
}

/// z = -1 specialization ("Euler" zeta function).
inline QSeries euler_specialize(const ZPolySeries& p) {
    QSeries out(p.order());
    for (unsigned n = 0; n <= p.order(); ++n) out.set_coeff(n, p.coeff(n).eval(Rat(-1)));
    return out;
}

/// Evaluate z^2 = q, defined when every coefficient is an even polynomial;
/// recovers the point-count series per the Weil-conjecture substitution.
inline QSeries poincare_at_q(const ZPolySeries& p, const Int& q) {
    QSeries out(p.order());
    for (unsigned n = 0; n <= p.order(); ++n) {
        const Polynomial& c = p.coeff(n);
        Rat acc = 0, qk = 1;
        for (int i = 0; i <= c.degree(); ++i) {
            if (i % 2 == 1 && c.coeff(static_cast<std::size_t>(i)) != 0)
                throw std::domain_error("poincare_at_q: odd z-powers present");
            if (i % 2 == 0) {
                acc += c.coeff(static_cast<std::size_t>(i)) * qk;
                qk *= Rat(q);
            }
        }
        out.set_coeff(n, acc);
    }
    return out;
}

/// order_zeta divided by the matrix-algebra zeta on the recorded base
/// surface.
inline QSeries matrix_algebra_ratio(const OrderSpec& spec, unsigned N) {
    if (!spec.base_surface)
        throw std::invalid_argument("matrix_algebra_ratio: no base surface recorded");
    return order_zeta(spec, N) * azumaya_zeta(*spec.base_surface, spec.d, N).invert();
}

/// The displayed ratio of cover and base products over the ramification
/// curve Y (numerator with r = d/e, denominator with d).
inline QSeries intro_theorem_ratio(const OrderSpec& spec, unsigned N) {
    if (!spec.ratio_curve)
        throw std::invalid_argument("intro_theorem_ratio: no ramification curve recorded");
    if (!spec.satisfies_terminal_assumption() || spec.strata.empty())
        throw std::invalid_argument("intro_theorem_ratio: requires a uniform ramification index");
    unsigned e = spec.strata[0].e;
    unsigned r = spec.d / e;
    RationalFunction zy = spec.ratio_curve->serre_zeta();
    auto product = [&](unsigned step) {
        return infinite_product<Rat>(N, step, [&](unsigned n) {
            RationalFunction f = RationalFunction::one();
            for (unsigned j = 1; j <= step; ++j)
                f *= substitute_qab(zy, spec.q, static_cast<long>(n * step) - static_cast<long>(j),
                                    n * step);
            return f.expand(N);
        });
    };
    return product(r) * product(spec.d).invert();
}

// --- noncommutative plane presets ---------------------------------------------

enum class NcPlaneKind { three_lines, conic_line, nodal_cubic, sklyanin };

inline NcPlaneKind nc_plane_kind_from_string(const std::string& s) {
    if (s == "three_lines") return NcPlaneKind::three_lines;
    if (s == "conic_line") return NcPlaneKind::conic_line;
    if (s == "nodal_cubic") return NcPlaneKind::nodal_cubic;
    if (s == "sklyanin") return NcPlaneKind::sklyanin;
    throw std::invalid_argument("unknown preset '" + s + "'");
}

/// Maximal orders on P^2 ramified on a cubic. The cover L-data encode the
/// cover's own stratification; for the singular cubics the degree-e covers
/// are totally ramified at the singular points, so the cover strata are
/// isomorphic to the base strata:
///   three lines: P1 + A1 + (A1 - pt),  conic+line: P1 + (A1 - pt),
///   nodal cubic: (A1 - pt) + pt.
/// The Sklyanin case has an etale cover of the elliptic curve with the same
/// L-polynomial (same genus forces L(t) = 1).
inline OrderSpec nc_plane_preset(NcPlaneKind kind, unsigned d, unsigned e, const Int& q,
                                 const Int& sklyanin_trace = 0) {
    if (e < 2) throw std::invalid_argument("nc_plane_preset: e must be >= 2");
    if (d % e != 0) throw std::invalid_argument("nc_plane_preset: e must divide d");
    if (gcd_int(q, Int(d)) != 1)
        throw std::invalid_argument("nc_plane_preset: q must be coprime to d");
    LData p2 = weil::ldata_p2(q);
    OrderSpec spec{q, d, p2, {}, p2, std::nullopt, "", false};
    // recorded, not enforced: F_q has the primitive d-th roots of unity the
    // construction wants iff d | q - 1
    spec.primitive_droot_available = ((q - 1) % d == 0);
    switch (kind) {
        case NcPlaneKind::three_lines: {
            LData y = weil::ldata_three_lines(q);
            spec.azumaya_locus = complement(p2, y);
            spec.strata = {{weil::ldata_p1(q), e},
                           {weil::ldata_affine_line(q), e},
                           {weil::ldata_punctured_affine_line(q), e}};
            spec.ratio_curve = y;
            spec.name = "three_lines";
            break;
        }
        case NcPlaneKind::conic_line: {
            LData y = weil::ldata_conic_line(q);
            spec.azumaya_locus = complement(p2, y);
            spec.strata = {{weil::ldata_p1(q), e},
                           {weil::ldata_punctured_affine_line(q), e}};
            spec.ratio_curve = y;
            spec.name = "conic_line";
            break;
        }
        case NcPlaneKind::nodal_cubic: {
            LData y = weil::ldata_nodal_cubic(q);
            spec.azumaya_locus = complement(p2, y);
            spec.strata = {{disjoint_union(weil::ldata_punctured_affine_line(q),
                                           weil::ldata_point(q)),
                            e}};
            spec.ratio_curve = y;
            spec.name = "nodal_cubic";
            break;
        }
        case NcPlaneKind::sklyanin: {
            if (d != e)
                throw std::invalid_argument("nc_plane_preset: Sklyanin orders have d = e");
            LData y = weil::ldata_elliptic(q, sklyanin_trace);
            spec.azumaya_locus = complement(p2, y);
            spec.strata = {{y, e}};  // cover has the same L-polynomial
            spec.ratio_curve = y;
            spec.name = "sklyanin";
            break;
        }
    }
    spec.validate();
    return spec;
}

}  // namespace ozeta::global
