#pragma once

#include <stdexcept>

#include "ozeta/numeric.hpp"
#include "ozeta/rational_function.hpp"
#include "ozeta/series.hpp"

namespace ozeta::local {

/// Shape data of a local order with a homogeneous slice: residue algebra
/// isomorphic to a product of m copies of M_r(F_q).
struct LocalOrderShape {
    Int q;
    unsigned r = 1;
    unsigned m = 1;

    void validate() const {
        if (q < 2) throw std::invalid_argument("LocalOrderShape: q must be a prime power >= 2");
        if (r < 1 || m < 1) throw std::invalid_argument("LocalOrderShape: r, m must be >= 1");
    }
};

/// Zeta function of a one-dimensional maximal order over a complete DVR:
/// prod_{j=0}^{r-1} (1 - q^j t^r)^{-m}. Colengths are F_q-dimensions of the
/// quotient, so Morita puts the coefficients in degrees divisible by r
/// (M_r(O)/I = (O^r/L)^r forces algebra colength r * lattice colength).
inline QSeries hey_zeta(const LocalOrderShape& s, unsigned N) {
    s.validate();
    RationalFunction f = RationalFunction::one();
    for (unsigned j = 0; j < s.r; ++j) {
        RationalFunction factor(Polynomial::constant(1),
                                one_minus_power(Rat(pow_int(s.q, j)), s.r));
        f *= factor.pow(static_cast<long>(s.m));
    }
    return f.expand(N);
}

/// Local zeta function of a two-dimensional order with a homogeneous slice:
/// prod_{n>=1} prod_{j=1}^{r} (1 - q^{nr-j} (t)^{nr})^{-m}, i.e. the factor at
/// level n is Hey's formula under t -> q^{nr-j} t^{nr}. For (r,m) = (1,1)
/// this is prod_n (1 - q^{n-1} t^n)^{-1}.
inline QSeries slice_zeta(const LocalOrderShape& s, unsigned N) {
    s.validate();
    return infinite_product<Rat>(N, s.r, [&](unsigned n) {
        RationalFunction f = RationalFunction::one();
        for (unsigned j = 1; j <= s.r; ++j)
            f *= RationalFunction(
                Polynomial::constant(1),
                one_minus_power(Rat(pow_int(s.q, n * s.r - j)), n * s.r));
        return f.pow(static_cast<long>(s.m)).expand(N);
    });
}

/// Local factor of a global Euler product at a closed point of degree k:
/// the slice zeta over the residue field F_{q^k}, re-expanded in t via
/// t -> t^k. The first nontrivial coefficient sits at degree k*r.
inline QSeries local_factor(unsigned k, const LocalOrderShape& s, unsigned N) {
    if (k == 0) throw std::invalid_argument("local_factor: point degree must be >= 1");
    s.validate();
    Int qk = pow_int(s.q, static_cast<long>(k));
    return infinite_product<Rat>(N, k * s.r, [&](unsigned n) {
        RationalFunction f = RationalFunction::one();
        for (unsigned j = 1; j <= s.r; ++j)
            f *= RationalFunction(
                Polynomial::constant(1),
                one_minus_power(Rat(pow_int(qk, n * s.r - j)), k * n * s.r));
        return f.pow(static_cast<long>(s.m)).expand(N);
    });
}

}  // namespace ozeta::local
