#pragma once

#include <map>
#include <string>
#include <vector>

#include "ozeta/oracle/census.hpp"
#include "ozeta/oracle/finite_algebra.hpp"

namespace ozeta::oracle {

/// Truncation F_q[x, y] / m^window of the power series ring in two variables.
/// Monomial basis x^a y^b with a + b < window; rad = m; slice z = y with
/// trivial sigma. rad^n is exactly the span of monomials of degree >= n, so
/// the faithful window equals the exponent.
inline FiniteAlgebra build_power_series_2d(unsigned q, unsigned window) {
    GF F = GF::make(q);
    std::vector<std::pair<unsigned, unsigned>> basis;
    std::map<std::pair<unsigned, unsigned>, std::size_t> index;
    for (unsigned total = 0; total < window; ++total)
        for (unsigned a = 0; a <= total; ++a) {
            index[{a, total - a}] = basis.size();
            basis.emplace_back(a, total - a);
        }
    std::size_t n = basis.size();
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n, Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned a = basis[i].first + basis[j].first;
            unsigned b = basis[i].second + basis[j].second;
            if (a + b < window) prod[i][j][index[{a, b}]] = 1;
        }
    Vec unit(n, 0);
    unit[index[{0, 0}]] = 1;
    std::vector<Vec> rad;
    for (std::size_t i = 0; i < n; ++i)
        if (basis[i].first + basis[i].second >= 1) {
            Vec v(n, 0);
            v[i] = 1;
            rad.push_back(v);
        }
    std::map<std::string, Vec> named;
    Vec x(n, 0), y(n, 0);
    x[index[{1, 0}]] = 1;
    y[index[{0, 1}]] = 1;
    named["x"] = x;
    named["y"] = y;
    FiniteAlgebra alg(F, std::move(prod), std::move(unit), std::move(rad), window,
                      std::move(named));
    // y is central: sigma = identity
    Mat sigma(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) sigma[i][i] = 1;
    alg.declare_slice("y", std::move(sigma));
    return alg;
}

/// Ideal census of F_q[[x, y]] by colength: any colength-n ideal contains
/// m^n (the length-n quotient is killed by m^n by Nakayama), so the census in
/// the m^{n_max}-truncation is faithful for colengths <= n_max.
inline SubmoduleCensus count_ideals_2d(unsigned q, unsigned n_max) {
    FiniteAlgebra alg = build_power_series_2d(q, n_max == 0 ? 1 : n_max);
    return count_ideals_algebra(alg, n_max);
}

enum class SymbolParam { param_u, param_v, unit };

/// Truncation of the R-symbol Delta = (a, b)_xi over R = F_q[[u, v]]:
///   x^e = a,  y^e = b,  y x = xi x y.
///
/// Case a = u, b = v (regular system of parameters): Delta is the completed
/// skew polynomial ring with basis x^X y^Y; the rad-adic weight of x^X y^Y is
/// X + Y and rad^n is the span of monomials of weight >= n, so the faithful
/// window equals the truncation exponent.
///
/// Case a = u, b a unit (b = 1): basis x^X y^j v^L with j < e, weight X + L;
/// rad = (x, v) and the same weight argument applies.
///
/// The slice element is z = x with sigma(x^X y^Y ...) = xi^{-Y} x^X y^Y ...
inline FiniteAlgebra build_symbol(unsigned q, unsigned e, long xi_value, SymbolParam a_mode,
                                  SymbolParam b_mode, unsigned window) {
    GF F = GF::make(q);
    if (e < 2) throw std::invalid_argument("build_symbol: e must be >= 2");
    if (F.p() % e == 0 || e % F.p() == 0)
        throw std::invalid_argument("build_symbol: residue characteristic must be prime to e");
    uint8_t xi = F.from_int(xi_value);
    // primitivity of xi as an e-th root of unity
    {
        uint8_t p = 1;
        for (unsigned k = 1; k < e; ++k) {
            p = F.mul(p, xi);
            if (p == 1) throw std::invalid_argument("build_symbol: xi is not a primitive e-th root");
        }
        if (F.mul(p, xi) != 1)
            throw std::invalid_argument("build_symbol: xi^e != 1");
    }
    if (a_mode == SymbolParam::unit)
        throw std::invalid_argument("build_symbol: a must be a parameter (u or v)");
    if (a_mode == b_mode) throw std::invalid_argument("build_symbol: a and b must differ");

    if (b_mode != SymbolParam::unit) {
        // regular-parameter case: basis x^X y^Y, X + Y < window
        std::vector<std::pair<unsigned, unsigned>> basis;
        std::map<std::pair<unsigned, unsigned>, std::size_t> index;
        for (unsigned total = 0; total < window; ++total)
            for (unsigned X = 0; X <= total; ++X) {
                index[{X, total - X}] = basis.size();
                basis.emplace_back(X, total - X);
            }
        std::size_t n = basis.size();
        std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n, Vec(n, 0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto [A, B] = basis[i];
                auto [C, D] = basis[j];
                if (A + B + C + D >= window) continue;
                // (x^A y^B)(x^C y^D) = xi^{BC} x^{A+C} y^{B+D}; xi has order e
                uint8_t s = 1;
                for (unsigned k = 0; k < (B * C) % e; ++k) s = F.mul(s, xi);
                prod[i][j][index[{A + C, B + D}]] = s;
            }
        Vec unit(n, 0);
        unit[index[{0, 0}]] = 1;
        std::vector<Vec> rad;
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i].first + basis[i].second >= 1) {
                Vec v(n, 0);
                v[i] = 1;
                rad.push_back(v);
            }
        std::map<std::string, Vec> named;
        auto mono = [&](unsigned X, unsigned Y) {
            Vec v(n, 0);
            auto it = index.find({X, Y});
            if (it != index.end()) v[it->second] = 1;
            return v;
        };
        named["x"] = mono(1, 0);
        named["y"] = mono(0, 1);
        named["u"] = mono(e, 0);  // a = x^e
        named["v"] = mono(0, e);  // b = y^e
        bool swap_uv = (a_mode == SymbolParam::param_v);
        if (swap_uv) std::swap(named["u"], named["v"]);
        FiniteAlgebra alg(F, std::move(prod), std::move(unit), std::move(rad), window,
                          std::move(named));
        // sigma(x^X y^Y) = xi^{-Y} x^X y^Y  (from x * m = sigma(m) * x)
        Mat sigma(n, Vec(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            uint8_t s = 1;
            for (unsigned k = 0; k < basis[i].second % e; ++k) s = F.mul(s, F.inv(xi));
            sigma[i][i] = s;
        }
        alg.declare_slice("x", std::move(sigma));
        return alg;
    }

    // b unit case: b = 1, basis x^X y^j v^L with j < e and X + L < window
    struct Key {
        unsigned X, j, L;
        bool operator<(const Key& o) const {
            return std::tie(X, j, L) < std::tie(o.X, o.j, o.L);
        }
    };
    std::vector<Key> basis;
    std::map<Key, std::size_t> index;
    for (unsigned X = 0; X < window; ++X)
        for (unsigned L = 0; X + L < window; ++L)
            for (unsigned j = 0; j < e; ++j) {
                index[{X, j, L}] = basis.size();
                basis.push_back({X, j, L});
            }
    std::size_t n = basis.size();
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n, Vec(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t jj = 0; jj < n; ++jj) {
            const Key& a = basis[i];
            const Key& b = basis[jj];
            if (a.X + b.X + a.L + b.L >= window) continue;
            // (x^A y^B v^L)(x^C y^D v^M) = xi^{BC} x^{A+C} y^{(B+D) mod e} v^{L+M}
            uint8_t s = 1;
            for (unsigned k = 0; k < (a.j * b.X) % e; ++k) s = F.mul(s, xi);
            prod[i][jj][index[{a.X + b.X, (a.j + b.j) % e, a.L + b.L}]] = s;
        }
    Vec unit(n, 0);
    unit[index[{0, 0, 0}]] = 1;
    std::vector<Vec> rad;
    for (std::size_t i = 0; i < n; ++i)
        if (basis[i].X + basis[i].L >= 1) {
            Vec v(n, 0);
            v[i] = 1;
            rad.push_back(v);
        }
    std::map<std::string, Vec> named;
    auto mono = [&](unsigned X, unsigned j, unsigned L) {
        Vec v(n, 0);
        auto it = index.find({X, j, L});
        if (it != index.end()) v[it->second] = 1;
        return v;
    };
    named["x"] = mono(1, 0, 0);
    named["y"] = mono(0, 1, 0);
    named["u"] = mono(e, 0, 0);
    named["v"] = mono(0, 0, 1);
    FiniteAlgebra alg(F, std::move(prod), std::move(unit), std::move(rad), window,
                      std::move(named));
    Mat sigma(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        uint8_t s = 1;
        for (unsigned k = 0; k < basis[i].j % e; ++k) s = F.mul(s, F.inv(xi));
        sigma[i][i] = s;
    }
    alg.declare_slice("x", std::move(sigma));
    return alg;
}

/// The matrix-pattern overring Delta_l(x) inside M_l(Delta): entries on or
/// above the diagonal from Delta, strictly below from x Delta. The slice is
/// the cyclic shift matrix with x in the corner. The truncation ideal
/// (entries of Delta-weight >= w) lies in rad^w, so the faithful window of
/// Delta_l equals the window of the Delta truncation it was built from.
inline FiniteAlgebra build_delta_l(const FiniteAlgebra& delta, unsigned l) {
    if (l < 1) throw std::invalid_argument("build_delta_l: l must be >= 1");
    const GF& F = delta.field();
    std::size_t d = delta.dim();
    const Vec& x = delta.named("x");
    Mat rx = delta.right_mult_matrix(x);
    Subspace xdelta = image(F, delta.left_mult_matrix(x), Subspace::full(F, d));

    // basis of the pattern: (i, j, b) with b a Delta basis index, and for
    // i > j only basis elements of x*Delta (we use the image basis of L_x)
    struct Entry {
        unsigned i, j;
        Vec val;  // element of Delta
    };
    std::vector<Entry> basis;
    for (unsigned i = 0; i < l; ++i)
        for (unsigned j = 0; j < l; ++j) {
            if (i <= j) {
                for (std::size_t b = 0; b < d; ++b)
                    basis.push_back({i, j, delta.basis_vec(b)});
            } else {
                for (const auto& xb : xdelta.basis()) basis.push_back({i, j, xb});
            }
        }
    std::size_t n = basis.size();
    // coordinates of a (i, j, delta-element) matrix in this basis
    auto coords_of = [&](unsigned i, unsigned j, const Vec& v) {
        Vec out(n, 0);
        if (is_zero_vec(v)) return out;
        // find the block for (i, j) and solve in its basis
        std::size_t start = 0;
        for (; start < n; ++start)
            if (basis[start].i == i && basis[start].j == j) break;
        std::size_t len = 0;
        while (start + len < n && basis[start + len].i == i && basis[start + len].j == j) ++len;
        // solve v = sum c_k basis[start+k].val
        Mat sys(d, Vec(len, 0));
        for (std::size_t k = 0; k < len; ++k)
            for (std::size_t r = 0; r < d; ++r) sys[r][k] = basis[start + k].val[r];
        // append v as rhs via augmented elimination: solve least-structured way
        // (small dims; use kernel of [sys | -v])
        Mat aug(d, Vec(len + 1, 0));
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t k = 0; k < len; ++k) aug[r][k] = sys[r][k];
            aug[r][len] = F.neg(v[r]);
        }
        Subspace sol = kernel(F, aug);
        for (const auto& s : sol.basis()) {
            if (s[len] != 0) {
                uint8_t inv = F.inv(s[len]);
                for (std::size_t k = 0; k < len; ++k) out[start + k] = F.mul(inv, s[k]);
                return out;
            }
        }
        throw std::logic_error("build_delta_l: element does not lie in the pattern");
    };

    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n, Vec(n, 0)));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (basis[a].j != basis[b].i) continue;
            Vec v = delta.multiply(basis[a].val, basis[b].val);
            prod[a][b] = coords_of(basis[a].i, basis[b].j, v);
        }
    Vec unit(n, 0);
    {
        for (unsigned i = 0; i < l; ++i) {
            Vec c = coords_of(i, i, delta.unit());
            for (std::size_t k = 0; k < n; ++k) unit[k] = F.add(unit[k], c[k]);
        }
    }
    // radical: off-diagonal entries plus diagonal entries in rad(Delta)
    std::vector<Vec> rad;
    for (std::size_t k = 0; k < n; ++k) {
        if (basis[k].i != basis[k].j) {
            Vec v(n, 0);
            v[k] = 1;
            rad.push_back(v);
        }
    }
    for (unsigned i = 0; i < l; ++i)
        for (const auto& r : delta.radical().basis()) rad.push_back(coords_of(i, i, r));

    // slice x~ = sum_{i<l-1} e_{i,i+1} + e_{l-1,0} x
    Vec slice(n, 0);
    for (unsigned i = 0; i + 1 < l; ++i) {
        Vec c = coords_of(i, i + 1, delta.unit());
        for (std::size_t k = 0; k < n; ++k) slice[k] = F.add(slice[k], c[k]);
    }
    {
        Vec c = l == 1 ? coords_of(0, 0, x) : coords_of(l - 1, 0, x);
        for (std::size_t k = 0; k < n; ++k) slice[k] = F.add(slice[k], c[k]);
    }

    std::map<std::string, Vec> named;
    named["x"] = slice;  // the slice element of the pattern algebra
    named["x_corner"] = l == 1 ? coords_of(0, 0, x) : coords_of(l - 1, 0, x);

    FiniteAlgebra alg(F, std::move(prod), std::move(unit), std::move(rad),
                      delta.faithful_colength(), std::move(named));

    // sigma via x~ a = sigma(a) x~ , computed blockwise:
    //   (i, j, m) -> (i-1, j-1, m)                      i, j >= 1
    //   (i, 0, m) -> (i-1, l-1, m x^{-1})               i >= 1 (m in Delta x)
    //   (0, j, m) -> (l-1, j-1, x m)                    j >= 1
    //   (0, 0, m) -> (l-1, l-1, x m x^{-1})
    // where m x^{-1} denotes the unique m' with m' x = m.
    Mat sigma(n, Vec(n, 0));
    Mat lx = delta.left_mult_matrix(x);
    auto right_divide_x = [&](const Vec& m) {
        // solve m' x = m
        Mat sys(d, Vec(d + 1, 0));
        for (std::size_t c = 0; c < d; ++c) {
            Vec col = delta.multiply(delta.basis_vec(c), x);
            for (std::size_t r = 0; r < d; ++r) sys[r][c] = col[r];
        }
        for (std::size_t r = 0; r < d; ++r) sys[r][d] = F.neg(m[r]);
        Subspace sol = kernel(F, sys);
        for (const auto& s : sol.basis())
            if (s[d] != 0) {
                uint8_t inv = F.inv(s[d]);
                Vec out(d, 0);
                for (std::size_t c = 0; c < d; ++c) out[c] = F.mul(inv, s[c]);
                return out;
            }
        throw std::logic_error("build_delta_l: right division by x failed");
    };
    auto sigma_delta = [&](const Vec& m) {
        // x m x^{-1} = right_divide_x(x m)
        return right_divide_x(mat_apply(F, lx, m));
    };
    for (std::size_t k = 0; k < n; ++k) {
        unsigned i = basis[k].i, j = basis[k].j;
        const Vec& m = basis[k].val;
        Vec out;
        if (i >= 1 && j >= 1)
            out = coords_of(i - 1, j - 1, m);
        else if (i >= 1 && j == 0)
            out = coords_of(i - 1, l - 1, right_divide_x(m));
        else if (i == 0 && j >= 1)
            out = coords_of(l - 1, j - 1, mat_apply(F, lx, m));
        else
            out = coords_of(l - 1, l - 1, sigma_delta(m));
        for (std::size_t r = 0; r < n; ++r) sigma[r][k] = out[r];
    }
    alg.declare_slice("x", std::move(sigma));
    return alg;
}

/// Product of `count` truncated DVRs F_q[s]/(s^window); the direct check_slice
/// target for the forward direction of the principal-ideal criterion.
inline FiniteAlgebra build_dvr_product(unsigned q, unsigned count, unsigned window) {
    GF F = GF::make(q);
    std::size_t n = count * window;
    auto idx = [&](unsigned comp, unsigned pow) { return comp * window + pow; };
    std::vector<std::vector<Vec>> prod(n, std::vector<Vec>(n, Vec(n, 0)));
    for (unsigned c = 0; c < count; ++c)
        for (unsigned a = 0; a < window; ++a)
            for (unsigned b = 0; b < window; ++b)
                if (a + b < window) prod[idx(c, a)][idx(c, b)][idx(c, a + b)] = 1;
    Vec unit(n, 0);
    for (unsigned c = 0; c < count; ++c) unit[idx(c, 0)] = 1;
    std::vector<Vec> rad;
    for (unsigned c = 0; c < count; ++c)
        for (unsigned a = 1; a < window; ++a) {
            Vec v(n, 0);
            v[idx(c, a)] = 1;
            rad.push_back(v);
        }
    std::map<std::string, Vec> named;
    Vec s(n, 0);
    for (unsigned c = 0; c < count; ++c) s[idx(c, 1)] = 1;
    named["s"] = s;
    return FiniteAlgebra(F, std::move(prod), std::move(unit), std::move(rad), window,
                         std::move(named));
}

}  // namespace ozeta::oracle
