#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/polynomial.hpp"
#include "ozeta/rational_function.hpp"

namespace ozeta::weil {

/// One weight-graded factor of a stratum's L-data. The factor contributes
/// poly^((-1)^{weight+1} * mult) to the Serre zeta function and
/// mult * deg(poly) to the weight-w Weil-Betti number. Genuine varieties have
/// mult >= 1 throughout; stratification arithmetic (complements) produces
/// negative mult and the L-data is then flagged virtual.
struct LFactor {
    int weight = 0;           // 0..4
    Polynomial poly;          // integer coefficients, poly(0) = 1
    long long mult = 1;       // signed multiplicity, never 0

    bool operator<(const LFactor& o) const {
        if (weight != o.weight) return weight < o.weight;
        if (mult != o.mult) return mult < o.mult;
        return poly.coeffs() < o.poly.coeffs();
    }
};

struct WeilPoincarePolynomial {
    std::array<long long, 5> b{};  // Weil-Betti numbers b^W_0..b^W_4

    long long euler_characteristic() const { return b[0] - b[1] + b[2] - b[3] + b[4]; }
    Polynomial as_poly() const {
        std::vector<Rat> c(5);
        for (int w = 0; w < 5; ++w) c[w] = Rat(b[w]);
        return Polynomial(std::move(c));
    }
    /// P evaluated at -z^k, as a polynomial in z.
    Polynomial at_minus_z_pow(unsigned k) const {
        std::vector<Rat> c(4 * k + 1);
        for (int w = 0; w < 5; ++w) c[static_cast<std::size_t>(w) * k] = Rat(b[w]) * ((w % 2) ? -1 : 1);
        return Polynomial(std::move(c));
    }
    bool operator==(const WeilPoincarePolynomial& o) const { return b == o.b; }
};

using PointCountSequence = std::vector<Int>;  // counts for k = 1..K
using ClosedPointCensus = std::vector<Int>;   // a_k for k = 1..K

/// Power sums of the inverse roots of P(t) = 1 + c_1 t + ... + c_m t^m via
/// Newton's identities on the coefficients; no algebraic numbers appear.
inline std::vector<Int> newton_power_sums(const Polynomial& p, unsigned K) {
    if (!p.is_integral() || p.coeff(0) != 1)
        throw std::invalid_argument("newton_power_sums: polynomial must be integral with P(0)=1");
    int m = p.degree();
    std::vector<Int> c(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[i] = numerator(p.coeff(i));
    std::vector<Int> ps(K + 1, Int(0));
    for (unsigned k = 1; k <= K; ++k) {
        // p_k + c_1 p_{k-1} + ... + c_{k-1} p_1 + k c_k = 0   (k <= m)
        // p_k + c_1 p_{k-1} + ... + c_m p_{k-m}         = 0   (k  > m)
        Int acc = 0;
        for (unsigned i = 1; i < k && i <= static_cast<unsigned>(m); ++i)
            acc += c[i] * ps[k - i];
        if (k <= static_cast<unsigned>(m)) acc += Int(k) * c[k];
        ps[k] = -acc;
    }
    return ps;
}

/// A stratum of a variety over F_q encoded as signed weight-graded integer
/// polynomial factors. Single source of point counts, Serre zeta functions
/// and Weil-Poincare polynomials.
class LData {
public:
    LData(Int q, std::vector<LFactor> factors, bool is_virtual = false, std::string name = {})
        : q_(std::move(q)), factors_(std::move(factors)), virtual_(is_virtual),
          name_(std::move(name)) {
        for (const auto& f : factors_) {
            if (f.weight < 0 || f.weight > 4)
                throw std::invalid_argument("LData: weight must be in 0..4");
            if (f.poly.coeff(0) != 1) throw std::invalid_argument("LData: P_w(0) must equal 1");
            if (!f.poly.is_integral())
                throw std::invalid_argument("LData: factor coefficients must be integers");
            if (f.mult == 0) throw std::invalid_argument("LData: zero multiplicity factor");
        }
        normalize();
    }

    const Int& q() const { return q_; }
    const std::vector<LFactor>& factors() const { return factors_; }
    bool is_virtual() const { return virtual_; }
    const std::string& name() const { return name_; }

    PointCountSequence point_counts(unsigned K) const {
        PointCountSequence counts(K, Int(0));
        for (const auto& f : factors_) {
            auto ps = newton_power_sums(f.poly, K);
            int sign = (f.weight % 2) ? -1 : 1;
            for (unsigned k = 1; k <= K; ++k) counts[k - 1] += Int(sign) * Int(f.mult) * ps[k];
        }
        return counts;
    }

    RationalFunction serre_zeta() const {
        RationalFunction z;
        for (const auto& f : factors_) {
            long e = ((f.weight % 2) ? 1 : -1) * f.mult;
            z *= RationalFunction::from_poly(f.poly).pow(e);
        }
        return z;
    }

    /// Number of closed points per degree via Moebius inversion of the point
    /// counts. Refuses virtual L-data unless all counts come out nonnegative.
    ClosedPointCensus closed_point_census(unsigned K) const {
        auto counts = point_counts(K);
        ClosedPointCensus a(K, Int(0));
        for (unsigned k = 1; k <= K; ++k) {
            // k a_k = sum_{d|k} mu(k/d) |Y(F_{q^d})|
            Int acc = 0;
            for (unsigned d = 1; d <= k; ++d) {
                if (k % d != 0) continue;
                acc += Int(mobius(k / d)) * counts[d - 1];
            }
            if (acc % k != 0)
                throw std::domain_error("closed_point_census: non-integral count at degree " +
                                        std::to_string(k));
            a[k - 1] = acc / k;
            if (a[k - 1] < 0)
                throw std::domain_error(
                    "closed_point_census: negative census at degree " + std::to_string(k) +
                    "; L-data does not represent a variety");
        }
        return a;
    }

    WeilPoincarePolynomial weil_poincare() const {
        WeilPoincarePolynomial p;
        for (const auto& f : factors_)
            p.b[static_cast<std::size_t>(f.weight)] += f.mult * f.poly.degree();
        return p;
    }

    friend LData disjoint_union(const LData& a, const LData& b) {
        if (a.q_ != b.q_) throw std::invalid_argument("disjoint_union: base field mismatch");
        std::vector<LFactor> fs = a.factors_;
        fs.insert(fs.end(), b.factors_.begin(), b.factors_.end());
        return LData(a.q_, std::move(fs), a.virtual_ || b.virtual_,
                     a.name_ + " + " + b.name_);
    }

    /// X minus Y; tagged virtual unless census nonnegativity holds to the
    /// probe depth.
    friend LData complement(const LData& x, const LData& y, unsigned probe_depth = 6) {
        if (x.q_ != y.q_) throw std::invalid_argument("complement: base field mismatch");
        std::vector<LFactor> fs = x.factors_;
        for (auto f : y.factors_) {
            f.mult = -f.mult;
            fs.push_back(f);
        }
        LData out(x.q_, std::move(fs), true, x.name_ + " - " + y.name_);
        try {
            out.closed_point_census(probe_depth);
            out.virtual_ = false;
        } catch (const std::domain_error&) {
            out.virtual_ = true;
        }
        return out;
    }

    bool operator==(const LData& o) const {
        // compare as weight-graded factor multisets
        auto key = [](const LData& l) {
            auto v = l.factors_;
            std::sort(v.begin(), v.end());
            return v;
        };
        if (q_ != o.q_) return false;
        auto va = key(*this), vb = key(o);
        if (va.size() != vb.size()) return false;
        for (std::size_t i = 0; i < va.size(); ++i)
            if (va[i].weight != vb[i].weight || va[i].mult != vb[i].mult ||
                !(va[i].poly == vb[i].poly))
                return false;
        return true;
    }

    static int mobius(unsigned n) {
        int result = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                result = -result;
            }
        }
        if (n > 1) result = -result;
        return result;
    }

private:
    // merge identical (weight, poly) factors; drop factors that cancel
    void normalize() {
        std::map<std::pair<int, std::vector<Rat>>, long long> acc;
        std::map<std::pair<int, std::vector<Rat>>, Polynomial> polys;
        for (const auto& f : factors_) {
            auto key = std::make_pair(f.weight, f.poly.coeffs());
            acc[key] += f.mult;
            polys.emplace(key, f.poly);
        }
        factors_.clear();
        for (const auto& [key, m] : acc) {
            if (m == 0) continue;
            if (polys.at(key).degree() == 0) continue;  // poly == 1 contributes nothing
            factors_.push_back(LFactor{key.first, polys.at(key), m});
        }
    }

    Int q_;
    std::vector<LFactor> factors_;
    bool virtual_;
    std::string name_;
};

// --- catalog ----------------------------------------------------------------

inline Polynomial one_minus(const Rat& c) { return one_minus_power(c, 1); }

inline LData ldata_point(const Int& q) {
    return LData(q, {{0, one_minus(1), 1}}, false, "point");
}
inline LData ldata_affine_line(const Int& q) {
    return LData(q, {{2, one_minus(Rat(q)), 1}}, false, "A1");
}
inline LData ldata_punctured_affine_line(const Int& q) {
    return LData(q, {{2, one_minus(Rat(q)), 1}, {0, one_minus(1), -1}}, false, "A1-pt");
}
inline LData ldata_p1(const Int& q) {
    return LData(q, {{0, one_minus(1), 1}, {2, one_minus(Rat(q)), 1}}, false, "P1");
}
inline LData ldata_p2(const Int& q) {
    return LData(q,
                 {{0, one_minus(1), 1}, {2, one_minus(Rat(q)), 1}, {4, one_minus(Rat(q * q)), 1}},
                 false, "P2");
}
inline LData ldata_a2(const Int& q) {
    return LData(q, {{4, one_minus(Rat(q * q)), 1}}, false, "A2");
}
inline LData ldata_elliptic(const Int& q, const Int& trace) {
    // weight-1 factor 1 - a t + q t^2
    Polynomial l({Rat(1), -Rat(trace), Rat(q)});
    return LData(q, {{0, one_minus(1), 1}, {1, l, 1}, {2, one_minus(Rat(q)), 1}}, false,
                 "elliptic(a=" + trace.str() + ")");
}
inline LData ldata_genus_g_curve(const Int& q, const Polynomial& l_poly) {
    if (l_poly.coeff(0) != 1 || !l_poly.is_integral())
        throw std::invalid_argument("genus_g_curve: L-polynomial must be integral with L(0)=1");
    if (l_poly.degree() % 2 != 0)
        throw std::invalid_argument("genus_g_curve: L-polynomial must have even degree 2g");
    LData out(q, {{0, one_minus(1), 1}, {1, l_poly, 1}, {2, one_minus(Rat(q)), 1}}, false,
              "genus_g_curve");
    out.point_counts(4);  // integrality probe
    return out;
}
inline LData ldata_three_lines(const Int& q) {
    return LData(q, {{2, one_minus(Rat(q)), 3}}, false, "three_lines");
}
inline LData ldata_conic_line(const Int& q) {
    return LData(q, {{2, one_minus(Rat(q)), 2}}, false, "conic_line");
}
inline LData ldata_nodal_cubic(const Int& q) {
    return LData(q, {{2, one_minus(Rat(q)), 1}}, false, "nodal_cubic");
}

/// Product of varieties, supported when every factor polynomial is linear
/// (1 - c t): the product's Frobenius eigenvalues are the pairwise products.
/// This covers the rational catalog entries (e.g. P1 x P1).
inline LData ldata_product(const LData& a, const LData& b) {
    if (a.q() != b.q()) throw std::invalid_argument("ldata_product: base field mismatch");
    std::vector<LFactor> out;
    for (const auto& fa : a.factors()) {
        for (const auto& fb : b.factors()) {
            if (fa.poly.degree() != 1 || fb.poly.degree() != 1)
                throw std::invalid_argument(
                    "ldata_product: supported only for split L-data with linear factors");
            Rat ca = -fa.poly.coeff(1), cb = -fb.poly.coeff(1);
            out.push_back(LFactor{fa.weight + fb.weight, one_minus(ca * cb), fa.mult * fb.mult});
        }
    }
    return LData(a.q(), std::move(out), a.is_virtual() || b.is_virtual(),
                 a.name() + " x " + b.name());
}

inline LData catalog(const std::string& name, const Int& q, const Int& param = 0) {
    if (name == "point") return ldata_point(q);
    if (name == "affine_line" || name == "A1") return ldata_affine_line(q);
    if (name == "punctured_affine_line" || name == "Gm") return ldata_punctured_affine_line(q);
    if (name == "P1") return ldata_p1(q);
    if (name == "P2") return ldata_p2(q);
    if (name == "A2") return ldata_a2(q);
    if (name == "elliptic") return ldata_elliptic(q, param);
    if (name == "three_lines") return ldata_three_lines(q);
    if (name == "conic_line") return ldata_conic_line(q);
    if (name == "nodal_cubic") return ldata_nodal_cubic(q);
    if (name == "P1xP1") return ldata_product(ldata_p1(q), ldata_p1(q));
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
}

}  // namespace ozeta::weil
