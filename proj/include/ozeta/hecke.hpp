#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/series.hpp"

namespace ozeta::hecke {

/// Generator z^i(t_j) of the free commutative monoid on the graded simple
/// classes: i >= 0 is the z-adic degree, j in 0..g-1 indexes the simple.
struct Generator {
    unsigned i = 0;
    unsigned j = 0;
    bool operator<(const Generator& o) const { return i != o.i ? i < o.i : j < o.j; }
    bool operator==(const Generator& o) const { return i == o.i && j == o.j; }
};

/// Monomial in the generators z^i(t_j), stored sorted by (i, j) with positive
/// exponents, which fixes the printed form.
class LMonomial {
public:
    LMonomial() = default;

    static LMonomial generator(unsigned i, unsigned j) {
        LMonomial m;
        m.e_.emplace_back(Generator{i, j}, 1u);
        return m;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [g, e] : e_) d += e;
        return d;
    }
    bool empty() const { return e_.empty(); }
    const std::vector<std::pair<Generator, unsigned>>& exponents() const { return e_; }

    friend LMonomial operator*(const LMonomial& a, const LMonomial& b) {
        LMonomial m;
        std::size_t ia = 0, ib = 0;
        while (ia < a.e_.size() || ib < b.e_.size()) {
            if (ib == b.e_.size() || (ia < a.e_.size() && a.e_[ia].first < b.e_[ib].first))
                m.e_.push_back(a.e_[ia++]);
            else if (ia == a.e_.size() || b.e_[ib].first < a.e_[ia].first)
                m.e_.push_back(b.e_[ib++]);
            else {
                m.e_.emplace_back(a.e_[ia].first, a.e_[ia].second + b.e_[ib].second);
                ++ia, ++ib;
            }
        }
        return m;
    }

    /// split m = m_0 * m_{>0} into the i = 0 part and the i > 0 part
    std::pair<LMonomial, LMonomial> split_degree_zero() const {
        LMonomial m0, mpos;
        for (const auto& ge : e_) (ge.first.i == 0 ? m0.e_ : mpos.e_).push_back(ge);
        return {m0, mpos};
    }

    /// the generator shift z: z^i(t_j) -> z^{i+1}(t_j)
    LMonomial shifted() const {
        LMonomial m = *this;
        for (auto& [g, e] : m.e_) ++g.i;
        return m;
    }

    LMonomial pow(unsigned k) const {
        LMonomial m = *this;
        if (k == 0) return {};
        for (auto& [g, e] : m.e_) e *= k;
        return m;
    }

    bool operator<(const LMonomial& o) const { return e_ < o.e_; }
    bool operator==(const LMonomial& o) const { return e_ == o.e_; }

    std::string str() const {
        if (e_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [g, e] : e_) {
            if (!first) os << "*";
            if (g.i == 0)
                os << "t" << (g.j + 1);
            else if (g.i == 1)
                os << "z(t" << (g.j + 1) << ")";
            else
                os << "z" << g.i << "(t" << (g.j + 1) << ")";
            if (e > 1) os << "^" << e;
            first = false;
        }
        return os.str();
    }

private:
    std::vector<std::pair<Generator, unsigned>> e_;
};

/// Multiplicative character chi on the monoid generators plus the permutation
/// sigma induced by conjugation by z. chi is stored by its values on the
/// degree-zero generators t_j and extended to z^i(t_j) by the sigma^i twist;
/// the matrix-shape default is the constant q^r.
class ChiSpec {
public:
    ChiSpec(std::vector<Int> values, std::vector<unsigned> sigma)
        : values_(std::move(values)), sigma_(std::move(sigma)) {
        if (values_.empty() || values_.size() != sigma_.size())
            throw std::invalid_argument("ChiSpec: need one chi value and sigma image per simple");
        std::vector<bool> seen(sigma_.size(), false);
        for (unsigned v : sigma_) {
            if (v >= sigma_.size() || seen[v])
                throw std::invalid_argument("ChiSpec: sigma is not a permutation");
            seen[v] = true;
        }
        for (const auto& v : values_)
            if (v <= 0) throw std::invalid_argument("ChiSpec: chi values must be positive");
    }

    static ChiSpec constant(const Int& value, unsigned g, std::vector<unsigned> sigma = {}) {
        if (sigma.empty()) {
            sigma.resize(g);
            std::iota(sigma.begin(), sigma.end(), 0u);
        }
        return ChiSpec(std::vector<Int>(g, value), std::move(sigma));
    }

    unsigned g() const { return static_cast<unsigned>(values_.size()); }
    unsigned sigma(unsigned j) const { return sigma_[j]; }
    unsigned sigma_pow(unsigned i, unsigned j) const {
        for (unsigned k = 0; k < i % order(); ++k) j = sigma_[j];
        return j;
    }

    Int chi_generator(const Generator& g_) const { return values_[sigma_pow(g_.i, g_.j)]; }

    Int chi(const LMonomial& m) const {
        Int v = 1;
        for (const auto& [g_, e] : m.exponents()) v *= pow_int(chi_generator(g_), e);
        return v;
    }

private:
    unsigned order() const {
        // order of sigma as a permutation
        std::vector<unsigned> cur(sigma_.size());
        std::iota(cur.begin(), cur.end(), 0u);
        for (unsigned n = 1;; ++n) {
            for (auto& x : cur) x = sigma_[x];
            bool id = true;
            for (unsigned j = 0; j < cur.size(); ++j) id = id && cur[j] == j;
            if (id) return n;
        }
    }

    std::vector<Int> values_;
    std::vector<unsigned> sigma_;
};

/// Element of the completed monoid ring, truncated by total degree.
class LSeries {
public:
    explicit LSeries(unsigned max_degree) : d_(max_degree) {}

    static LSeries one(unsigned max_degree) {
        LSeries s(max_degree);
        s.c_[LMonomial{}] = 1;
        return s;
    }

    unsigned max_degree() const { return d_; }
    const std::map<LMonomial, Rat>& terms() const { return c_; }

    Rat coeff(const LMonomial& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? Rat(0) : it->second;
    }
    void add_term(const LMonomial& m, const Rat& v) {
        if (m.total_degree() > d_ || v == 0) return;
        auto [it, fresh] = c_.emplace(m, v);
        if (!fresh) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    friend LSeries operator+(const LSeries& a, const LSeries& b) {
        LSeries s(std::min(a.d_, b.d_));
        for (const auto& [m, v] : a.c_) s.add_term(m, v);
        for (const auto& [m, v] : b.c_) s.add_term(m, v);
        return s;
    }
    friend LSeries operator*(const LSeries& a, const LSeries& b) {
        LSeries s(std::min(a.d_, b.d_));
        for (const auto& [ma, va] : a.c_) {
            if (ma.total_degree() > s.d_) continue;
            for (const auto& [mb, vb] : b.c_) {
                if (ma.total_degree() + mb.total_degree() > s.d_) continue;
                s.add_term(ma * mb, va * vb);
            }
        }
        return s;
    }
    LSeries& operator*=(const LSeries& o) { return *this = *this * o; }

    /// (1 - c m)^{-1} = sum_k c^k m^k, for a nonempty monomial m.
    static LSeries geometric(const Rat& c, const LMonomial& m, unsigned max_degree) {
        if (m.empty()) throw std::invalid_argument("LSeries::geometric: monomial must be nonempty");
        LSeries s(max_degree);
        Rat ck = 1;
        for (unsigned k = 0; k * m.total_degree() <= max_degree; ++k) {
            s.add_term(m.pow(k), ck);
            ck *= c;
        }
        return s;
    }

    bool operator==(const LSeries& o) const { return d_ == o.d_ && c_ == o.c_; }

private:
    unsigned d_;
    std::map<LMonomial, Rat> c_;
};

/// The operator Xi on a single monomial: m = m_0 m_{>0} maps to
/// (chi(z(m)) / chi(m_{>0})) * m_0 z(m). Returned as (scalar, monomial).
inline std::pair<Rat, LMonomial> xi(const LMonomial& m, const ChiSpec& chi) {
    auto [m0, mpos] = m.split_degree_zero();
    LMonomial zm = m.shifted();
    Rat scalar = Rat(chi.chi(zm)) / Rat(chi.chi(mpos));
    return {scalar, m0 * zm};
}

/// Xi extended to LSeries as a continuous ring endomorphism.
inline LSeries xi(const LSeries& s, const ChiSpec& chi) {
    LSeries out(s.max_degree());
    for (const auto& [m, v] : s.terms()) {
        auto [scalar, mm] = xi(m, chi);
        out.add_term(mm, v * scalar);
    }
    return out;
}

/// rho: z^i(t_j) -> sigma^i(t_j), landing in the degree-zero submonoid.
inline LMonomial rho(const LMonomial& m, const ChiSpec& chi) {
    LMonomial out;
    for (const auto& [g, e] : m.exponents()) {
        LMonomial gen = LMonomial::generator(0, chi.sigma_pow(g.i, g.j));
        out = out * gen.pow(e);
    }
    return out;
}

inline LSeries rho(const LSeries& s, const ChiSpec& chi) {
    LSeries out(s.max_degree());
    for (const auto& [m, v] : s.terms()) out.add_term(rho(m, chi), v);
    return out;
}

/// rho': t_j -> t^r, collapsing a degree-zero LSeries to a one-variable
/// series; the image of a degree-s monomial sits in t-degree r*s.
inline QSeries rho_prime(const LSeries& s, unsigned r) {
    if (r == 0) throw std::invalid_argument("rho_prime: r must be >= 1");
    QSeries out(s.max_degree() * r);
    for (const auto& [m, v] : s.terms()) {
        for (const auto& [g, e] : m.exponents())
            if (g.i != 0)
                throw std::invalid_argument("rho_prime: series must lie in the t_j submonoid");
        unsigned deg = m.total_degree() * r;
        out.set_coeff(deg, out.coeff(deg) + v);
    }
    return out;
}

/// prod_{k=0}^{n-1} Xi^k(Zbar) truncated at total degree D. The factor at
/// level k is 1 + (terms of degree > k), so the product stabilizes in degree
/// <= D once n exceeds D.
inline LSeries partial_product(const LSeries& zbar, const ChiSpec& chi, unsigned n, unsigned D) {
    if (zbar.coeff(LMonomial{}) != 1)
        throw std::invalid_argument("partial_product: Zbar must have constant term 1");
    LSeries result = LSeries::one(D);
    LSeries cur = zbar;
    for (unsigned k = 0; k < n; ++k) {
        if (k > D) break;  // stabilized
        result = result * cur;
        if (k + 1 < n) cur = xi(cur, chi);
    }
    return result;
}

/// The multi-parameter zeta function of the slice theorem: rho applied to the
/// stabilized partial product.
inline LSeries multi_param_zeta(const ChiSpec& chi, const LSeries& zbar, unsigned D) {
    return rho(partial_product(zbar, chi, D + 1, D), chi);
}

/// Hey's formula as an LSeries in t_1..t_g bar-zeta input for matrix shapes:
/// prod_{i=1}^{g} prod_{j=0}^{r-1} (1 - q^j t_i)^{-1}.
inline LSeries hey_lseries(const Int& q, unsigned r, unsigned g, unsigned D) {
    LSeries out = LSeries::one(D);
    for (unsigned i = 0; i < g; ++i) {
        for (unsigned j = 0; j < r; ++j)
            out *= LSeries::geometric(Rat(pow_int(q, j)), LMonomial::generator(0, i), D);
    }
    return out;
}

}  // namespace ozeta::hecke
