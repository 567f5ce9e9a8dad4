#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/polynomial.hpp"

namespace ozeta {

struct gap_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient-domain hooks for TruncatedSeries. The two domains used by the
/// library are exact rationals and polynomials in z with rational coefficients.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& c) { return c == 0; }
    static std::optional<Rat> inverse(const Rat& c) {
        if (c == 0) return std::nullopt;
        return Rat(1) / c;
    }
    static Rat from_rational(const Rat& r) { return r; }
};

template <>
struct coeff_traits<Polynomial> {
    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial::constant(1); }
    static bool is_zero(const Polynomial& c) { return c.is_zero(); }
    static std::optional<Polynomial> inverse(const Polynomial& c) {
        // units of Q[z] are the nonzero constants
        if (!c.is_constant() || c.is_zero()) return std::nullopt;
        return Polynomial::constant(Rat(1) / c.coeff(0));
    }
    static Polynomial from_rational(const Rat& r) { return Polynomial::constant(r); }
};

/// Power series in t truncated at a fixed order N, exact coefficients.
/// Binary operations on operands of different orders truncate to the minimum.
template <class C>
class TruncatedSeries {
    using traits = coeff_traits<C>;

public:
    explicit TruncatedSeries(unsigned order) : order_(order), c_(order + 1, traits::zero()) {}

    static TruncatedSeries zero(unsigned order) { return TruncatedSeries(order); }
    static TruncatedSeries one(unsigned order) {
        TruncatedSeries s(order);
        s.c_[0] = traits::one();
        return s;
    }
    static TruncatedSeries monomial(const C& coeff, unsigned deg, unsigned order) {
        TruncatedSeries s(order);
        if (deg <= order) s.c_[deg] = coeff;
        return s;
    }

    unsigned order() const { return order_; }
    const C& coeff(unsigned k) const {
        if (k > order_) throw std::out_of_range("TruncatedSeries::coeff: degree beyond truncation");
        return c_[k];
    }
    void set_coeff(unsigned k, C v) {
        if (k > order_) throw std::out_of_range("TruncatedSeries::set_coeff: degree beyond truncation");
        c_[k] = std::move(v);
    }

    bool is_one() const {
        if (traits::is_zero(c_[0]) || !(c_[0] == traits::one())) return false;
        for (unsigned k = 1; k <= order_; ++k)
            if (!traits::is_zero(c_[k])) return false;
        return true;
    }

    TruncatedSeries truncated(unsigned new_order) const {
        TruncatedSeries s(std::min(new_order, order_));
        for (unsigned k = 0; k <= s.order_; ++k) s.c_[k] = c_[k];
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (unsigned k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] + b.c_[k];
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (unsigned k = 0; k <= s.order_; ++k) s.c_[k] = a.c_[k] - b.c_[k];
        return s;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries s(std::min(a.order_, b.order_));
        for (unsigned i = 0; i <= s.order_; ++i) {
            if (traits::is_zero(a.c_[i])) continue;
            for (unsigned j = 0; i + j <= s.order_; ++j) {
                if (traits::is_zero(b.c_[j])) continue;
                s.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return s;
    }
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries operator*(const C& s) const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    /// Multiplicative inverse; requires an invertible constant term.
    TruncatedSeries invert() const {
        auto inv0 = traits::inverse(c_[0]);
        if (!inv0)
            throw std::domain_error("TruncatedSeries::invert: constant term is not a unit");
        TruncatedSeries s(order_);
        s.c_[0] = *inv0;
        for (unsigned n = 1; n <= order_; ++n) {
            C acc = traits::zero();
            for (unsigned k = 1; k <= n; ++k) acc += c_[k] * s.c_[n - k];
            s.c_[n] = (traits::zero() - acc) * *inv0;
        }
        return s;
    }

    /// exp of a series with zero constant term.
    TruncatedSeries exp() const {
        if (!traits::is_zero(c_[0]))
            throw std::domain_error("TruncatedSeries::exp: constant term must be 0");
        // n b_n = sum_{k=1..n} k a_k b_{n-k}
        TruncatedSeries s(order_);
        s.c_[0] = traits::one();
        for (unsigned n = 1; n <= order_; ++n) {
            C acc = traits::zero();
            for (unsigned k = 1; k <= n; ++k) {
                if (traits::is_zero(c_[k])) continue;
                acc += (c_[k] * s.c_[n - k]) * traits::from_rational(Rat(k));
            }
            s.c_[n] = acc * traits::from_rational(Rat(1, static_cast<int>(n)));
        }
        return s;
    }

    /// log of a series with constant term 1.
    TruncatedSeries log() const {
        if (!(c_[0] == traits::one()))
            throw std::domain_error("TruncatedSeries::log: constant term must be 1");
        // n c_n = n a_n - sum_{k=1..n-1} k c_k a_{n-k}
        TruncatedSeries s(order_);
        for (unsigned n = 1; n <= order_; ++n) {
            C acc = c_[n] * traits::from_rational(Rat(n));
            for (unsigned k = 1; k < n; ++k) {
                if (traits::is_zero(s.c_[k]) || traits::is_zero(c_[n - k])) continue;
                acc = acc - (s.c_[k] * c_[n - k]) * traits::from_rational(Rat(k));
            }
            s.c_[n] = acc * traits::from_rational(Rat(1, static_cast<int>(n)));
        }
        return s;
    }

    TruncatedSeries pow(long e) const {
        TruncatedSeries base = e >= 0 ? *this : invert();
        unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
        TruncatedSeries r = one(order_);
        while (k > 0) {
            if (k & 1) r *= base;
            if (k > 1) base *= base;
            k >>= 1;
        }
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    unsigned order_;
    std::vector<C> c_;
};

using QSeries = TruncatedSeries<Rat>;
using ZPolySeries = TruncatedSeries<Polynomial>;

/// Truncated expansion of an infinite product prod_{n>=1} f(n) where the
/// caller guarantees f(n) = 1 + O(t^{gap*n}). Only factors with gap*n <= N
/// contribute; the declared gap is verified for each expanded factor and a
/// violation signals a miscalled formula.
template <class C, class F>
TruncatedSeries<C> infinite_product(unsigned N, unsigned gap, F&& factor) {
    if (gap == 0) throw std::invalid_argument("infinite_product: gap must be >= 1");
    auto result = TruncatedSeries<C>::one(N);
    for (unsigned n = 1; n * gap <= N; ++n) {
        TruncatedSeries<C> f = factor(n);
        if (!(f.coeff(0) == coeff_traits<C>::one()))
            throw gap_violation("infinite_product: factor " + std::to_string(n) +
                                " has constant term != 1");
        for (unsigned k = 1; k < n * gap && k <= f.order(); ++k) {
            if (!coeff_traits<C>::is_zero(f.coeff(k)))
                throw gap_violation("infinite_product: factor " + std::to_string(n) +
                                    " violates declared gap at degree " + std::to_string(k));
        }
        result = result * f.truncated(N);
    }
    return result;
}

}  // namespace ozeta
