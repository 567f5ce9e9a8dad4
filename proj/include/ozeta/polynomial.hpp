#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ozeta/numeric.hpp"

namespace ozeta {

/// Dense univariate polynomial with exact rational coefficients.
/// The formal variable is anonymous; a name is supplied only when printing.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Rat v) { return Polynomial({std::move(v)}); }
    static Polynomial monomial(const Rat& v, std::size_t deg) {
        std::vector<Rat> c(deg + 1);
        c[deg] = v;
        return Polynomial(std::move(c));
    }
    static Polynomial from_ints(const std::vector<long long>& v) {
        std::vector<Rat> c;
        c.reserve(v.size());
        for (auto x : v) c.emplace_back(x);
        return Polynomial(std::move(c));
    }

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_integral() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return is_integer(r); });
    }

    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(s * t^b): substitution used to realize t -> q^a t^b on zeta factors.
    Polynomial compose_scaled(const Rat& s, std::size_t b) const {
        if (b == 0) throw std::invalid_argument("compose_scaled: b must be >= 1");
        std::vector<Rat> out(c_.empty() ? 0 : (c_.size() - 1) * b + 1);
        Rat sk = 1;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] != 0) out[k * b] = c_[k] * sk;
            sk *= s;
        }
        return Polynomial(std::move(out));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const Polynomial& a, const Rat& s) {
        Polynomial r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(1), b = *this;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rat a = c_[k];
            if (!first) os << (a > 0 ? " + " : " - ");
            else if (a < 0) os << "-";
            Rat mag = a > 0 ? a : Rat(-a);
            if (mag != 1 || k == 0) os << mag.str();
            if (k >= 1) {
                if (mag != 1) os << "*";
                os << var;
                if (k >= 2) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

/// 1 - c t^b
inline Polynomial one_minus_power(const Rat& c, std::size_t b) {
    std::vector<Rat> v(b + 1);
    v[0] = 1;
    v[b] = -c;
    return Polynomial(std::move(v));
}

}  // namespace ozeta
