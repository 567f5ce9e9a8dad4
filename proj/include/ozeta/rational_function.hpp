#pragma once

#include <stdexcept>
#include <string>

#include "ozeta/polynomial.hpp"
#include "ozeta/series.hpp"

namespace ozeta {

/// Quotient of polynomials in t with den(0) = 1, so expansion to any order is
/// well defined and exact. No gcd reduction is performed; equality is decided
/// by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(Polynomial::constant(1)), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.coeff(0) != 1)
            throw std::invalid_argument("RationalFunction: denominator must have constant term 1");
    }
    static RationalFunction from_poly(Polynomial p) {
        return RationalFunction(std::move(p), Polynomial::constant(1));
    }
    static RationalFunction one() { return {}; }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.coeff(0) != 1)
            throw std::invalid_argument(
                "RationalFunction: division requires numerator constant term 1");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long e) const {
        if (e >= 0)
            return RationalFunction(num_.pow(static_cast<unsigned>(e)),
                                    den_.pow(static_cast<unsigned>(e)));
        if (num_.coeff(0) != 1)
            throw std::invalid_argument(
                "RationalFunction::pow: negative power requires numerator constant term 1");
        return RationalFunction(den_.pow(static_cast<unsigned>(-e)),
                                num_.pow(static_cast<unsigned>(-e)));
    }

    /// t -> scale * t^power
    RationalFunction substitute(const Rat& scale, unsigned power) const {
        if (power == 0) throw std::invalid_argument("substitute: power must be >= 1");
        return RationalFunction(num_.compose_scaled(scale, power),
                                den_.compose_scaled(scale, power));
    }

    QSeries expand(unsigned N) const {
        QSeries n(N), d(N);
        for (unsigned k = 0; k <= N; ++k) {
            n.set_coeff(k, num_.coeff(k));
            d.set_coeff(k, den_.coeff(k));
        }
        return n * d.invert();
    }

    bool operator==(const RationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    std::string str(const std::string& var = "t") const {
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    Polynomial num_, den_;
};

/// t -> q^a t^b on a rational function (exact, rational scale for a < 0).
inline RationalFunction substitute_qab(const RationalFunction& f, const Int& q, long a,
                                       unsigned b) {
    if (b == 0) throw std::invalid_argument("substitute_qab: b must be >= 1");
    return f.substitute(pow_rat(Rat(q), a), b);
}

}  // namespace ozeta
