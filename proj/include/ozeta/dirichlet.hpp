#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/series.hpp"

namespace ozeta {

inline std::vector<unsigned> primes_up_to(unsigned n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<unsigned> out;
    for (unsigned p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (unsigned long long k = 1ull * p * p; k <= n; k += p) sieve[k] = false;
    }
    return out;
}

/// Formal Dirichlet series sum a_n n^{-s} with exact coefficients for
/// 1 <= n <= bound. Multiplication is Dirichlet convolution truncated at the
/// bound. Euler-product assembly is supported over rational primes only.
class DirichletSeries {
public:
    explicit DirichletSeries(unsigned bound) : bound_(bound), a_(bound + 1, Rat(0)) {
        if (bound == 0) throw std::invalid_argument("DirichletSeries: bound must be >= 1");
    }

    unsigned bound() const { return bound_; }
    const Rat& a(unsigned n) const {
        if (n == 0 || n > bound_) throw std::out_of_range("DirichletSeries::a: index out of range");
        return a_[n];
    }
    void set(unsigned n, Rat v) {
        if (n == 0 || n > bound_) throw std::out_of_range("DirichletSeries::set: index out of range");
        a_[n] = std::move(v);
    }

    friend DirichletSeries dirichlet_mul(const DirichletSeries& x, const DirichletSeries& y) {
        DirichletSeries z(std::min(x.bound_, y.bound_));
        for (unsigned n = 1; n <= z.bound_; ++n) {
            Rat acc = 0;
            for (unsigned d = 1; d * d <= n; ++d) {
                if (n % d != 0) continue;
                unsigned e = n / d;
                acc += x.a_[d] * y.a_[e];
                if (d != e) acc += x.a_[e] * y.a_[d];
            }
            z.a_[n] = acc;
        }
        return z;
    }

    bool operator==(const DirichletSeries& o) const { return bound_ == o.bound_ && a_ == o.a_; }

private:
    unsigned bound_;
    std::vector<Rat> a_;
};

/// Assembles a Dirichlet series from local Euler factors. For each prime
/// p <= N the callback returns the local factor as a power series in the
/// variable u = p^{-s}, expanded at least to order floor(log_p N). Factors
/// must have constant term 1; coefficients multiply across primes.
inline DirichletSeries dirichlet_from_euler(
    unsigned N, const std::function<QSeries(unsigned p, unsigned max_exp)>& local_factor) {
    DirichletSeries out(N);
    out.set(1, Rat(1));
    for (unsigned p : primes_up_to(N)) {
        unsigned max_exp = 0;
        unsigned long long pk = 1;
        while (pk * p <= N) {
            pk *= p;
            ++max_exp;
        }
        QSeries f = local_factor(p, max_exp);
        if (f.coeff(0) != 1)
            throw std::domain_error("dirichlet_from_euler: local factor at p=" + std::to_string(p) +
                                    " must have constant term 1");
        if (f.order() < max_exp)
            throw std::domain_error("dirichlet_from_euler: local factor at p=" + std::to_string(p) +
                                    " expanded to insufficient order");
        // multiply the current coefficients by the p-local factor
        DirichletSeries local(N);
        unsigned long long q = 1;
        for (unsigned e = 0; e <= max_exp; ++e) {
            local.set(static_cast<unsigned>(q), f.coeff(e));
            q *= p;
        }
        out = dirichlet_mul(out, local);
    }
    return out;
}

}  // namespace ozeta
