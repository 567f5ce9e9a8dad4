#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ozeta::oracle {

/// Small finite field F_q for q in {2, 3, 4, 9}, table-driven. Elements are
/// 0..q-1; for q = p^2 the element a*p + b represents a*w + b where w is a
/// root of the fixed irreducible quadratic (w^2+w+1 over F_2, w^2+1 over F_3).
class GF {
public:
    static GF make(unsigned q) {
        switch (q) {
            case 2: return GF(2, 2, 1);
            case 3: return GF(3, 3, 1);
            case 4: return GF(4, 2, 2);
            case 9: return GF(9, 3, 2);
            default: throw std::invalid_argument("GF: supported sizes are 2, 3, 4, 9");
        }
    }

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned degree() const { return k_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a * q_ + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a * q_ + neg_[b]]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a * q_ + b]; }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("GF::inv: zero");
        return inv_[a];
    }
    uint8_t from_int(long v) const {
        // canonical embedding of prime-field integers
        long r = v % static_cast<long>(p_);
        if (r < 0) r += p_;
        return static_cast<uint8_t>(r);
    }

    bool operator==(const GF& o) const { return q_ == o.q_; }

private:
    GF(unsigned q, unsigned p, unsigned k) : q_(q), p_(p), k_(k) {
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.resize(q);
        for (unsigned a = 0; a < q; ++a)
            for (unsigned b = 0; b < q; ++b) {
                add_[a * q + b] = static_cast<uint8_t>(field_add(a, b));
                mul_[a * q + b] = static_cast<uint8_t>(field_mul(a, b));
            }
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                if (add_[a * q + b] == 0) neg_[a] = static_cast<uint8_t>(b);
                if (a != 0 && mul_[a * q + b] == 1) inv_[a] = static_cast<uint8_t>(b);
            }
        }
    }

    unsigned field_add(unsigned a, unsigned b) const {
        if (k_ == 1) return (a + b) % p_;
        unsigned a1 = a / p_, a0 = a % p_, b1 = b / p_, b0 = b % p_;
        return ((a1 + b1) % p_) * p_ + (a0 + b0) % p_;
    }
    unsigned field_mul(unsigned a, unsigned b) const {
        if (k_ == 1) return (a * b) % p_;
        // (a1 w + a0)(b1 w + b0) with w^2 = w+1 over F_2, w^2 = -1 over F_3
        unsigned a1 = a / p_, a0 = a % p_, b1 = b / p_, b0 = b % p_;
        unsigned c2 = (a1 * b1) % p_;
        unsigned c1 = (a1 * b0 + a0 * b1) % p_;
        unsigned c0 = (a0 * b0) % p_;
        if (p_ == 2) {  // w^2 = w + 1
            c1 = (c1 + c2) % 2;
            c0 = (c0 + c2) % 2;
        } else {  // w^2 = -1
            c0 = (c0 + (p_ - 1) * c2) % p_;
        }
        return c1 * p_ + c0;
    }

    unsigned q_, p_, k_;
    std::vector<uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace ozeta::oracle
