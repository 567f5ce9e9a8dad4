#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ozeta {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Floating point is not used anywhere in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow_int(const Int& base, long e) {
    if (e < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int r = 1, b = base;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

// base^e with e possibly negative (result rational).
inline Rat pow_rat(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1, b = base;
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            if (k > 1) b *= b;
        }
        return r;
    }
    if (base == 0) throw std::invalid_argument("pow_rat: zero to negative power");
    return 1 / pow_rat(base, -e);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_integer: not an integer: " + r.str());
    return numerator(r);
}

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

}  // namespace ozeta
