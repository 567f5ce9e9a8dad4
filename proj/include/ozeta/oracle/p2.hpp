#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ozeta/numeric.hpp"
#include "ozeta/gf.hpp"

namespace ozeta::oracle {

/// Rational points of P^n over F_q by direct enumeration with first-nonzero
/// normalization.
inline Int projective_point_count(const GF& F, unsigned n) {
    std::set<std::vector<uint8_t>> points;
    std::vector<uint8_t> v(n + 1, 0);
    while (true) {
        std::size_t i = 0;
        while (i < v.size() && v[i] == F.q() - 1) v[i++] = 0;
        if (i == v.size()) break;
        ++v[i];
        // normalize: scale so the first nonzero coordinate is 1
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        uint8_t inv = F.inv(v[lead]);
        std::vector<uint8_t> w(v.size());
        for (std::size_t k = 0; k < v.size(); ++k) w[k] = F.mul(inv, v[k]);
        points.insert(w);
    }
    return Int(points.size());
}

/// Number of length-n closed subschemes of P^2 over F_q, n <= 2, by
/// classifying supports:
///   n = 1: rational points;
///   n = 2: unordered pairs of distinct rational points, plus closed points of
///          degree 2 (conjugate pairs over F_{q^2}), plus a rational point
///          with a tangent direction (nonreduced length 2).
inline Int subscheme_census_p2(unsigned q, unsigned n) {
    if (n > 2) throw std::invalid_argument("subscheme_census_p2: n must be <= 2");
    if (n == 0) return 1;
    GF F = GF::make(q);
    Int n1 = projective_point_count(F, 2);
    if (n == 1) return n1;
    GF F2 = GF::make(q * q);
    Int n2 = projective_point_count(F2, 2);
    Int pairs = n1 * (n1 - 1) / 2;
    Int degree2 = (n2 - n1) / 2;
    Int tangent_dirs = projective_point_count(F, 1);  // P(T_p) = P^1(F_q)
    return pairs + degree2 + n1 * tangent_dirs;
}

}  // namespace ozeta::oracle
