#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "ozeta/numeric.hpp"

namespace ozeta::oracle {

/// Number of ideals of index p in Z[x], counted as kernels of ring
/// surjections onto the p-element field. A quotient ring with p elements is
/// generated additively by 1, hence is Z/p, so every index-p ideal is such a
/// kernel; the surjection is pinned by the image c of x. Kernels for distinct
/// c are distinguished by evaluating x - c.
inline Int count_index_p_ideals_zx(unsigned p) {
    if (p < 2) throw std::invalid_argument("count_index_p_ideals_zx: p must be prime");
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("count_index_p_ideals_zx: p must be prime");
    // kernel fingerprint of the surjection x -> c: which of the separating
    // polynomials x - c' it contains (evaluation at c vanishes mod p);
    // two surjections share a kernel iff the fingerprints coincide
    std::set<std::vector<bool>> kernels;
    for (unsigned c = 0; c < p; ++c) {
        std::vector<bool> contains_x_minus(p);
        for (unsigned cp = 0; cp < p; ++cp) contains_x_minus[cp] = ((c + p - cp) % p == 0);
        kernels.insert(contains_x_minus);
    }
    return Int(kernels.size());
}

}  // namespace ozeta::oracle
